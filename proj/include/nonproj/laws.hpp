#pragma once

#include "nonproj/algebra.hpp"

namespace nonproj {

struct LawOptions {
    long pair_budget = 20000;    // exhaustive below, sampled above
    long triple_budget = 10000;  // per the desk-scale sampling policy
    bool parallel = false;
    std::uint64_t seed = 99;
    bool check_pairing = true;
};

struct LawReport {
    bool unit_ok = false;
    bool comm_ok = false;
    bool assoc_ok = false;
    bool pairing_ok = false;
    long pairs_checked = 0;
    long triples_checked = 0;
    std::string detail;
    bool ok() const { return unit_ok && comm_ok && assoc_ok && pairing_ok; }
};

// Graded commutativity, associativity, unit and Poincare-pairing
// nondegeneracy checks.  The sample set is fixed up front from the seed, so
// the parallel path checks exactly the same cases as the serial one.
LawReport verify_algebra_laws(const GradedAlgebra& a, const LawOptions& opts = {});

}  // namespace nonproj
