#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nonproj/zpoly.hpp"

namespace nonproj {

enum class GaloisVerdict { Certified, Refuted, Inconclusive };

std::string to_string(GaloisVerdict v);

struct ModpWitness {
    std::uint64_t prime = 0;
    std::vector<int> pattern;
};

// Evidence that the Galois group of the splitting field acts as the full
// symmetric group on the roots, or that it cannot.
struct GaloisCertificate {
    GaloisVerdict verdict = GaloisVerdict::Inconclusive;
    int degree = 0;
    Int disc;
    std::uint64_t prime_bound = 0;
    std::string reason;

    // general path (Dedekind patterns + Jordan's criterion)
    std::optional<ModpWitness> irreducible_witness;
    std::optional<ModpWitness> transposition_witness;   // pattern [1,...,1,2]
    std::optional<ModpWitness> long_prime_cycle_witness;  // prime part > degree/2

    // degree-4 path
    std::optional<ZPoly> resolvent;  // resolvent cubic of the depressed quartic
    bool resolvent_irreducible = false;
    bool quartic_irreducible = false;
};

// Resolvent cubic y^3 - p y^2 - 4 r y + (4 p r - q^2) of x^4 + p x^2 + q x + r.
// Requires a monic depressed quartic.
ZPoly resolvent_cubic(const ZPoly& f);

// Integral depression of a monic quartic: g(y) = 4^4 f((y - a)/4) where a is
// the cubic coefficient.  Same splitting field; discriminant changes by a
// square factor.
ZPoly depress_quartic(const ZPoly& f);

// Exact irreducibility over Q for monic quartics (rational roots plus
// quadratic-factor enumeration over divisor pairs of the constant term).
// nullopt when the constant term cannot be factored at desk scale.
std::optional<bool> quartic_irreducible_over_q(const ZPoly& f);

// Rational (hence integer) roots of a monic integer polynomial.
std::vector<Int> integer_roots(const ZPoly& f);

struct CertifyOptions {
    std::uint64_t prime_bound = 1000;
    bool parallel = false;
};

// Certify that Gal(f) is the full symmetric group.  Degree 4 gets the exact
// resolvent-cubic decision; other degrees use Dedekind cycle-type witnesses
// combined through Jordan's criterion (transitive + transposition + p-cycle
// with p > deg/2 prime).  The witness scan is deterministic: witnesses are the
// smallest primes exhibiting each pattern, independent of the thread count.
GaloisCertificate certify_symmetric_galois(const ZPoly& f, const CertifyOptions& opts = {});

}  // namespace nonproj
