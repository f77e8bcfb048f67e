#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "nonproj/zpoly.hpp"

namespace nonproj {

// Isolated complex root boxes of a polynomial satisfying condition (P):
// 2n disjoint disks, none meeting the real axis, matched into conjugate
// pairs, with one selected root per pair (the default selection takes the
// positive-imaginary member).
struct RootSystem {
    struct Box {
        std::complex<double> center;
        double radius = 0.0;
    };
    std::vector<Box> boxes;
    // pairs[k] = (i, j) with boxes[j] the conjugate partner of boxes[i]
    std::vector<std::pair<int, int>> pairs;
    // selection[k]: index into boxes of the chosen root of pair k
    std::vector<int> selection;

    int n_pairs() const { return static_cast<int>(pairs.size()); }
    std::complex<double> selected_root(int k) const { return boxes[selection[k]].center; }
};

struct IsolateOptions {
    int max_iterations = 400;
    // override: for pair k, pick the negative-imaginary member when true
    std::vector<bool> select_lower;
};

// Numeric isolation (Durand-Kerner with deterministic start, Weierstrass
// a-posteriori radii).  Fails loudly: overlapping or axis-touching boxes are
// an Error, never silently accepted.  Requires check_property_P(f).
RootSystem isolate_roots(const ZPoly& f, const IsolateOptions& opts = {});

// Advisory numeric check that the n^2 products lambda_i * conj(lambda_j) are
// pairwise distinct; returns the smallest pairwise gap found.
double eigenvalue_product_separation(const RootSystem& rs);

}  // namespace nonproj
