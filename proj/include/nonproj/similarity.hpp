#pragma once

#include <optional>

#include "nonproj/matrix.hpp"
#include "nonproj/zpoly.hpp"

namespace nonproj {

// Invariant factors of xI - m over Q[x] (the nonconstant diagonal of its
// Smith form), monic, in divisibility order.  They determine the rational
// canonical (Frobenius) form, so equality decides similarity over Q.
std::vector<QPoly> invariant_factors(const QMat& m);

struct SimilarityResult {
    bool similar = false;
    // g with g * m * g^{-1} = n when similar
    std::optional<QMat> witness;
};

// Decide conjugacy over Q and produce a witness.  The witness is an
// invertible solution of X m = n X, found by a deterministic sweep through
// small coefficient combinations of a kernel basis (seeded fallback).
SimilarityResult similar(const QMat& m, const QMat& n, std::uint64_t seed = 12345);

}  // namespace nonproj
