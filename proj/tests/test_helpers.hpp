#pragma once

#include "nonproj/lattice.hpp"
#include "nonproj/rational.hpp"
#include "nonproj/zpoly.hpp"

namespace nonproj::testing {

// random monic polynomial of the given degree with small coefficients
inline ZPoly random_monic(Rng& rng, int degree, long lo = -4, long hi = 4) {
    std::vector<Int> c(degree + 1);
    for (int i = 0; i < degree; ++i) c[i] = Int(rng.range(lo, hi));
    c[degree] = 1;
    return ZPoly(std::move(c));
}

// random monic polynomial satisfying condition (P) with f(0) f(1) != 0
inline ZPoly random_condition_p(Rng& rng, int degree) {
    for (;;) {
        ZPoly f = random_monic(rng, degree);
        if (sgn(f.eval(Int(0))) == 0 || sgn(f.eval(Int(1))) == 0) continue;
        if (!is_squarefree(f)) continue;
        auto prop = check_property_P(f);
        if (prop.holds) return f;
    }
}

// random unimodular integer matrix (product of elementary operations)
inline ZMat random_unimodular(Rng& rng, int n, int ops = 20) {
    ZMat m = ZMat::identity(n);
    for (int k = 0; k < ops; ++k) {
        int i = static_cast<int>(rng.below(n));
        int j = static_cast<int>(rng.below(n));
        if (i == j) continue;
        Int t(rng.range(-2, 2));
        if (sgn(t) == 0) continue;
        for (int c = 0; c < n; ++c) m.at(i, c) += t * m.at(j, c);
    }
    return m;
}

// naive cofactor-expansion determinant, the independent oracle for small sizes
inline Int cofactor_det(const ZMat& m) {
    int n = m.rows();
    if (n == 0) return Int(1);
    if (n == 1) return m.at(0, 0);
    Int acc = 0;
    for (int c = 0; c < n; ++c) {
        if (sgn(m.at(0, c)) == 0) continue;
        ZMat minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int k = 0; k < n; ++k) {
                if (k == c) continue;
                minor.at(r - 1, cc++) = m.at(r, k);
            }
        }
        Int term = m.at(0, c) * cofactor_det(minor);
        acc += (c % 2) ? -term : term;
    }
    return acc;
}

}  // namespace nonproj::testing
