#include "nonproj/similarity.hpp"

#include "nonproj/subspace.hpp"

namespace nonproj {

namespace {

using PolyMat = std::vector<std::vector<QPoly>>;

int min_degree_entry(const PolyMat& a, int t, int& pr, int& pc) {
    int n = static_cast<int>(a.size());
    int best = -1;
    pr = pc = -1;
    for (int r = t; r < n; ++r)
        for (int c = t; c < n; ++c) {
            if (a[r][c].is_zero()) continue;
            if (best < 0 || a[r][c].degree() < best) {
                best = a[r][c].degree();
                pr = r;
                pc = c;
            }
        }
    return best;
}

}  // namespace

std::vector<QPoly> invariant_factors(const QMat& m) {
    if (m.rows() != m.cols()) throw Error("invariant factors require a square matrix");
    int n = m.rows();
    PolyMat a(n, std::vector<QPoly>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            std::vector<Rat> coeffs{-m.at(r, c)};
            if (r == c) coeffs.push_back(Rat(1));
            a[r][c] = QPoly(coeffs);
        }
    // Smith form over Q[x]
    for (int t = 0; t < n; ++t) {
        for (;;) {
            int pr, pc;
            if (min_degree_entry(a, t, pr, pc) < 0) break;
            if (pr != t) std::swap(a[pr], a[t]);
            if (pc != t)
                for (int r = 0; r < n; ++r) std::swap(a[r][pc], a[r][t]);
            bool dirty = false;
            for (int r = t + 1; r < n; ++r) {
                if (a[r][t].is_zero()) continue;
                QPoly q, rem;
                QPoly::divmod(a[r][t], a[t][t], q, rem);
                for (int c = t; c < n; ++c) a[r][c] = a[r][c] - q * a[t][c];
                if (!a[r][t].is_zero()) dirty = true;
            }
            for (int c = t + 1; c < n; ++c) {
                if (a[t][c].is_zero()) continue;
                QPoly q, rem;
                QPoly::divmod(a[t][c], a[t][t], q, rem);
                for (int r = t; r < n; ++r) a[r][c] = a[r][c] - q * a[r][t];
                if (!a[t][c].is_zero()) dirty = true;
            }
            if (dirty) continue;
            // pivot must divide the remaining block
            bool divides = true;
            for (int r = t + 1; r < n && divides; ++r)
                for (int c = t + 1; c < n && divides; ++c) {
                    if (a[r][c].is_zero()) continue;
                    QPoly q, rem;
                    QPoly::divmod(a[r][c], a[t][t], q, rem);
                    if (!rem.is_zero()) {
                        for (int cc = t; cc < n; ++cc) a[t][cc] = a[t][cc] + a[r][cc];
                        divides = false;
                    }
                }
            if (divides) break;
        }
        if (!a[t][t].is_zero()) a[t][t] = a[t][t].monic();
    }
    std::vector<QPoly> factors;
    for (int t = 0; t < n; ++t)
        if (a[t][t].degree() >= 1) factors.push_back(a[t][t]);
    return factors;
}

SimilarityResult similar(const QMat& m, const QMat& n, std::uint64_t seed) {
    if (m.rows() != m.cols() || n.rows() != n.cols()) throw Error("similar() requires square matrices");
    if (m.rows() != n.rows()) return {false, std::nullopt};
    SimilarityResult out;
    auto fm = invariant_factors(m);
    auto fn = invariant_factors(n);
    if (fm.size() != fn.size()) return out;
    for (size_t i = 0; i < fm.size(); ++i)
        if (!(fm[i] == fn[i])) return out;
    out.similar = true;

    // witness: invertible X with X m = n X
    int d = m.rows();
    QMat sys(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int eq = i * d + j;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    Rat coeff = 0;
                    if (i == a) coeff += m.at(b, j);
                    if (b == j) coeff -= n.at(i, a);
                    if (sgn(coeff) != 0) sys.at(eq, a * d + b) = coeff;
                }
        }
    Subspace ker = kernel_basis(sys);
    auto assemble = [&](const std::vector<Rat>& coeffs) {
        QMat x(d, d);
        for (int k = 0; k < ker.dim(); ++k) {
            if (sgn(coeffs[k]) == 0) continue;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) x.at(a, b) += coeffs[k] * ker.basis().at(k, a * d + b);
        }
        return x;
    };
    auto try_candidate = [&](const std::vector<Rat>& coeffs) -> bool {
        QMat x = assemble(coeffs);
        if (sgn(x.det()) == 0) return false;
        out.witness = x;
        return true;
    };
    std::vector<Rat> coeffs(ker.dim(), Rat(0));
    for (int k = 0; k < ker.dim(); ++k) {
        coeffs.assign(ker.dim(), Rat(0));
        coeffs[k] = 1;
        if (try_candidate(coeffs)) return out;
    }
    for (int k1 = 0; k1 < ker.dim(); ++k1)
        for (int k2 = k1 + 1; k2 < ker.dim(); ++k2)
            for (long s : {1L, -1L, 2L, -2L}) {
                coeffs.assign(ker.dim(), Rat(0));
                coeffs[k1] = 1;
                coeffs[k2] = Rat(s);
                if (try_candidate(coeffs)) return out;
            }
    Rng rng(seed);
    for (int attempt = 0; attempt < 400; ++attempt) {
        for (int k = 0; k < ker.dim(); ++k) coeffs[k] = Rat(rng.range(-9, 9));
        if (try_candidate(coeffs)) return out;
    }
    // invariant factors agree, so an invertible solution exists; reaching this
    // point means the search budget is exhausted
    throw Error("similarity witness search exhausted");
}

}  // namespace nonproj
