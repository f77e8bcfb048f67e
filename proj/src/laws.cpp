#include "nonproj/laws.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace nonproj {

namespace {

struct Failure {
    bool failed = false;
    std::string what;
};

}  // namespace

LawReport verify_algebra_laws(const GradedAlgebra& a, const LawOptions& opts) {
    LawReport rep;
    int n = a.total_dim();

    // unit
    rep.unit_ok = true;
    int unit = a.unit_index();
    for (int i = 0; i < n; ++i) {
        if (!(a.mul_basis(unit, i) == Elem::basis(i)) || !(a.mul_basis(i, unit) == Elem::basis(i))) {
            rep.unit_ok = false;
            rep.detail = "unit fails at " + a.label(i);
            return rep;
        }
    }

    // pair and triple lists, fixed before any parallel work
    std::vector<std::pair<int, int>> pairs;
    long all_pairs = static_cast<long>(n) * n;
    if (all_pairs <= opts.pair_budget) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (a.degree_of(i) + a.degree_of(j) <= a.top_degree()) pairs.push_back({i, j});
    } else {
        Rng rng(opts.seed);
        for (long k = 0; k < opts.pair_budget; ++k) {
            int i = static_cast<int>(rng.below(n)), j = static_cast<int>(rng.below(n));
            if (a.degree_of(i) + a.degree_of(j) <= a.top_degree()) pairs.push_back({i, j});
        }
    }
    std::vector<std::array<int, 3>> triples;
    {
        long all_triples = all_pairs * n;
        if (all_triples <= opts.triple_budget) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        if (a.degree_of(i) + a.degree_of(j) + a.degree_of(k) <= a.top_degree())
                            triples.push_back({i, j, k});
        } else {
            Rng rng(opts.seed + 1);
            while (static_cast<long>(triples.size()) < opts.triple_budget) {
                int i = static_cast<int>(rng.below(n)), j = static_cast<int>(rng.below(n)),
                    k = static_cast<int>(rng.below(n));
                if (a.degree_of(i) + a.degree_of(j) + a.degree_of(k) <= a.top_degree())
                    triples.push_back({i, j, k});
            }
        }
    }

    Failure comm_fail, assoc_fail;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 64) if (opts.parallel)
#endif
    for (long k = 0; k < static_cast<long>(pairs.size()); ++k) {
        if (comm_fail.failed) continue;
        auto [i, j] = pairs[k];
        Elem ab = a.mul_basis(i, j);
        Elem ba = a.mul_basis(j, i);
        int sign = (a.degree_of(i) % 2) && (a.degree_of(j) % 2) ? -1 : 1;
        if (!(ab == ba.scaled(Rat(sign)))) {
#if defined(_OPENMP)
#pragma omp critical
#endif
            {
                comm_fail.failed = true;
                comm_fail.what = "graded commutativity fails at (" + a.label(i) + ", " + a.label(j) + ")";
            }
        }
    }
    rep.pairs_checked = static_cast<long>(pairs.size());
    rep.comm_ok = !comm_fail.failed;
    if (!rep.comm_ok) {
        rep.detail = comm_fail.what;
        return rep;
    }

#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 16) if (opts.parallel)
#endif
    for (long t = 0; t < static_cast<long>(triples.size()); ++t) {
        if (assoc_fail.failed) continue;
        auto [i, j, k] = triples[t];
        Elem lhs = a.mul(a.mul_basis(i, j), Elem::basis(k));
        Elem rhs = a.mul(Elem::basis(i), a.mul_basis(j, k));
        if (!(lhs == rhs)) {
#if defined(_OPENMP)
#pragma omp critical
#endif
            {
                assoc_fail.failed = true;
                assoc_fail.what = "associativity fails at (" + a.label(i) + ", " + a.label(j) +
                                  ", " + a.label(k) + ")";
            }
        }
    }
    rep.triples_checked = static_cast<long>(triples.size());
    rep.assoc_ok = !assoc_fail.failed;
    if (!rep.assoc_ok) {
        rep.detail = assoc_fail.what;
        return rep;
    }

    rep.pairing_ok = true;
    if (opts.check_pairing) {
        if (n <= 400) {
            for (int d = 0; d <= a.top_degree() / 2; ++d) {
                if (a.dim(d) == 0) continue;
                QMat g = a.pairing_matrix(d);
                if (g.rows() != g.cols() || g.rank() != g.rows()) {
                    rep.pairing_ok = false;
                    rep.detail = "pairing degenerate in degree " + std::to_string(d);
                    return rep;
                }
            }
        } else {
            // sampled duality: every sampled class must pair nontrivially
            // with some complementary basis element
            Rng rng(opts.seed + 2);
            for (int s = 0; s < 60; ++s) {
                int i = static_cast<int>(rng.below(n));
                int comp = a.top_degree() - a.degree_of(i);
                bool hit = false;
                for (int j : a.basis_indices(comp)) {
                    if (sgn(a.integrate(a.mul_basis(i, j))) != 0) {
                        hit = true;
                        break;
                    }
                }
                if (!hit) {
                    rep.pairing_ok = false;
                    rep.detail = "no pairing partner found for " + a.label(i);
                    return rep;
                }
            }
        }
    }
    return rep;
}

}  // namespace nonproj
