#include "nonproj/torus.hpp"

#include <algorithm>
#include <complex>
#include <map>

namespace nonproj {

TorusDatum build_torus(const ZPoly& f, const IsolateOptions& root_opts) {
    if (!f.is_monic()) throw Error("torus construction requires a monic polynomial");
    if (f.degree() % 2 != 0 || f.degree() == 0) throw Error("torus construction requires even degree");
    auto prop = check_property_P(f);
    if (!prop.holds) throw Error("condition (P) fails: " + prop.diagnosis);
    TorusDatum t;
    t.n = f.degree() / 2;
    t.f = f;
    t.phi = f.companion();
    t.roots = isolate_roots(f, root_opts);
    return t;
}

namespace {

LabelPair norm_pair(int a, int b) { return a < b ? LabelPair{a, b} : LabelPair{b, a}; }

bool is_mixed(const LabelPair& p, int n) {
    bool a_plain = p.first < n, b_plain = p.second < n;
    return a_plain != b_plain;
}

}  // namespace

NSOrbitReport ns_orbit_analysis(const TorusDatum& t, const GroupModel& group) {
    NSOrbitReport rep;
    rep.n = t.n;
    int labels = 2 * t.n;
    if (!group.full_symmetric) {
        if (group.generators.empty()) throw Error("group model missing: no generators supplied");
        for (const auto& g : group.generators) {
            if (static_cast<int>(g.size()) != labels)
                throw Error("generator size does not match 2n root labels");
            std::vector<bool> seen(labels, false);
            for (int v : g) {
                if (v < 0 || v >= labels || seen[v]) throw Error("generator is not a permutation");
                seen[v] = true;
            }
        }
    }

    std::vector<LabelPair> all_pairs;
    for (int a = 0; a < labels; ++a)
        for (int b = a + 1; b < labels; ++b) all_pairs.push_back({a, b});

    std::map<LabelPair, int> orbit_of;
    std::vector<std::vector<LabelPair>> orbits;
    if (group.full_symmetric) {
        // one orbit of all unordered pairs
        orbits.push_back(all_pairs);
        for (const auto& p : all_pairs) orbit_of[p] = 0;
    } else {
        for (const auto& start : all_pairs) {
            if (orbit_of.count(start)) continue;
            int id = static_cast<int>(orbits.size());
            std::vector<LabelPair> frontier{start};
            orbit_of[start] = id;
            std::vector<LabelPair> orbit{start};
            while (!frontier.empty()) {
                LabelPair p = frontier.back();
                frontier.pop_back();
                for (const auto& g : group.generators) {
                    LabelPair q = norm_pair(g[p.first], g[p.second]);
                    if (!orbit_of.count(q)) {
                        orbit_of[q] = id;
                        orbit.push_back(q);
                        frontier.push_back(q);
                    }
                }
            }
            orbits.push_back(std::move(orbit));
        }
    }

    // S = union of orbits consisting entirely of mixed pairs
    for (const auto& orbit : orbits) {
        bool all_mixed = std::all_of(orbit.begin(), orbit.end(),
                                     [&](const LabelPair& p) { return is_mixed(p, t.n); });
        bool any_mixed = std::any_of(orbit.begin(), orbit.end(),
                                     [&](const LabelPair& p) { return is_mixed(p, t.n); });
        if (any_mixed) rep.orbits.push_back(orbit);
        if (all_mixed)
            for (const auto& p : orbit) rep.stable_set.push_back(p);
    }
    std::sort(rep.stable_set.begin(), rep.stable_set.end());
    rep.ns_rank_bound = static_cast<int>(rep.stable_set.size());
    rep.product_separation = eigenvalue_product_separation(t.roots);
    return rep;
}

KernelSublattices kernel_sublattices(const ProductH1& p) {
    int m = 2 * p.n;
    ZMat pr1(m, 2 * m), pr2(m, 2 * m), diag(m, 2 * m), graph(m, 2 * m);
    ZMat phit = p.phi.transpose();
    for (int r = 0; r < m; ++r) {
        pr1.at(r, r) = 1;
        pr2.at(r, m + r) = 1;
        diag.at(r, r) = 1;
        diag.at(r, m + r) = 1;
        graph.at(r, r) = 1;
        for (int c = 0; c < m; ++c) graph.at(r, m + c) = phit.at(r, c);
    }
    KernelSublattices k;
    k.l1 = integer_kernel(pr1);
    k.l2 = integer_kernel(pr2);
    k.l3 = integer_kernel(diag);
    k.l4 = integer_kernel(graph);
    return k;
}

namespace {

// coordinates of the rows of `lat` with respect to the stacked basis [B1; B2]
struct FactorCoords {
    QMat a;  // L1-factor coordinates, one row per basis row of lat
    QMat b;  // L2-factor coordinates
};

FactorCoords factor_coords(const IntegerLattice& lat, const QMat& stacked_inv, int r1) {
    int amb = lat.ambient_rank();
    QMat rows = lat.basis().to_q();
    QMat coords = rows * stacked_inv;
    FactorCoords fc;
    fc.a = QMat(lat.rank(), r1);
    fc.b = QMat(lat.rank(), amb - r1);
    for (int r = 0; r < lat.rank(); ++r) {
        for (int c = 0; c < r1; ++c) fc.a.at(r, c) = coords.at(r, c);
        for (int c = r1; c < amb; ++c) fc.b.at(r, c - r1) = coords.at(r, c);
    }
    return fc;
}

bool unimodular(const QMat& m) {
    if (m.rows() != m.cols()) return false;
    Rat d = m.det();
    return d == 1 || d == -1;
}

}  // namespace

DecompositionReport verify_torus_decomposition(const IntegerLattice& l1, const IntegerLattice& l2,
                                               const IntegerLattice& l3, const IntegerLattice& l4) {
    DecompositionReport rep;
    int amb = l1.ambient_rank();
    if (l2.ambient_rank() != amb || l3.ambient_rank() != amb || l4.ambient_rank() != amb)
        throw Error("sublattices live in different ambients");
    ZMat stacked(l1.rank() + l2.rank(), amb);
    for (int r = 0; r < l1.rank(); ++r)
        for (int c = 0; c < amb; ++c) stacked.at(r, c) = l1.basis().at(r, c);
    for (int r = 0; r < l2.rank(); ++r)
        for (int c = 0; c < amb; ++c) stacked.at(l1.rank() + r, c) = l2.basis().at(r, c);
    rep.direct_sum = l1.rank() + l2.rank() == amb &&
                     IntegerLattice::span_of_rows(stacked) == IntegerLattice::full(amb);
    if (!rep.direct_sum) {
        rep.diagnosis = "L1 + L2 is not the full lattice";
        return rep;
    }
    QMat stacked_inv = stacked.to_q().inverse();
    auto c3 = factor_coords(l3, stacked_inv, l1.rank());
    auto c4 = factor_coords(l4, stacked_inv, l1.rank());
    rep.l3_graph = l3.rank() == l1.rank() && unimodular(c3.a) && unimodular(c3.b);
    // transposed graph of an endomorphism: isomorphic projection onto the
    // first summand, injective (possibly finite-index) image in the second
    rep.l4_second_projection = l4.rank() == l1.rank() && unimodular(c4.a) &&
                               c4.b.rank() == l4.rank();
    if (!rep.l3_graph) rep.diagnosis = "L3 does not project isomorphically onto both factors";
    else if (!rep.l4_second_projection)
        rep.diagnosis = "L4 is not the transposed graph of an endomorphism";
    else
        rep.diagnosis = "direct sum and graph positions verified";
    return rep;
}

ZMat recover_endomorphism(const IntegerLattice& l1, const IntegerLattice& l2,
                          const IntegerLattice& l3, const IntegerLattice& l4) {
    auto rep = verify_torus_decomposition(l1, l2, l3, l4);
    if (!rep.ok()) throw Error("decomposition check failed: " + rep.diagnosis);
    int amb = l1.ambient_rank();
    ZMat stacked(amb, amb);
    for (int r = 0; r < l1.rank(); ++r)
        for (int c = 0; c < amb; ++c) stacked.at(r, c) = l1.basis().at(r, c);
    for (int r = 0; r < l2.rank(); ++r)
        for (int c = 0; c < amb; ++c) stacked.at(l1.rank() + r, c) = l2.basis().at(r, c);
    QMat stacked_inv = stacked.to_q().inverse();
    auto c3 = factor_coords(l3, stacked_inv, l1.rank());
    auto c4 = factor_coords(l4, stacked_inv, l1.rank());
    // L3 identifies the factors: row-acting map S with (b coords) S = (a coords)
    QMat s = c3.b.inverse() * c3.a;
    // L4 is the transposed graph: row-acting R with (a coords) R = (b coords) S
    QMat r = c4.a.inverse() * (c4.b * s);
    // column convention for the recovered endomorphism
    QMat psi_q = r.transpose();
    ZMat psi(psi_q.rows(), psi_q.cols());
    for (int i = 0; i < psi_q.rows(); ++i)
        for (int j = 0; j < psi_q.cols(); ++j) {
            const Rat& x = psi_q.at(i, j);
            if (x.get_den() != 1)
                throw Error("recovered endomorphism is not integral");
            psi.at(i, j) = x.get_num();
        }
    return psi;
}

HodgeCompatReport hodge_compatibility(const IntegerLattice& l, const TorusDatum& t, int blocks,
                                      double tolerance) {
    HodgeCompatReport rep;
    int m = 2 * t.n;
    if (l.ambient_rank() != blocks * m) throw Error("lattice ambient does not match torus blocks");
    if (l.saturation_index() != 1) throw Error("hodge_compatibility expects a saturated lattice");

    // exact path: stability under the blockwise transpose action
    ZMat phit = t.phi.transpose();
    Subspace span = l.q_span();
    QMat mapped(l.rank(), l.ambient_rank());
    for (int r = 0; r < l.rank(); ++r)
        for (int blk = 0; blk < blocks; ++blk)
            for (int c = 0; c < m; ++c) {
                Rat s = 0;
                for (int k = 0; k < m; ++k)
                    s += Rat(phit.at(c, k)) * Rat(l.basis().at(r, blk * m + k));
                mapped.at(r, blk * m + c) = s;
            }
    bool stable = span.contains(Subspace::span_of_rows(mapped));
    if (stable) {
        rep.status = HodgeCompat::ExactStable;
        rep.detail = "lattice stable under the ambient endomorphism action; "
                     "semisimplicity gives the eigenspace splitting";
        if (l.rank() % 2 != 0) {
            rep.status = HodgeCompat::NumericFail;
            rep.detail = "odd rank cannot split into conjugate halves";
        }
        return rep;
    }

    // numeric path: dim(L_C meet H^{1,0}) should be rank/2.  H^{1,0} is
    // spanned per block by the eigenvectors of phi^T for the conjugates of
    // the selected roots.
    using C = std::complex<double>;
    std::vector<std::vector<C>> eigvecs;
    for (int k = 0; k < t.roots.n_pairs(); ++k) {
        C lambda = std::conj(t.roots.selected_root(k));
        // kernel of (phi^T - lambda I) via complex elimination
        int dim = m;
        std::vector<std::vector<C>> a(dim, std::vector<C>(dim));
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                a[r][c] = C(phit.at(r, c).get_d(), 0.0);
                if (r == c) a[r][c] -= lambda;
            }
        // eliminate; the null vector comes from back substitution on the
        // deficient column
        std::vector<int> piv_col;
        int row = 0;
        for (int col = 0; col < dim && row < dim; ++col) {
            int p = row;
            for (int r2 = row; r2 < dim; ++r2)
                if (std::abs(a[r2][col]) > std::abs(a[p][col])) p = r2;
            if (std::abs(a[p][col]) < 1e-8) continue;
            std::swap(a[p], a[row]);
            C inv = 1.0 / a[row][col];
            for (int c2 = 0; c2 < dim; ++c2) a[row][c2] *= inv;
            for (int r2 = 0; r2 < dim; ++r2) {
                if (r2 == row) continue;
                C f = a[r2][col];
                if (std::abs(f) == 0.0) continue;
                for (int c2 = 0; c2 < dim; ++c2) a[r2][c2] -= f * a[row][c2];
            }
            piv_col.push_back(col);
            ++row;
        }
        std::vector<bool> is_piv(dim, false);
        for (int c : piv_col) is_piv[c] = true;
        int free_col = -1;
        for (int c = 0; c < dim; ++c)
            if (!is_piv[c]) { free_col = c; break; }
        if (free_col < 0) {
            rep.status = HodgeCompat::Inconclusive;
            rep.detail = "numeric eigenvector extraction failed";
            return rep;
        }
        std::vector<C> v(dim, C(0, 0));
        v[free_col] = 1.0;
        for (size_t p2 = 0; p2 < piv_col.size(); ++p2) v[piv_col[p2]] = -a[p2][free_col];
        eigvecs.push_back(std::move(v));
    }
    // stack: rows = L basis (real) + per-block eigenvectors; rank defect
    // counts the intersection
    int amb = l.ambient_rank();
    int h10 = blocks * t.roots.n_pairs();
    std::vector<std::vector<C>> rows;
    for (int r = 0; r < l.rank(); ++r) {
        std::vector<C> v(amb);
        for (int c = 0; c < amb; ++c) v[c] = C(l.basis().at(r, c).get_d(), 0.0);
        rows.push_back(std::move(v));
    }
    for (int blk = 0; blk < blocks; ++blk)
        for (const auto& ev : eigvecs) {
            std::vector<C> v(amb, C(0, 0));
            for (int c = 0; c < m; ++c) v[blk * m + c] = ev[c];
            rows.push_back(std::move(v));
        }
    // numeric rank with pivot tracking
    int rank = 0;
    double min_pivot = -1, max_pivot = 0;
    int nrows = static_cast<int>(rows.size());
    for (int col = 0; col < amb && rank < nrows; ++col) {
        int p = -1;
        for (int r2 = rank; r2 < nrows; ++r2)
            if (p < 0 || std::abs(rows[r2][col]) > std::abs(rows[p][col])) p = r2;
        if (p < 0 || std::abs(rows[p][col]) < tolerance) continue;
        double piv = std::abs(rows[p][col]);
        if (min_pivot < 0 || piv < min_pivot) min_pivot = piv;
        max_pivot = std::max(max_pivot, piv);
        std::swap(rows[p], rows[rank]);
        C inv = 1.0 / rows[rank][col];
        for (int c2 = 0; c2 < amb; ++c2) rows[rank][c2] *= inv;
        for (int r2 = rank + 1; r2 < nrows; ++r2) {
            C f = rows[r2][col];
            if (std::abs(f) == 0.0) continue;
            for (int c2 = 0; c2 < amb; ++c2) rows[r2][c2] -= f * rows[rank][c2];
        }
        ++rank;
    }
    rep.margin = (min_pivot > 0 && max_pivot > 0) ? min_pivot / max_pivot : 0.0;
    int inter_dim = l.rank() + h10 - rank;
    if (rep.margin < 1e-6) {
        rep.status = HodgeCompat::Inconclusive;
        rep.detail = "numeric margin too small to trust the rank count";
        return rep;
    }
    if (inter_dim * 2 == l.rank()) {
        rep.status = HodgeCompat::NumericOk;
        rep.detail = "dim(L_C meet H^{1,0}) = rank/2 within tolerance";
    } else {
        rep.status = HodgeCompat::NumericFail;
        rep.detail = "dim(L_C meet H^{1,0}) = " + std::to_string(inter_dim) +
                     ", expected " + std::to_string(l.rank() / 2);
    }
    return rep;
}

}  // namespace nonproj
