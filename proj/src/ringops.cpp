#include "nonproj/ringops.hpp"

#include <algorithm>
#include <map>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace nonproj {

Subspace cup_kernel(const GradedAlgebra& a, const Elem& alpha, int source_degree) {
    if (alpha.is_zero()) return Subspace::full(a.dim(source_degree));
    int target = source_degree + a.degree_of(alpha);
    QMat m(a.dim(target), a.dim(source_degree));
    const auto& src = a.basis_indices(source_degree);
    for (size_t c = 0; c < src.size(); ++c) {
        Elem prod = a.mul(alpha, Elem::basis(src[c]));
        auto v = a.coords(prod, target);
        for (int r = 0; r < a.dim(target); ++r) m.at(r, static_cast<int>(c)) = v[r];
    }
    return kernel_basis(m);
}

Subspace cup_kernel_on(const GradedAlgebra& a, const Elem& alpha, const Subspace& v, int degree) {
    if (alpha.is_zero()) return v;
    int target = degree + a.degree_of(alpha);
    QMat m(a.dim(target), v.dim());
    for (int c = 0; c < v.dim(); ++c) {
        Elem x = a.from_coords(v.basis_row(c), degree);
        Elem prod = a.mul(alpha, x);
        auto coords = a.coords(prod, target);
        for (int r = 0; r < a.dim(target); ++r) m.at(r, c) = coords[r];
    }
    Subspace ker_in_v = kernel_basis(m);  // coordinates w.r.t. the V basis
    QMat rows(ker_in_v.dim(), v.ambient_dim());
    for (int r = 0; r < ker_in_v.dim(); ++r)
        for (int c = 0; c < v.dim(); ++c)
            for (int k = 0; k < v.ambient_dim(); ++k)
                rows.at(r, k) += ker_in_v.basis().at(r, c) * v.basis().at(c, k);
    return Subspace::span_of_rows(rows);
}

ExteriorMapResult exterior_subring_map(const std::shared_ptr<const GradedAlgebra>& a) {
    int b1 = a->dim(1);
    auto ext = std::make_shared<ExteriorAlgebra>(b1);
    std::vector<Elem> gens(b1);
    for (int i = 0; i < b1; ++i) gens[i] = Elem::basis(a->basis_indices(1)[i]);
    ExteriorMapResult res{AlgebraMorphism::from_generator_images(ext, a, gens), false};
    if (b1 == ext->top_degree() && ext->dim(ext->top_degree()) == 1 &&
        b1 == a->top_degree()) {
        const Elem& top = res.map.image(ext->basis_indices(ext->top_degree())[0]);
        res.top_degree_isomorphism = !top.is_zero() && a->dim(a->top_degree()) == 1;
    } else {
        // top degrees cannot match (e.g. b1 = 0 with positive top degree)
        res.top_degree_isomorphism = false;
    }
    return res;
}

GysinAdjoint::GysinAdjoint(const AlgebraMorphism& pullback)
    : pullback_(&pullback), src_(pullback.src_ptr()), dst_(pullback.dst_ptr()) {
    if (src_->top_degree() != dst_->top_degree())
        throw Error("Gysin adjoint needs equal top degrees");
}

QMat GysinAdjoint::degree_matrix(int deg) const {
    // g: dst^deg -> src^deg with <g(x), w>_src = <x, f(w)>_dst for all w in
    // src^{top-deg}
    int comp = src_->top_degree() - deg;
    QMat gsrc = src_->pairing_matrix(deg);
    if (gsrc.rows() != gsrc.cols()) throw Error("degenerate pairing block (not square)");
    QMat rhs(src_->dim(comp), dst_->dim(deg));
    const auto& didx = dst_->basis_indices(deg);
    const auto& widx = src_->basis_indices(comp);
    for (int r = 0; r < src_->dim(comp); ++r) {
        Elem fw = pullback_->image(widx[r]);
        for (size_t c = 0; c < didx.size(); ++c)
            rhs.at(r, static_cast<int>(c)) = dst_->pair(Elem::basis(didx[c]), fw);
    }
    // row w of the system reads sum_b y_b <b, w> = <x, f(w)>, i.e. G^T y = rhs
    return gsrc.transpose().inverse() * rhs;
}

Elem GysinAdjoint::apply(const Elem& e) const {
    if (e.is_zero()) return e;
    int deg = dst_->degree_of(e);
    QMat m = degree_matrix(deg);
    auto x = dst_->coords(e, deg);
    std::vector<Rat> y(src_->dim(deg));
    for (int r = 0; r < m.rows(); ++r) {
        Rat s = 0;
        for (int c = 0; c < m.cols(); ++c) s += m.at(r, c) * x[c];
        y[r] = s;
    }
    return src_->from_coords(y, deg);
}

namespace {

// sparse row-reduction bookkeeping for spans of Elems
struct SparseSpan {
    std::map<int, Elem> rows;  // pivot index -> reduced element (pivot coeff 1)

    bool insert(Elem e) {
        for (;;) {
            if (e.is_zero()) return false;
            int piv = e.terms().front().index;
            auto it = rows.find(piv);
            if (it == rows.end()) {
                Rat inv = 1 / e.terms().front().coeff;
                rows[piv] = e.scaled(inv);
                return true;
            }
            e.add_scaled(it->second, -e.terms().front().coeff);
        }
    }
    int dim() const { return static_cast<int>(rows.size()); }
};

}  // namespace

std::vector<Elem> subalgebra_degree_span(const GradedAlgebra& a, const std::vector<Elem>& gens,
                                         int degree) {
    // breadth-first by degree: span_d = gens (for their degrees) plus all
    // products span_i * gen with matching total degree
    std::map<int, std::vector<Elem>> by_deg;
    SparseSpan unit_span;
    by_deg[0] = {Elem::basis(a.unit_index())};
    std::map<int, SparseSpan> spans;
    spans[0].insert(Elem::basis(a.unit_index()));
    std::vector<int> gen_degs;
    for (const auto& g : gens) gen_degs.push_back(a.degree_of(g));
    for (int d = 1; d <= degree; ++d) {
        SparseSpan span;
        std::vector<Elem> kept;
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int gd = gen_degs[gi];
            if (gd == d && span.insert(gens[gi])) kept.push_back(gens[gi]);
            if (gd < d && by_deg.count(d - gd)) {
                for (const Elem& x : by_deg[d - gd]) {
                    Elem prod = a.mul(x, gens[gi]);
                    if (span.insert(prod)) kept.push_back(prod);
                }
            }
        }
        by_deg[d] = std::move(kept);
    }
    return by_deg[degree];
}

Subspace annihilator_of_span(const GradedAlgebra& a, const std::vector<Elem>& span, int deg) {
    // alpha with alpha . w = 0 for all w; one row block per w
    int rows_per = 0;
    std::vector<int> targets;
    for (const auto& w : span) targets.push_back(deg + a.degree_of(w));
    for (size_t k = 0; k < span.size(); ++k) rows_per += a.dim(targets[k]);
    QMat m(rows_per, a.dim(deg));
    const auto& didx = a.basis_indices(deg);
    int row0 = 0;
    for (size_t k = 0; k < span.size(); ++k) {
        for (size_t c = 0; c < didx.size(); ++c) {
            Elem prod = a.mul(Elem::basis(didx[c]), span[k]);
            auto v = a.coords(prod, targets[k]);
            for (int r = 0; r < a.dim(targets[k]); ++r)
                m.at(row0 + r, static_cast<int>(c)) = v[r];
        }
        row0 += a.dim(targets[k]);
    }
    return kernel_basis(m);
}

ObstructionSubspaces obstruction_subspaces(const GradedAlgebra& a) {
    ObstructionSubspaces res;
    int b1 = a.dim(1);
    std::vector<Elem> gens;
    for (int i : a.basis_indices(1)) gens.push_back(Elem::basis(i));
    std::vector<Elem> image = subalgebra_degree_span(a, gens, b1 - 2);
    res.p = annihilator_of_span(a, image, 2);
    // P0: classes of P with zero cup action on H^1
    QMat m(a.dim(3) * b1, res.p.dim());
    for (int c = 0; c < res.p.dim(); ++c) {
        Elem alpha = a.from_coords(res.p.basis_row(c), 2);
        for (int i = 0; i < b1; ++i) {
            Elem prod = a.mul(alpha, Elem::basis(a.basis_indices(1)[i]));
            auto v = a.coords(prod, 3);
            for (int r = 0; r < a.dim(3); ++r) m.at(i * a.dim(3) + r, c) = v[r];
        }
    }
    Subspace ker_in_p = kernel_basis(m);
    QMat rows(ker_in_p.dim(), a.dim(2));
    for (int r = 0; r < ker_in_p.dim(); ++r)
        for (int c = 0; c < res.p.dim(); ++c)
            for (int k = 0; k < a.dim(2); ++k)
                rows.at(r, k) += ker_in_p.basis().at(r, c) * res.p.basis().at(c, k);
    res.p0 = Subspace::span_of_rows(rows);
    return res;
}

std::vector<LocusComponent> noninjective_locus_components(const std::vector<LocusClass>& classes) {
    std::vector<LocusComponent> comps;
    for (size_t i = 0; i < classes.size(); ++i) {
        bool placed = false;
        for (auto& comp : comps) {
            if (classes[comp.support.front()].kernel == classes[i].kernel) {
                comp.support.push_back(static_cast<int>(i));
                placed = true;
                break;
            }
        }
        if (!placed) {
            LocusComponent c;
            c.support = {static_cast<int>(i)};
            c.common_kernel = classes[i].kernel;
            comps.push_back(std::move(c));
        }
    }
    // classes with injective cup action do not meet the locus
    comps.erase(std::remove_if(comps.begin(), comps.end(),
                               [](const LocusComponent& c) { return c.common_kernel.is_zero(); }),
                comps.end());
    for (auto& c : comps) c.dim = static_cast<int>(c.support.size());
    // support analysis is only valid when distinct groups cannot share kernel
    // vectors
    for (size_t i = 0; i < comps.size(); ++i)
        for (size_t j = i + 1; j < comps.size(); ++j)
            if (!comps[i].common_kernel.intersect(comps[j].common_kernel).is_zero())
                throw Error("kernels of distinct center groups intersect nontrivially; "
                            "support analysis does not apply");
    std::sort(comps.begin(), comps.end(),
              [](const LocusComponent& a, const LocusComponent& b) { return a.dim < b.dim; });
    return comps;
}

DecomposableSpanResult decomposable_span(const GradedAlgebra& a, const Subspace& v) {
    DecomposableSpanResult res;
    res.span = Subspace::zero(v.ambient_dim());
    if (v.is_zero()) {
        res.exact = true;
        res.note = "zero space";
        return res;
    }
    auto elem_of_row = [&](int r) { return a.from_coords(v.basis_row(r), 2); };
    auto squares_to_zero = [&](const Elem& e) { return a.mul(e, e).is_zero(); };

    std::vector<int> zero_rows, nonzero_rows;
    for (int r = 0; r < v.dim(); ++r)
        (squares_to_zero(elem_of_row(r)) ? zero_rows : nonzero_rows).push_back(r);

    if (nonzero_rows.empty()) {
        res.span = v;
        res.exact = true;
        res.note = "every basis vector is square-zero";
        return res;
    }
    if (v.dim() == 1) {
        res.exact = true;
        res.note = "single vector with nonzero square";
        return res;
    }
    // exceptional coordinate block: pairwise products vanish and the squares
    // are linearly independent, so only 0 is square-zero
    {
        bool block = true;
        std::vector<Elem> squares;
        for (int r = 0; r < v.dim() && block; ++r) {
            Elem er = elem_of_row(r);
            Elem sq = a.mul(er, er);
            if (sq.is_zero()) block = false;
            squares.push_back(sq);
            for (int s = r + 1; s < v.dim() && block; ++s)
                if (!a.mul(er, elem_of_row(s)).is_zero()) block = false;
        }
        if (block) {
            SparseSpan span;
            bool indep = true;
            for (const auto& sq : squares)
                if (!span.insert(sq)) indep = false;
            if (indep) {
                res.exact = true;
                res.note = "independent squares with vanishing cross products: only 0 is square-zero";
                return res;
            }
        }
    }
    // try to enlarge the square-zero span with pair combinations
    QMat candidates(static_cast<int>(zero_rows.size()) +
                        static_cast<int>(v.dim()) * (v.dim() - 1),
                    v.ambient_dim());
    int out = 0;
    for (int r : zero_rows) {
        for (int c = 0; c < v.ambient_dim(); ++c) candidates.at(out, c) = v.basis().at(r, c);
        ++out;
    }
    for (int r = 0; r < v.dim(); ++r)
        for (int s = 0; s < v.dim(); ++s) {
            if (r == s) continue;
            Elem comb = elem_of_row(r);
            comb += elem_of_row(s);
            if (squares_to_zero(comb)) {
                for (int c = 0; c < v.ambient_dim(); ++c)
                    candidates.at(out, c) = v.basis().at(r, c) + v.basis().at(s, c);
                ++out;
            }
        }
    QMat found(out, v.ambient_dim());
    for (int r = 0; r < out; ++r)
        for (int c = 0; c < v.ambient_dim(); ++c) found.at(r, c) = candidates.at(r, c);
    res.span = Subspace::span_of_rows(found);
    if (res.span == v) {
        res.exact = true;
        res.note = "square-zero combinations span the whole space";
    } else {
        res.exact = false;
        res.note = "block type not supported exactly; returning the span found so far";
    }
    return res;
}

namespace {

int q_form_exponent(const GradedAlgebra& a) {
    int top = a.top_degree();
    if (top < 4 || top % 2 != 0)
        throw Error("q_c form needs even top degree >= 4");
    return (top - 4) / 2;
}

}  // namespace

QMat q_form_matrix(const GradedAlgebra& a, const Elem& c) {
    int p = q_form_exponent(a);
    Elem cp = a.power(c, p);
    int d2 = a.dim(2);
    QMat g(d2, d2);
    if (cp.is_zero()) return g;
    const auto& idx = a.basis_indices(2);
    for (int i = 0; i < d2; ++i) {
        Elem cpi = a.mul(cp, Elem::basis(idx[i]));
        for (int j = i; j < d2; ++j) {
            Rat v = a.integrate(a.mul(cpi, Elem::basis(idx[j])));
            g.at(i, j) = v;
            g.at(j, i) = v;
        }
    }
    return g;
}

Rat q_form_value(const GradedAlgebra& a, const Elem& c, const Elem& x, const Elem& y) {
    int p = q_form_exponent(a);
    return a.integrate(a.mul(a.power(c, p), a.mul(x, y)));
}

IsotropyReport isotropy_report(const QMat& form, const Subspace& v) {
    IsotropyReport rep;
    rep.dim = v.dim();
    if (form.rows() != v.ambient_dim() || form.cols() != v.ambient_dim())
        throw Error("form size does not match the ambient dimension");
    // restrict: G = B form B^T
    QMat b = v.basis();
    QMat g = b * form * b.transpose();
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
            if (!(g.at(i, j) == g.at(j, i))) throw Error("form is not symmetric");

    // congruence diagonalization over Q, tracking the basis transform:
    // rows of t are the diagonalizing vectors in V coordinates
    int n = g.rows();
    QMat t = QMat::identity(n);
    for (int k = 0; k < n; ++k) {
        if (sgn(g.at(k, k)) == 0) {
            // bring a nonzero diagonal entry to position k if possible
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (sgn(g.at(i, i)) != 0) { swap = i; break; }
            if (swap >= 0) {
                for (int c = 0; c < n; ++c) {
                    std::swap(g.at(k, c), g.at(swap, c));
                    std::swap(t.at(k, c), t.at(swap, c));
                }
                for (int r = 0; r < n; ++r) std::swap(g.at(r, k), g.at(r, swap));
            } else {
                // all remaining diagonal zero: find off-diagonal entry
                int io = -1, jo = -1;
                for (int i = k; i < n && io < 0; ++i)
                    for (int j = i + 1; j < n && io < 0; ++j)
                        if (sgn(g.at(i, j)) != 0) { io = i; jo = j; }
                if (io < 0) break;  // zero block: done
                // row_io += row_jo (and column) creates a nonzero diagonal
                for (int c = 0; c < n; ++c) {
                    g.at(io, c) += g.at(jo, c);
                    t.at(io, c) += t.at(jo, c);
                }
                for (int r = 0; r < n; ++r) g.at(r, io) += g.at(r, jo);
                if (io != k) {
                    for (int c = 0; c < n; ++c) {
                        std::swap(g.at(k, c), g.at(io, c));
                        std::swap(t.at(k, c), t.at(io, c));
                    }
                    for (int r = 0; r < n; ++r) std::swap(g.at(r, k), g.at(r, io));
                }
            }
        }
        if (sgn(g.at(k, k)) == 0) continue;
        for (int i = k + 1; i < n; ++i) {
            if (sgn(g.at(i, k)) == 0) continue;
            Rat f = g.at(i, k) / g.at(k, k);
            for (int c = 0; c < n; ++c) {
                g.at(i, c) -= f * g.at(k, c);
                t.at(i, c) -= f * t.at(k, c);
            }
            for (int r = 0; r < n; ++r) g.at(r, i) -= f * g.at(r, k);
        }
    }
    std::vector<int> radical_rows;
    std::vector<std::pair<int, int>> signs;  // (row, sign)
    for (int k = 0; k < n; ++k) {
        int s = sgn(g.at(k, k));
        if (s == 0) radical_rows.push_back(k);
        else {
            signs.push_back({k, s});
            if (s > 0) ++rep.positive;
            else ++rep.negative;
        }
    }
    rep.rank = rep.positive + rep.negative;

    auto row_vec = [&](int r) {
        std::vector<Rat> vec(n);
        for (int c = 0; c < n; ++c) vec[c] = t.at(r, c);
        return vec;
    };
    if (!radical_rows.empty()) rep.isotropic_witness = row_vec(radical_rows.front());
    if (radical_rows.size() >= 2) {
        rep.totally_isotropic_plane = true;
        rep.note = "radical has dimension >= 2";
    }
    // hyperbolic witness: q(k1) > 0 > q(k2) with -q(k1)/q(k2) a rational square
    if (!rep.isotropic_witness) {
        for (auto [r1, s1] : signs) {
            if (s1 <= 0) continue;
            for (auto [r2, s2] : signs) {
                if (s2 >= 0) continue;
                Rat ratio = -g.at(r1, r1) / g.at(r2, r2);
                Int num = ratio.get_num(), den = ratio.get_den();
                if (is_perfect_square(num) && is_perfect_square(den)) {
                    Int sn, sd;
                    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
                    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
                    // v = r2-vector * (sn/sd) + r1-vector
                    std::vector<Rat> vec(n);
                    Rat scale(sn, sd);
                    for (int c = 0; c < n; ++c) vec[c] = t.at(r1, c) + scale * t.at(r2, c);
                    rep.isotropic_witness = vec;
                    break;
                }
            }
            if (rep.isotropic_witness) break;
        }
    }
    if (!rep.totally_isotropic_plane && radical_rows.size() == 1 && rep.isotropic_witness &&
        rep.rank > 0) {
        // radical vector plus an independent isotropic vector spans a
        // totally isotropic plane only if the witness is not the radical one
        // (the hyperbolic witness above is orthogonal to the radical)
        bool witness_is_radical = true;
        auto rad = row_vec(radical_rows.front());
        // crude independence check via span
        QMat two(2, n);
        for (int c = 0; c < n; ++c) {
            two.at(0, c) = rad[c];
            two.at(1, c) = (*rep.isotropic_witness)[c];
        }
        if (two.rank() == 2) witness_is_radical = false;
        if (!witness_is_radical) {
            rep.totally_isotropic_plane = true;
            rep.note = "radical vector plus independent isotropic vector";
        }
    }
    return rep;
}

namespace {

QcTable qc_table_impl(const GradedAlgebra& a, const std::vector<Elem>& cs,
                      const std::vector<Elem>& v_basis, bool parallel) {
    QcTable table;
    table.num_forms = static_cast<int>(cs.size());
    table.block_dim = static_cast<int>(v_basis.size());
    int p = (a.top_degree() - 4) / 2;
    int nb = table.block_dim;
    std::vector<long> nonzero(cs.size(), 0);
    std::vector<std::string> first(cs.size());

    // pairwise products are shared across all forms
    std::vector<Elem> vv(static_cast<size_t>(nb) * nb);
    for (int i = 0; i < nb; ++i)
        for (int j = i; j < nb; ++j) vv[static_cast<size_t>(i) * nb + j] = a.mul(v_basis[i], v_basis[j]);

#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long ci = 0; ci < static_cast<long>(cs.size()); ++ci) {
        Elem cp = a.power(cs[ci], p);
        for (int i = 0; i < nb; ++i)
            for (int j = i; j < nb; ++j) {
                Rat v = a.integrate(a.mul(cp, vv[static_cast<size_t>(i) * nb + j]));
                if (sgn(v) != 0) {
                    if (nonzero[ci] == 0)
                        first[ci] = "c#" + std::to_string(ci) + " i=" + std::to_string(i) +
                                    " j=" + std::to_string(j) + " value=" + v.get_str();
                    ++nonzero[ci];
                }
            }
    }
    for (size_t ci = 0; ci < cs.size(); ++ci) {
        table.nonzero_entries += nonzero[ci];
        if (table.first_nonzero.empty() && !first[ci].empty()) table.first_nonzero = first[ci];
    }
    table.all_zero = table.nonzero_entries == 0;
    return table;
}

}  // namespace

QcTable qc_vanishing_table(const GradedAlgebra& a, const std::vector<Elem>& cs,
                           const std::vector<Elem>& v_basis, bool parallel) {
    return qc_table_impl(a, cs, v_basis, parallel);
}

QcTable qc_vanishing_table_serial(const GradedAlgebra& a, const std::vector<Elem>& cs,
                                  const std::vector<Elem>& v_basis) {
    return qc_table_impl(a, cs, v_basis, false);
}

}  // namespace nonproj
