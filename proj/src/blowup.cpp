#include "nonproj/blowup.hpp"

#include <map>

namespace nonproj {

BlowupAlgebra::BlowupAlgebra(std::shared_ptr<const GradedAlgebra> base, BlowupSpec spec)
    : base_(std::move(base)), spec_(std::move(spec)) {
    int r = spec_.codim;
    if (r < 2) throw Error("blow-up center must have codimension >= 2");
    const GradedAlgebra& z = *spec_.center;
    if (base_->top_degree() != z.top_degree() + 2 * r)
        throw Error("center dimension + codim must equal the ambient dimension");
    if (static_cast<int>(spec_.chern.size()) > r)
        throw Error("more Chern classes than the codimension");
    spec_.chern.resize(r);
    for (int i = 1; i <= r; ++i)
        if (!spec_.chern[i - 1].is_zero() && z.degree_of(spec_.chern[i - 1]) != 2 * i)
            throw Error("c_" + std::to_string(i) + " must be homogeneous of degree " +
                        std::to_string(2 * i));

    center_dim_ = z.total_dim();
    set_top(base_->top_degree());
    tau_index_.resize(base_->total_dim());
    eps_index_.assign(static_cast<size_t>(r - 1) * center_dim_, -1);
    for (int i = 0; i < base_->total_dim(); ++i) {
        tau_index_[i] = add_basis_element(base_->degree_of(i), "t[" + base_->label(i) + "]");
        kind_.push_back(-1 - i);
    }
    for (int k = 0; k <= r - 2; ++k)
        for (int zi = 0; zi < center_dim_; ++zi) {
            int deg = 2 * k + 2 + z.degree_of(zi);
            std::string label = "E{" + spec_.name + "}";
            if (k > 0) label += ".xi^" + std::to_string(k);
            if (z.degree_of(zi) > 0 || true) label += "[" + z.label(zi) + "]";
            eps_index_[static_cast<size_t>(k) * center_dim_ + zi] =
                add_basis_element(deg, label);
            kind_.push_back(k * center_dim_ + zi);
        }

    // Gysin pushforward of every center basis element, precomputed.
    pushforward_images_.resize(center_dim_);
    if (spec_.pushforward) {
        for (int zi = 0; zi < center_dim_; ++zi) {
            pushforward_images_[zi] = spec_.pushforward(Elem::basis(zi));
            if (!pushforward_images_[zi].is_zero() &&
                base_->degree_of(pushforward_images_[zi]) != z.degree_of(zi) + 2 * r)
                throw Error("pushforward image has the wrong degree");
        }
    } else {
        // Poincare adjoint of the restriction: <j_* w, x> = <w, r(x)>.
        for (int d = 0; d <= z.top_degree(); ++d) {
            if (z.dim(d) == 0) continue;
            int e = d + 2 * r;
            int comp = base_->top_degree() - e;
            QMat g = base_->pairing_matrix(e);
            if (g.rows() != g.cols())
                throw Error("pairing block is not square; base is not a manifold model");
            QMat ginv_t = g.inverse().transpose();
            for (int zi : z.basis_indices(d)) {
                std::vector<Rat> rhs(base_->dim(comp));
                for (int c = 0; c < base_->dim(comp); ++c) {
                    Elem rx = spec_.restriction.image(base_->basis_indices(comp)[c]);
                    rhs[c] = z.pair(Elem::basis(zi), rx);
                }
                // y = (G^T)^{-1} rhs
                Elem y;
                for (int b = 0; b < base_->dim(e); ++b) {
                    Rat s = 0;
                    for (int c = 0; c < base_->dim(comp); ++c) s += ginv_t.at(c, b) * rhs[c];
                    if (sgn(s) != 0) y.accumulate(base_->basis_indices(e)[b], s);
                }
                y.normalize();
                pushforward_images_[zi] = std::move(y);
            }
        }
    }
}

std::pair<int, int> BlowupAlgebra::eps_of(int index) const {
    int k = kind_[index];
    if (k < 0) throw Error("not an exceptional basis element");
    return {k / center_dim_, k % center_dim_};
}

int BlowupAlgebra::base_of(int index) const {
    int k = kind_[index];
    if (k >= 0) throw Error("not a tau basis element");
    return -1 - k;
}

Elem BlowupAlgebra::embed_tau(const Elem& base_elem) const {
    Elem out;
    for (const auto& t : base_elem.terms()) out.accumulate(tau_index_[t.index], t.coeff);
    out.normalize();
    return out;
}

Elem BlowupAlgebra::tau_component(const Elem& e) const {
    Elem out;
    for (const auto& t : e.terms())
        if (is_tau(t.index)) out.accumulate(base_of(t.index), t.coeff);
    out.normalize();
    return out;
}

Elem BlowupAlgebra::center_pushforward(const Elem& w) const {
    Elem out;
    for (const auto& t : w.terms()) out.add_scaled(pushforward_images_[t.index], t.coeff);
    return out;
}

Elem BlowupAlgebra::push_xi_power(int m, const Elem& w) const {
    if (w.is_zero()) return Elem();
    int r = spec_.codim;
    const GradedAlgebra& z = *spec_.center;
    if (m <= r - 2) {
        Elem out;
        for (const auto& t : w.terms()) out.accumulate(eps_index(m, t.index), t.coeff);
        out.normalize();
        return out;
    }
    if (m == r - 1) {
        // j_*(xi^{r-1} w) = (-1)^{r-1} tau^*(push(w)) + sum_i (-1)^{i+1} j_*(c_i xi^{r-1-i} w)
        Elem out = embed_tau(center_pushforward(w)).scaled(Rat((r - 1) % 2 ? -1 : 1));
        for (int i = 1; i <= r - 1; ++i) {
            if (spec_.chern[i - 1].is_zero()) continue;
            Elem cw = z.mul(spec_.chern[i - 1], w);
            out.add_scaled(push_xi_power(r - 1 - i, cw), Rat(i % 2 ? 1 : -1));
        }
        return out;
    }
    // xi^m = sum_{i=1}^{r} (-1)^{i+1} c_i xi^{m-i}
    Elem out;
    for (int i = 1; i <= r; ++i) {
        if (spec_.chern[i - 1].is_zero()) continue;
        Elem cw = z.mul(spec_.chern[i - 1], w);
        out.add_scaled(push_xi_power(m - i, cw), Rat(i % 2 ? 1 : -1));
    }
    return out;
}

Elem BlowupAlgebra::mul_basis(int i, int j) const {
    const GradedAlgebra& z = *spec_.center;
    bool ti = is_tau(i), tj = is_tau(j);
    if (ti && tj) return embed_tau(base_->mul_basis(base_of(i), base_of(j)));
    if (ti || tj) {
        // tau(y) . eps(k,z) = j_*(xi^k (r(y) . z));  eps(k,z) . tau(y) uses (z . r(y))
        int tau = ti ? i : j, eps = ti ? j : i;
        auto [k, zi] = eps_of(eps);
        const Elem& ry = spec_.restriction.image(base_of(tau));
        if (ry.is_zero()) return Elem();
        Elem prod = ti ? z.mul(ry, Elem::basis(zi)) : z.mul(Elem::basis(zi), ry);
        if (prod.is_zero()) return Elem();
        Elem out;
        for (const auto& t : prod.terms()) out.accumulate(eps_index(k, t.index), t.coeff);
        out.normalize();
        return out;
    }
    auto [k1, z1] = eps_of(i);
    auto [k2, z2] = eps_of(j);
    Elem prod = z.mul_basis(z1, z2);
    if (prod.is_zero()) return Elem();
    return push_xi_power(k1 + k2 + 1, prod);
}

Rat BlowupAlgebra::integrate_basis(int i) const {
    return is_tau(i) ? base_->integrate_basis(base_of(i)) : Rat(0);
}

AlgebraMorphism lift_through_blowup(const std::shared_ptr<const BlowupAlgebra>& blown,
                                    const AlgebraMorphism& r2,
                                    const std::function<Elem(int, int)>& eps_images) {
    std::vector<Elem> images(blown->total_dim());
    for (int i = 0; i < blown->total_dim(); ++i) {
        if (blown->is_tau(i)) {
            images[i] = r2.image(blown->base_of(i));
        } else if (eps_images) {
            auto [k, zi] = blown->eps_of(i);
            images[i] = eps_images(k, zi);
        }
    }
    return AlgebraMorphism(blown, r2.dst_ptr(), std::move(images));
}

}  // namespace nonproj
