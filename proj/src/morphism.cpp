#include "nonproj/morphism.hpp"

namespace nonproj {

AlgebraMorphism::AlgebraMorphism(std::shared_ptr<const GradedAlgebra> src,
                                 std::shared_ptr<const GradedAlgebra> dst,
                                 std::vector<Elem> images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != src_->total_dim())
        throw Error("morphism image count does not match source dimension");
}

AlgebraMorphism AlgebraMorphism::from_generator_images(
    std::shared_ptr<const ExteriorAlgebra> src, std::shared_ptr<const GradedAlgebra> dst,
    const std::vector<Elem>& gen_images) {
    if (static_cast<int>(gen_images.size()) != src->generators())
        throw Error("need one image per exterior generator");
    std::vector<Elem> images(src->total_dim());
    for (int i = 0; i < src->total_dim(); ++i) {
        std::uint32_t mask = src->mask_of(i);
        Elem acc = Elem::basis(dst->unit_index());
        for (int b = 0; b < src->generators(); ++b)
            if (mask & (1u << b)) acc = dst->mul(acc, gen_images[b]);
        images[i] = std::move(acc);
    }
    return AlgebraMorphism(src, std::move(dst), std::move(images));
}

Elem AlgebraMorphism::apply(const Elem& e) const {
    Elem out;
    for (const auto& t : e.terms()) out.add_scaled(images_[t.index], t.coeff);
    return out;
}

QMat AlgebraMorphism::degree_matrix(int deg) const {
    QMat m(dst_->dim(deg), src_->dim(deg));
    const auto& sidx = src_->basis_indices(deg);
    for (size_t c = 0; c < sidx.size(); ++c) {
        if (images_[sidx[c]].is_zero()) continue;
        auto v = dst_->coords(images_[sidx[c]], deg);
        for (int r = 0; r < dst_->dim(deg); ++r) m.at(r, static_cast<int>(c)) = v[r];
    }
    return m;
}

int AlgebraMorphism::rank_in_degree(int deg) const { return degree_matrix(deg).rank(); }

AlgebraMorphism::CheckReport AlgebraMorphism::check(long pair_budget, std::uint64_t seed,
                                                    const std::function<bool(int)>& src_filter) const {
    CheckReport rep;
    rep.unital = apply(Elem::basis(src_->unit_index())) == Elem::basis(dst_->unit_index());
    rep.degree_preserving = true;
    for (int i = 0; i < src_->total_dim(); ++i) {
        if (src_filter && !src_filter(i)) continue;
        if (images_[i].is_zero()) continue;
        if (dst_->degree_of(images_[i]) != src_->degree_of(i)) {
            rep.degree_preserving = false;
            rep.detail = "image of " + src_->label(i) + " is not degree-homogeneous of the right degree";
            return rep;
        }
    }
    std::vector<int> pool;
    for (int i = 0; i < src_->total_dim(); ++i)
        if (!src_filter || src_filter(i)) pool.push_back(i);
    long total = static_cast<long>(pool.size()) * static_cast<long>(pool.size());
    rep.multiplicative = true;
    auto check_pair = [&](int i, int j) {
        if (src_->degree_of(i) + src_->degree_of(j) > src_->top_degree()) return true;
        Elem lhs = apply(src_->mul_basis(i, j));
        Elem rhs = dst_->mul(images_[i], images_[j]);
        return lhs == rhs;
    };
    if (total <= pair_budget) {
        for (int i : pool)
            for (int j : pool) {
                ++rep.pairs_checked;
                if (!check_pair(i, j)) {
                    rep.multiplicative = false;
                    rep.detail = "product mismatch at (" + src_->label(i) + ", " + src_->label(j) + ")";
                    return rep;
                }
            }
    } else {
        Rng rng(seed);
        for (long k = 0; k < pair_budget; ++k) {
            int i = pool[rng.below(pool.size())];
            int j = pool[rng.below(pool.size())];
            ++rep.pairs_checked;
            if (!check_pair(i, j)) {
                rep.multiplicative = false;
                rep.detail = "product mismatch at (" + src_->label(i) + ", " + src_->label(j) + ")";
                return rep;
            }
        }
    }
    return rep;
}

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
    if (&f.dst() != &g.src()) throw Error("composition type mismatch");
    std::vector<Elem> images(f.src().total_dim());
    for (int i = 0; i < f.src().total_dim(); ++i) images[i] = g.apply(f.image(i));
    return AlgebraMorphism(f.src_ptr(), g.dst_ptr(), std::move(images));
}

}  // namespace nonproj
