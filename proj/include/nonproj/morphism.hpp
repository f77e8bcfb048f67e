#pragma once

#include <functional>

#include "nonproj/algebra.hpp"

namespace nonproj {

// Degree-preserving unital algebra morphism, stored as images of the source
// basis.  Multiplicativity is a checkable property, not an assumption.
class AlgebraMorphism {
public:
    AlgebraMorphism() = default;
    AlgebraMorphism(std::shared_ptr<const GradedAlgebra> src,
                    std::shared_ptr<const GradedAlgebra> dst, std::vector<Elem> images);

    // morphism from an exterior source determined by degree-1 generator
    // images (odd elements square to zero and anticommute automatically)
    static AlgebraMorphism from_generator_images(std::shared_ptr<const ExteriorAlgebra> src,
                                                 std::shared_ptr<const GradedAlgebra> dst,
                                                 const std::vector<Elem>& gen_images);

    const GradedAlgebra& src() const { return *src_; }
    const GradedAlgebra& dst() const { return *dst_; }
    std::shared_ptr<const GradedAlgebra> src_ptr() const { return src_; }
    std::shared_ptr<const GradedAlgebra> dst_ptr() const { return dst_; }

    const Elem& image(int src_index) const { return images_[src_index]; }
    Elem apply(const Elem& e) const;

    // matrix of the degree-d component, columns = source basis of degree d
    QMat degree_matrix(int deg) const;
    int rank_in_degree(int deg) const;
    bool injective_in_degree(int deg) const { return rank_in_degree(deg) == src_->dim(deg); }

    struct CheckReport {
        bool unital = false;
        bool degree_preserving = false;
        bool multiplicative = false;
        long pairs_checked = 0;
        std::string detail;
        bool ok() const { return unital && degree_preserving && multiplicative; }
    };
    // exhaustive when the number of degree-compatible pairs is within budget,
    // deterministic sample otherwise; restrict_src limits the check to source
    // indices accepted by the filter (used when a morphism is only claimed
    // multiplicative on a subalgebra).
    CheckReport check(long pair_budget = 200000, std::uint64_t seed = 7,
                      const std::function<bool(int)>& src_filter = {}) const;

private:
    std::shared_ptr<const GradedAlgebra> src_, dst_;
    std::vector<Elem> images_;
};

// Composition dst(g) after f.
AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f);

}  // namespace nonproj
