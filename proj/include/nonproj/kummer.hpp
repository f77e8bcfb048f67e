#pragma once

#include "nonproj/morphism.hpp"

namespace nonproj {

// Rational cohomology model of the Kummer variety of an n-torus: the even
// (involution-invariant) exterior part plus one summand per half-period
// point x, generated by a degree-2 class e_x with e_x e_y = 0 for x != y,
// e_x . (positive-degree invariant) = 0, and e_x powers following the
// point-blow-up relation.  Integration is half the torus integral on the
// invariant part; b_1 = 0.
class KummerAlgebra : public GradedAlgebra {
public:
    explicit KummerAlgebra(int n);

    int n() const { return n_; }
    int num_points() const { return 1 << (2 * n_); }

    int invariant_index(std::uint32_t even_mask) const;
    std::uint32_t mask_of_invariant(int index) const;
    bool is_invariant(int index) const { return kind_[index] < 0; }
    // exceptional class e_x^k, k = 1..n-1
    int exceptional_index(int x, int k) const {
        return exc_index_[static_cast<size_t>(x) * (n_ - 1) + (k - 1)];
    }
    std::pair<int, int> exceptional_of(int index) const;  // (x, k)
    Elem point_class(int x) const { return Elem::basis(exceptional_index(x, 1)); }

    // invariant even part of the torus algebra, as elements here
    Elem from_even_mask(std::uint32_t mask, const Rat& c = Rat(1)) const;

    Elem mul_basis(int i, int j) const override;
    Rat integrate_basis(int i) const override;

private:
    int n_;
    std::vector<std::uint32_t> mask_of_;   // for invariant indices
    std::vector<int> inv_index_of_mask_;   // mask -> index
    std::vector<int> exc_index_;
    std::vector<int> kind_;  // <0: invariant; else packed (x, k-1)
    int vol_index_ = -1;
};

// Pullback of the self-map induced by an endomorphism phi of the torus
// lattice: the even exterior part transforms by wedge powers of phi^T, the
// point classes by the inverse action of phi on half-periods.  Requires phi
// invertible mod 2 (odd determinant).
AlgebraMorphism kummer_selfmap_pullback(const std::shared_ptr<const KummerAlgebra>& k,
                                        const ZMat& phi);

// inverse of a degreewise-invertible morphism between equal-dimensional
// algebras (used for pushforwards of automorphism pullbacks)
AlgebraMorphism invert_morphism(const AlgebraMorphism& m);

}  // namespace nonproj
