#pragma once

#include <functional>

#include "nonproj/morphism.hpp"

namespace nonproj {

// Data of a blow-up along a center Z of complex codimension `codim`:
// the restriction morphism (a ring morphism base -> Z), the Chern classes
// c_1..c_codim of the normal bundle as elements of Z, and optionally a
// closed-form Gysin pushforward Z -> base (the Poincare adjoint of the
// restriction is used when absent).
struct BlowupSpec {
    std::string name;
    std::shared_ptr<const GradedAlgebra> center;
    AlgebraMorphism restriction;
    int codim = 0;
    std::vector<Elem> chern;  // chern[i-1] = c_i, degree 2i in the center; zero Elems allowed
    std::function<Elem(const Elem&)> pushforward;
};

// Cohomology of a blow-up: base part tau^*H(Y) plus summands
// eps(k, z) = j_*(xi^k tau_E^* z) for k = 0..codim-2, z a center basis
// element, where xi is the first Chern class of O_E(E).  Products follow the
// projection formula, the self-intersection formula j^* j_* = xi, and the
// rank-codim relation on the projective bundle; xi-powers at codim-1 fold
// back into the base through the pushforward (key formula
// tau^* j_{Z*} = j_* c_{codim-1}(Q) tau_E^*).
class BlowupAlgebra : public GradedAlgebra {
public:
    BlowupAlgebra(std::shared_ptr<const GradedAlgebra> base, BlowupSpec spec);

    const GradedAlgebra& base() const { return *base_; }
    std::shared_ptr<const GradedAlgebra> base_ptr() const { return base_; }
    const BlowupSpec& spec() const { return spec_; }

    int tau_index(int base_index) const { return tau_index_[base_index]; }
    int eps_index(int k, int center_index) const {
        return eps_index_[static_cast<size_t>(k) * center_dim_ + center_index];
    }
    bool is_tau(int index) const { return kind_[index] >= 0 ? false : true; }
    // (k, center index) of an exceptional basis element
    std::pair<int, int> eps_of(int index) const;
    int base_of(int index) const;

    Elem embed_tau(const Elem& base_elem) const;
    Elem tau_component(const Elem& e) const;  // base-algebra part of e
    Elem exceptional_class() const { return Elem::basis(eps_index(0, spec_.center->unit_index())); }

    // j_*(xi^m tau_E^* w) for a center element w, fully reduced
    Elem push_xi_power(int m, const Elem& w) const;
    // precomputed Gysin pushforward of a center element into the base
    Elem center_pushforward(const Elem& w) const;

    Elem mul_basis(int i, int j) const override;
    Rat integrate_basis(int i) const override;

private:
    std::shared_ptr<const GradedAlgebra> base_;
    BlowupSpec spec_;
    int center_dim_ = 0;
    std::vector<int> tau_index_;
    std::vector<int> eps_index_;
    std::vector<int> kind_;  // -1-base_idx for tau, else packed (k, zi)
    std::vector<Elem> pushforward_images_;  // per center basis element, in the base
};

// Restriction morphism for a later disjoint-or-prescribed center, lifted
// through a blow-up: tau part composes with r2, exceptional classes map by
// the prescription (absent prescription = zero, the disjoint case).
AlgebraMorphism lift_through_blowup(const std::shared_ptr<const BlowupAlgebra>& blown,
                                    const AlgebraMorphism& r2,
                                    const std::function<Elem(int, int)>& eps_images = {});

}  // namespace nonproj
