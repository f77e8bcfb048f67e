#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nonproj/matrix.hpp"
#include "nonproj/subspace.hpp"

namespace nonproj {

// Sparse element of a graded algebra: terms sorted by basis index.
class Elem {
public:
    struct Term {
        int index;
        Rat coeff;
        bool operator==(const Term& o) const { return index == o.index && coeff == o.coeff; }
    };

    Elem() = default;
    static Elem basis(int index, const Rat& c = Rat(1));

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    Rat coeff(int index) const;

    Elem& add_scaled(const Elem& other, const Rat& s);
    Elem& operator+=(const Elem& other) { return add_scaled(other, Rat(1)); }
    Elem& operator-=(const Elem& other) { return add_scaled(other, Rat(-1)); }
    Elem scaled(const Rat& s) const;
    bool operator==(const Elem& o) const { return terms_ == o.terms_; }

    // unsorted accumulation; callers normalize once at the end
    void accumulate(int index, const Rat& c) { terms_.push_back({index, c}); }
    void normalize();

private:
    std::vector<Term> terms_;
};

// Finite-dimensional graded-commutative algebra over Q with a fixed labeled
// basis per degree and an integration functional on the top degree.  Products
// of basis elements are computed on demand (the large models are far too big
// for full multiplication tables).
class GradedAlgebra {
public:
    virtual ~GradedAlgebra() = default;

    int top_degree() const { return top_; }
    int total_dim() const { return static_cast<int>(degree_of_.size()); }
    int dim(int deg) const {
        return (deg >= 0 && deg <= top_) ? static_cast<int>(by_degree_[deg].size()) : 0;
    }
    const std::vector<int>& basis_indices(int deg) const { return by_degree_[deg]; }
    int degree_of(int index) const { return degree_of_[index]; }
    const std::string& label(int index) const { return labels_[index]; }
    int unit_index() const { return by_degree_[0].at(0); }

    // degree of a homogeneous element; throws on mixed degrees
    int degree_of(const Elem& e) const;

    virtual Elem mul_basis(int i, int j) const = 0;
    virtual Rat integrate_basis(int i) const = 0;

    Elem mul(const Elem& a, const Elem& b) const;
    Elem power(const Elem& a, int k) const;
    Rat integrate(const Elem& e) const;
    Rat pair(const Elem& a, const Elem& b) const { return integrate(mul(a, b)); }

    std::vector<int> betti() const;

    // coordinates of a degree-homogeneous element in the degree's basis
    std::vector<Rat> coords(const Elem& e, int deg) const;
    Elem from_coords(const std::vector<Rat>& v, int deg) const;

    // Gram matrix of the Poincare pairing between degrees deg and top-deg
    QMat pairing_matrix(int deg) const;

protected:
    void set_top(int top) {
        top_ = top;
        by_degree_.assign(top + 1, {});
    }
    int add_basis_element(int degree, std::string label);

private:
    int top_ = 0;
    std::vector<int> degree_of_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> by_degree_;
};

// Exterior algebra on m degree-1 generators; basis = bit masks grouped by
// degree, product by mask disjointness with the inversion-count sign,
// integration normalized by the full mask.
class ExteriorAlgebra : public GradedAlgebra {
public:
    explicit ExteriorAlgebra(int m);

    int generators() const { return m_; }
    std::uint32_t mask_of(int index) const { return mask_of_[index]; }
    int index_of_mask(std::uint32_t mask) const { return index_of_mask_[mask]; }
    Elem generator(int i) const { return Elem::basis(index_of_mask(1u << i)); }

    Elem mul_basis(int i, int j) const override;
    Rat integrate_basis(int i) const override;

    static int sign_of_merge(std::uint32_t a, std::uint32_t b);

private:
    int m_;
    std::vector<std::uint32_t> mask_of_;
    std::vector<int> index_of_mask_;
};

// Koszul-signed tensor product of two manifold models.
class TensorAlgebra : public GradedAlgebra {
public:
    TensorAlgebra(std::shared_ptr<const GradedAlgebra> a, std::shared_ptr<const GradedAlgebra> b);

    const GradedAlgebra& left() const { return *a_; }
    const GradedAlgebra& right() const { return *b_; }
    int pair_index(int ia, int ib) const { return pair_index_[ia * b_->total_dim() + ib]; }
    std::pair<int, int> components(int index) const { return comp_[index]; }

    Elem embed_left(const Elem& e) const;   // a -> a (x) 1
    Elem embed_right(const Elem& e) const;  // b -> 1 (x) b

    Elem mul_basis(int i, int j) const override;
    Rat integrate_basis(int i) const override;

private:
    std::shared_ptr<const GradedAlgebra> a_, b_;
    std::vector<int> pair_index_;
    std::vector<std::pair<int, int>> comp_;
};

// Invariant part of the exterior algebra under the -1 involution (acting by
// (-1)^k in degree k): the even-degree subalgebra.
class EvenExteriorAlgebra : public GradedAlgebra {
public:
    explicit EvenExteriorAlgebra(int m);

    const ExteriorAlgebra& ambient() const { return full_; }
    int from_full(int full_index) const { return from_full_[full_index]; }

    Elem mul_basis(int i, int j) const override;
    Rat integrate_basis(int i) const override;

private:
    ExteriorAlgebra full_;
    std::vector<int> to_full_;
    std::vector<int> from_full_;
};

// Q[h]/(h^{m+1}) with |h| = 2: the rational cohomology of P^m, the simply
// connected tensor factor used by the product variants.
class TruncatedPolynomialAlgebra : public GradedAlgebra {
public:
    explicit TruncatedPolynomialAlgebra(int m);

    Elem mul_basis(int i, int j) const override;
    Rat integrate_basis(int i) const override;

private:
    int m_;
};

}  // namespace nonproj
