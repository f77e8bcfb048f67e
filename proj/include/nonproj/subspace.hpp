#pragma once

#include <vector>

#include "nonproj/matrix.hpp"

namespace nonproj {

// Linear subspace of Q^n held in reduced row echelon form.  The RREF basis is
// canonical, so two equal subspaces compare equal entrywise.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    // Span of the rows of m (zero rows dropped, basis canonicalized).
    static Subspace span_of_rows(const QMat& m);
    static Subspace zero(int ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(int ambient_dim) { return span_of_rows(QMat::identity(ambient_dim)); }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    const QMat& basis() const { return basis_; }
    std::vector<Rat> basis_row(int i) const;

    bool contains(const std::vector<Rat>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    // Orthogonal complement for the standard dot product (anisotropic over Q,
    // so dim complement = ambient - dim and the double complement is identity).
    Subspace complement() const;

private:
    int ambient_ = 0;
    QMat basis_;
};

// Null space of m (as a subspace of Q^cols).
Subspace kernel_basis(const QMat& m);

}  // namespace nonproj
