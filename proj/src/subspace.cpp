#include "nonproj/subspace.hpp"

namespace nonproj {

Subspace Subspace::span_of_rows(const QMat& m) {
    QMat r = m;
    auto pivots = r.rref();
    Subspace s(m.cols());
    QMat basis(static_cast<int>(pivots.size()), m.cols());
    for (int i = 0; i < basis.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c) basis.at(i, c) = r.at(i, c);
    s.basis_ = basis;
    return s;
}

std::vector<Rat> Subspace::basis_row(int i) const {
    std::vector<Rat> v(ambient_);
    for (int c = 0; c < ambient_; ++c) v[c] = basis_.at(i, c);
    return v;
}

bool Subspace::contains(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw Error("ambient dimension mismatch");
    QMat stacked(dim() + 1, ambient_);
    for (int r = 0; r < dim(); ++r)
        for (int c = 0; c < ambient_; ++c) stacked.at(r, c) = basis_.at(r, c);
    for (int c = 0; c < ambient_; ++c) stacked.at(dim(), c) = v[c];
    return stacked.rank() == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw Error("ambient dimension mismatch");
    return sum(other).dim() == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw Error("ambient dimension mismatch");
    QMat stacked(dim() + other.dim(), ambient_);
    for (int r = 0; r < dim(); ++r)
        for (int c = 0; c < ambient_; ++c) stacked.at(r, c) = basis_.at(r, c);
    for (int r = 0; r < other.dim(); ++r)
        for (int c = 0; c < ambient_; ++c) stacked.at(dim() + r, c) = other.basis_.at(r, c);
    return span_of_rows(stacked);
}

Subspace Subspace::complement() const {
    return kernel_basis(basis_);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw Error("ambient dimension mismatch");
    // (A^perp + B^perp)^perp = A cap B for the standard dot product.
    return complement().sum(other.complement()).complement();
}

Subspace kernel_basis(const QMat& m) {
    QMat r = m;
    auto pivots = r.rref();
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    QMat basis(n - static_cast<int>(pivots.size()), n);
    int row = 0;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        basis.at(row, c) = 1;
        for (size_t p = 0; p < pivots.size(); ++p)
            basis.at(row, pivots[p]) = -r.at(static_cast<int>(p), c);
        ++row;
    }
    return Subspace::span_of_rows(basis);
}

}  // namespace nonproj
