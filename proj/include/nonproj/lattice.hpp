#pragma once

#include <vector>

#include "nonproj/matrix.hpp"
#include "nonproj/subspace.hpp"

namespace nonproj {

// Row-style Hermite normal form: pivots positive, entries above a pivot
// reduced into [0, pivot).  Zero rows sink to the bottom.  Canonical for the
// row lattice, so equality of lattices is entrywise equality of bases.
ZMat hermite_normal_form(const ZMat& m);

// Smith normal form invariants d1 | d2 | ... (nonnegative, zeros trailing),
// of length min(rows, cols).
std::vector<Int> smith_normal_form(const ZMat& m);

// Full-rank sublattice of Z^n spanned by integer rows, basis kept in HNF.
class IntegerLattice {
public:
    IntegerLattice() = default;
    explicit IntegerLattice(int ambient_rank) : ambient_(ambient_rank), basis_(0, ambient_rank) {}

    static IntegerLattice span_of_rows(const ZMat& rows);
    static IntegerLattice full(int ambient_rank) {
        return span_of_rows(ZMat::identity(ambient_rank));
    }

    int ambient_rank() const { return ambient_; }
    int rank() const { return basis_.rows(); }
    const ZMat& basis() const { return basis_; }

    bool operator==(const IntegerLattice& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

    bool contains(const std::vector<Int>& v) const;
    Subspace q_span() const;

    // Smallest primitive sublattice containing this one (idempotent).
    IntegerLattice saturate() const;
    // Index of this lattice inside its saturation (product of SNF invariants).
    Int saturation_index() const;
    bool is_primitive() const { return saturation_index() == 1; }

private:
    int ambient_ = 0;
    ZMat basis_;
};

// Saturated integer kernel of an integer matrix acting on row vectors from
// the left, i.e. { v in Z^cols : m * v^T = 0 }.
IntegerLattice integer_kernel(const ZMat& m);

}  // namespace nonproj
