#include "nonproj/lattice.hpp"

#include <algorithm>

namespace nonproj {

ZMat hermite_normal_form(const ZMat& m) {
    ZMat a = m;
    int rows = a.rows(), cols = a.cols();
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        // clear below (row, col) with Euclidean row steps
        for (;;) {
            int p = -1;
            for (int r = row; r < rows; ++r)
                if (sgn(a.at(r, col)) != 0 && (p < 0 || abs(a.at(r, col)) < abs(a.at(p, col))))
                    p = r;
            if (p < 0) break;
            if (p != row)
                for (int c = 0; c < cols; ++c) std::swap(a.at(p, c), a.at(row, c));
            bool clear = true;
            for (int r = row + 1; r < rows; ++r) {
                if (sgn(a.at(r, col)) == 0) continue;
                Int q = a.at(r, col) / a.at(row, col);  // truncating is fine, loop converges
                if (sgn(q) != 0)
                    for (int c = 0; c < cols; ++c) a.at(r, c) -= q * a.at(row, c);
                if (sgn(a.at(r, col)) != 0) clear = false;
            }
            if (clear) break;
        }
        if (sgn(a.at(row, col)) == 0) continue;
        if (sgn(a.at(row, col)) < 0)
            for (int c = 0; c < cols; ++c) a.at(row, c) = -a.at(row, c);
        // reduce entries above the pivot into [0, pivot)
        for (int r = 0; r < row; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a.at(r, col).get_mpz_t(), a.at(row, col).get_mpz_t());
            if (sgn(q) != 0)
                for (int c = 0; c < cols; ++c) a.at(r, c) -= q * a.at(row, c);
        }
        ++row;
    }
    return a;
}

namespace {

struct SnfState {
    ZMat a;
    ZMat w;  // inverse of the accumulated column transform: w = V^{-1}
    bool track;

    void col_swap(int i, int j) {
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        if (track)
            for (int c = 0; c < w.cols(); ++c) std::swap(w.at(i, c), w.at(j, c));
    }
    void col_addmul(int dst, int src, const Int& t) {
        // a: col_dst += t * col_src; inverse transform: row_src -= t * row_dst
        for (int r = 0; r < a.rows(); ++r) a.at(r, dst) += t * a.at(r, src);
        if (track)
            for (int c = 0; c < w.cols(); ++c) w.at(src, c) -= t * w.at(dst, c);
    }
    void col_negate(int i) {
        for (int r = 0; r < a.rows(); ++r) a.at(r, i) = -a.at(r, i);
        if (track)
            for (int c = 0; c < w.cols(); ++c) w.at(i, c) = -w.at(i, c);
    }
    void row_swap(int i, int j) {
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    }
    void row_addmul(int dst, int src, const Int& t) {
        for (int c = 0; c < a.cols(); ++c) a.at(dst, c) += t * a.at(src, c);
    }
};

void smith_reduce(SnfState& s) {
    int rows = s.a.rows(), cols = s.a.cols();
    int t = 0;
    int limit = std::min(rows, cols);
    while (t < limit) {
        // find nonzero entry of least absolute value in the trailing block
        int pr = -1, pc = -1;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c)
                if (sgn(s.a.at(r, c)) != 0 &&
                    (pr < 0 || abs(s.a.at(r, c)) < abs(s.a.at(pr, pc)))) {
                    pr = r;
                    pc = c;
                }
        if (pr < 0) break;
        if (pr != t) s.row_swap(pr, t);
        if (pc != t) s.col_swap(pc, t);
        bool dirty = false;
        for (int r = t + 1; r < rows; ++r) {
            if (sgn(s.a.at(r, t)) == 0) continue;
            Int q = s.a.at(r, t) / s.a.at(t, t);
            s.row_addmul(r, t, -q);
            if (sgn(s.a.at(r, t)) != 0) dirty = true;
        }
        for (int c = t + 1; c < cols; ++c) {
            if (sgn(s.a.at(t, c)) == 0) continue;
            Int q = s.a.at(t, c) / s.a.at(t, t);
            s.col_addmul(c, t, -q);
            if (sgn(s.a.at(t, c)) != 0) dirty = true;
        }
        if (dirty) continue;
        // pivot must divide every remaining entry
        bool divides = true;
        for (int r = t + 1; r < rows && divides; ++r)
            for (int c = t + 1; c < cols && divides; ++c) {
                if (sgn(s.a.at(r, c)) == 0) continue;
                if (!mpz_divisible_p(s.a.at(r, c).get_mpz_t(), s.a.at(t, t).get_mpz_t())) {
                    s.row_addmul(t, r, Int(1));
                    divides = false;
                }
            }
        if (!divides) continue;
        if (sgn(s.a.at(t, t)) < 0) s.col_negate(t);
        ++t;
    }
}

}  // namespace

std::vector<Int> smith_normal_form(const ZMat& m) {
    SnfState s{m, ZMat(), false};
    smith_reduce(s);
    int n = std::min(m.rows(), m.cols());
    std::vector<Int> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = s.a.at(i, i);
    return inv;
}

IntegerLattice IntegerLattice::span_of_rows(const ZMat& rows) {
    ZMat h = hermite_normal_form(rows);
    int rank = 0;
    for (int r = 0; r < h.rows(); ++r) {
        bool zero = true;
        for (int c = 0; c < h.cols(); ++c)
            if (sgn(h.at(r, c)) != 0) { zero = false; break; }
        if (!zero) ++rank;
    }
    IntegerLattice l(rows.cols());
    ZMat basis(rank, rows.cols());
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < rows.cols(); ++c) basis.at(r, c) = h.at(r, c);
    l.basis_ = basis;
    return l;
}

bool IntegerLattice::contains(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw Error("ambient rank mismatch");
    // reduce v by the HNF basis rows
    std::vector<Int> w = v;
    int row = 0;
    for (int col = 0; col < ambient_ && row < rank(); ++col) {
        if (sgn(basis_.at(row, col)) == 0) continue;
        if (sgn(w[col]) != 0) {
            if (!mpz_divisible_p(w[col].get_mpz_t(), basis_.at(row, col).get_mpz_t()))
                return false;
            Int q = w[col] / basis_.at(row, col);
            for (int c = col; c < ambient_; ++c) w[c] -= q * basis_.at(row, c);
        }
        ++row;
    }
    for (const Int& x : w)
        if (sgn(x) != 0) return false;
    return true;
}

Subspace IntegerLattice::q_span() const {
    return Subspace::span_of_rows(basis_.to_q());
}

IntegerLattice IntegerLattice::saturate() const {
    if (rank() == 0) return *this;
    SnfState s{basis_, ZMat::identity(ambient_), true};
    smith_reduce(s);
    int k = 0;
    for (int i = 0; i < std::min(basis_.rows(), ambient_); ++i)
        if (sgn(s.a.at(i, i)) != 0) ++k;
    // basis = U^{-1} diag(d) (first k rows of V^{-1}); dropping the d's
    // saturates.
    ZMat rows(k, ambient_);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < ambient_; ++c) rows.at(r, c) = s.w.at(r, c);
    return span_of_rows(rows);
}

Int IntegerLattice::saturation_index() const {
    auto inv = smith_normal_form(basis_);
    Int idx = 1;
    for (const Int& d : inv)
        if (sgn(d) != 0) idx *= d;
    return idx;
}

IntegerLattice integer_kernel(const ZMat& m) {
    Subspace k = kernel_basis(m.to_q());
    ZMat rows(k.dim(), m.cols());
    for (int r = 0; r < k.dim(); ++r) {
        Int lcm = 1;
        for (int c = 0; c < m.cols(); ++c)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), k.basis().at(r, c).get_den_mpz_t());
        for (int c = 0; c < m.cols(); ++c) {
            Rat scaled = k.basis().at(r, c) * Rat(lcm);
            rows.at(r, c) = scaled.get_num();
        }
    }
    return IntegerLattice::span_of_rows(rows).saturate();
}

}  // namespace nonproj
