#include "nonproj/matrix.hpp"

#include <sstream>

namespace nonproj {

QMat::QMat(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    data_.resize(static_cast<size_t>(rows_) * cols_);
    int r = 0;
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols_) throw Error("ragged initializer");
        int c = 0;
        for (long v : row) at(r, c++) = Rat(v);
        ++r;
    }
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::transpose() const {
    QMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
    QMat p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(r, k);
            if (sgn(x) == 0) continue;
            for (int c = 0; c < o.cols_; ++c) {
                if (sgn(o.at(k, c)) == 0) continue;
                p.at(r, c) += x * o.at(k, c);
            }
        }
    return p;
}

QMat QMat::operator+(const QMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum dimension mismatch");
    QMat s(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
    return s;
}

QMat QMat::operator-(const QMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference dimension mismatch");
    QMat s(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - o.data_[i];
    return s;
}

bool QMat::operator==(const QMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<int> QMat::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int p = -1;
        for (int r = row; r < rows_; ++r)
            if (sgn(at(r, col)) != 0) { p = r; break; }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < cols_; ++c) std::swap(at(p, c), at(row, c));
        Rat inv = 1 / at(row, col);
        for (int c = col; c < cols_; ++c) at(row, c) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || sgn(at(r, col)) == 0) continue;
            Rat f = at(r, col);
            for (int c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int QMat::rank() const {
    QMat copy = *this;
    return static_cast<int>(copy.rref().size());
}

Rat QMat::det() const {
    if (rows_ != cols_) throw Error("determinant of non-square matrix");
    QMat a = *this;
    Rat d = 1;
    for (int col = 0; col < cols_; ++col) {
        int p = -1;
        for (int r = col; r < rows_; ++r)
            if (sgn(a.at(r, col)) != 0) { p = r; break; }
        if (p < 0) return Rat(0);
        if (p != col) {
            for (int c = 0; c < cols_; ++c) std::swap(a.at(p, c), a.at(col, c));
            d = -d;
        }
        d *= a.at(col, col);
        Rat inv = 1 / a.at(col, col);
        for (int r = col + 1; r < rows_; ++r) {
            if (sgn(a.at(r, col)) == 0) continue;
            Rat f = a.at(r, col) * inv;
            for (int c = col; c < cols_; ++c) a.at(r, c) -= f * a.at(col, c);
        }
    }
    return d;
}

QMat QMat::inverse() const {
    if (rows_ != cols_) throw Error("inverse of non-square matrix");
    QMat aug(rows_, 2 * cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = 1;
    }
    auto piv = aug.rref();
    if (static_cast<int>(piv.size()) != rows_ || piv.back() >= cols_)
        throw Error("matrix is singular");
    QMat inv(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
    return inv;
}

bool QMat::is_zero() const {
    for (const Rat& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

std::string QMat::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << (r ? "\n[" : "[");
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).get_str();
        os << "]";
    }
    return os.str();
}

ZMat::ZMat(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    data_.resize(static_cast<size_t>(rows_) * cols_);
    int r = 0;
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols_) throw Error("ragged initializer");
        int c = 0;
        for (long v : row) at(r, c++) = Int(v);
        ++r;
    }
}

ZMat ZMat::identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMat ZMat::transpose() const {
    ZMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

ZMat ZMat::operator*(const ZMat& o) const {
    if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
    ZMat p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(r, k);
            if (sgn(x) == 0) continue;
            for (int c = 0; c < o.cols_; ++c) p.at(r, c) += x * o.at(k, c);
        }
    return p;
}

ZMat ZMat::operator-(const ZMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference dimension mismatch");
    ZMat s(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - o.data_[i];
    return s;
}

bool ZMat::operator==(const ZMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Int ZMat::det() const {
    if (rows_ != cols_) throw Error("determinant of non-square matrix");
    int n = rows_;
    if (n == 0) return Int(1);
    ZMat a = *this;
    Int prev = 1;
    int swaps = 0;
    for (int k = 0; k < n - 1; ++k) {
        int p = -1;
        for (int r = k; r < n; ++r)
            if (sgn(a.at(r, k)) != 0) { p = r; break; }
        if (p < 0) return Int(0);
        if (p != k) {
            for (int c = 0; c < n; ++c) std::swap(a.at(p, c), a.at(k, c));
            ++swaps;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c) {
                Int num = a.at(r, c) * a.at(k, k) - a.at(r, k) * a.at(k, c);
                a.at(r, c) = num / prev;  // exact by Bareiss
            }
        prev = a.at(k, k);
    }
    Int d = a.at(n - 1, n - 1);
    return (swaps % 2) ? Int(-d) : d;
}

QMat ZMat::to_q() const {
    QMat q(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) q.at(r, c) = Rat(at(r, c));
    return q;
}

std::string ZMat::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << (r ? "\n[" : "[");
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).get_str();
        os << "]";
    }
    return os.str();
}

std::vector<Rat> solve_row(const QMat& a, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw Error("solve_row dimension mismatch");
    QMat inv = a.inverse();
    std::vector<Rat> x(a.cols());
    for (int c = 0; c < a.cols(); ++c) {
        Rat s = 0;
        for (int r = 0; r < a.rows(); ++r) s += b[r] * inv.at(r, c);
        x[c] = s;
    }
    return x;
}

}  // namespace nonproj
