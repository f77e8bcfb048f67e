#pragma once

#include <initializer_list>
#include <vector>

#include "nonproj/rational.hpp"

namespace nonproj {

// Dense matrix over Q.  Desk-scale: all algorithms are straightforward
// fraction-exact Gaussian elimination.
class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
    QMat(std::initializer_list<std::initializer_list<long>> init);

    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    QMat transpose() const;
    QMat operator*(const QMat& o) const;
    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    bool operator==(const QMat& o) const;

    // Row-reduced echelon form (in place); returns pivot column per pivot row.
    std::vector<int> rref();
    int rank() const;
    Rat det() const;
    QMat inverse() const;  // throws Error if singular

    bool is_zero() const;
    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

// Dense matrix over Z.
class ZMat {
public:
    ZMat() = default;
    ZMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
    ZMat(std::initializer_list<std::initializer_list<long>> init);

    static ZMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    ZMat transpose() const;
    ZMat operator*(const ZMat& o) const;
    ZMat operator-(const ZMat& o) const;
    bool operator==(const ZMat& o) const;

    Int det() const;  // Bareiss fraction-free elimination
    QMat to_q() const;

    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

// Solve x * A = b for a row vector x (A square invertible).  Used by the
// recovery step where everything is naturally row-based.
std::vector<Rat> solve_row(const QMat& a, const std::vector<Rat>& b);

}  // namespace nonproj
