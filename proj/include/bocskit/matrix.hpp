#pragma once

#include <vector>
#include <map>
#include <string>

#include "bocskit/rational.hpp"

namespace bocskit {

// Dense matrix over the rationals. Sizes in this library are tiny, so a dense
// representation with plain Gaussian elimination is the simplest exact tool.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool isZero() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Rational& s) const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    Matrix transpose() const;

    int rank() const;
    // Basis of the right kernel {x : Ax = 0}, as columns.
    std::vector<std::vector<Rational>> kernelBasis() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    std::string toString() const;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

// Incremental row-space with reduction: used for ideal spans and quotient bases.
// Rows are indexed over a fixed ambient dimension; pivotChoiceHigh selects the
// highest-index nonzero entry as pivot (so "large" basis vectors get eliminated).
class RowSpace {
public:
    explicit RowSpace(int dim, bool pivotChoiceHigh = true) : dim_(dim), pivotHigh_(pivotChoiceHigh) {}

    // Reduce v against the stored rows in place.
    void reduce(std::vector<Rational>& v) const;
    // Reduce and, if nonzero, insert; returns true if the row enlarged the space.
    bool insert(std::vector<Rational> v);

    bool contains(std::vector<Rational> v) const;
    int rank() const { return static_cast<int>(rowsByPivot_.size()); }
    const std::map<int, std::vector<Rational>>& rows() const { return rowsByPivot_; }
    bool isPivot(int i) const { return rowsByPivot_.count(i) > 0; }

private:
    int dim_;
    bool pivotHigh_;
    std::map<int, std::vector<Rational>> rowsByPivot_;
    int pickPivot(const std::vector<Rational>& v) const;
};

}  // namespace bocskit
