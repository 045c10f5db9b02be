#include "bocskit/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace bocskit {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool Matrix::isZero() const {
    for (const auto& x : a_)
        if (!x.isZero()) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch in +");
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch in -");
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in *");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (x.isZero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).isZero()) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::operator*(const Rational& s) const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

int Matrix::rank() const {
    Matrix m = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (!m.at(r, col).isZero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        Rational inv = m.at(rank, col).inverse();
        for (int j = col; j < cols_; ++j) m.at(rank, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || m.at(r, col).isZero()) continue;
            Rational f = m.at(r, col);
            for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> Matrix::kernelBasis() const {
    Matrix m = *this;
    std::vector<int> pivotCol;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (!m.at(r, col).isZero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        Rational inv = m.at(rank, col).inverse();
        for (int j = col; j < cols_; ++j) m.at(rank, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || m.at(r, col).isZero()) continue;
            Rational f = m.at(r, col);
            for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(rank, j);
        }
        pivotCol.push_back(col);
        ++rank;
    }
    std::vector<bool> isPivot(cols_, false);
    for (int c : pivotCol) isPivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int freeCol = 0; freeCol < cols_; ++freeCol) {
        if (isPivot[freeCol]) continue;
        std::vector<Rational> v(cols_);
        v[freeCol] = Rational(1);
        for (int r = 0; r < rank; ++r) v[pivotCol[r]] = -m.at(r, freeCol);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix: apply size mismatch");
    std::vector<Rational> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).isZero() && !v[j].isZero()) r[i] += at(i, j) * v[j];
    return r;
}

std::string Matrix::toString() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).toString();
        }
        os << "]\n";
    }
    return os.str();
}

int RowSpace::pickPivot(const std::vector<Rational>& v) const {
    if (pivotHigh_) {
        for (int i = dim_; i-- > 0;)
            if (!v[i].isZero()) return i;
    } else {
        for (int i = 0; i < dim_; ++i)
            if (!v[i].isZero()) return i;
    }
    return -1;
}

void RowSpace::reduce(std::vector<Rational>& v) const {
    for (auto it = rowsByPivot_.rbegin(); it != rowsByPivot_.rend(); ++it) {
        const auto& [p, row] = *it;
        if (v[p].isZero()) continue;
        Rational f = v[p];  // rows stored with pivot = 1
        for (int i = 0; i < dim_; ++i)
            if (!row[i].isZero()) v[i] -= f * row[i];
    }
}

bool RowSpace::insert(std::vector<Rational> v) {
    reduce(v);
    int p = pickPivot(v);
    if (p < 0) return false;
    Rational inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    // keep existing rows reduced against the new one
    for (auto& [q, row] : rowsByPivot_) {
        if (row[p].isZero()) continue;
        Rational f = row[p];
        for (int i = 0; i < dim_; ++i)
            if (!v[i].isZero()) row[i] -= f * v[i];
    }
    rowsByPivot_[p] = std::move(v);
    return true;
}

bool RowSpace::contains(std::vector<Rational> v) const {
    reduce(v);
    return pickPivot(v) < 0;
}

}  // namespace bocskit
