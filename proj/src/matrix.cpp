#include "nilcx/matrix.hpp"

#include <utility>

#include "nilcx/error.hpp"

namespace nilcx {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t index) {
    Vector v(n);
    v.at(index) = 1;
    return v;
}

bool is_zero(std::span<const Scalar> v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector sum");
    Vector out = a;
    for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
    return out;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector difference");
    Vector out = a;
    for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
    return out;
}

Vector operator*(const Scalar& c, const Vector& v) {
    Vector out = v;
    for (auto& x : out) x *= c;
    return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = 1;
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::inverse() const {
    if (!is_square()) throw Error(ErrorKind::SingularMatrix, "non-square matrix");
    const std::size_t n = rows_;
    Matrix augmented(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) augmented.at(r, c) = at(r, c);
        augmented.at(r, n + r) = 1;
    }
    const RrefResult red = rref(augmented);
    for (std::size_t r = 0; r < n; ++r) {
        if (r >= red.pivots.size() || red.pivots[r] != r) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
    }
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.reduced.at(r, n + c);
    return inv;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                if (!rhs.at(k, c).is_zero()) out.at(r, c) += a * rhs.at(k, c);
            }
        }
    }
    return out;
}

Vector Matrix::operator*(const Vector& v) const {
    if (cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!v[c].is_zero() && !at(r, c).is_zero()) out[r] += at(r, c) * v[c];
        }
    }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
    Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
    return out;
}

Matrix Matrix::stacked(const Matrix& lower) const {
    if (rows_ == 0) return lower;
    if (lower.rows_ == 0) return *this;
    if (cols_ != lower.cols_) throw Error(ErrorKind::DimensionMismatch, "stacking");
    Matrix out(rows_ + lower.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(lower.data_.begin(), lower.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
}

RrefResult rref(const Matrix& m) {
    RrefResult result{m, 0, {}};
    Matrix& a = result.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t found = rows;
        for (std::size_t r = pivot_row; r < rows; ++r) {
            if (!a.at(r, c).is_zero()) {
                found = r;
                break;
            }
        }
        if (found == rows) continue;
        if (found != pivot_row) {
            for (std::size_t k = 0; k < cols; ++k) std::swap(a.at(found, k), a.at(pivot_row, k));
        }
        const Scalar inv = a.at(pivot_row, c).inverse();
        for (std::size_t k = c; k < cols; ++k) {
            if (!a.at(pivot_row, k).is_zero()) a.at(pivot_row, k) *= inv;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || a.at(r, c).is_zero()) continue;
            const Scalar factor = a.at(r, c);
            for (std::size_t k = c; k < cols; ++k) {
                if (!a.at(pivot_row, k).is_zero()) a.at(r, k) -= factor * a.at(pivot_row, k);
            }
        }
        result.pivots.push_back(c);
        ++pivot_row;
    }
    result.rank = pivot_row;
    return result;
}

}  // namespace nilcx
