#pragma once

#include <cstddef>
#include <vector>

#include "nilcx/matrix.hpp"

namespace nilcx {

/// Linear subspace of Q^n stored as its reduced row echelon basis (no zero rows).
/// Two subspaces are equal exactly when their stored bases are equal.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators);
    static Subspace row_space(const Matrix& m);
    /// Span of the given coordinate axes (0-based indices).
    static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& axes);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient_; }

    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    std::vector<Vector> vectors() const;

    /// Coordinates not used as pivots; the matching unit vectors span a complement.
    std::vector<std::size_t> complement_indices() const;
    /// Linear map Q^n -> Q^(n - dim) whose kernel is this subspace: reduce by the
    /// basis and keep the complement coordinates.
    Matrix quotient_map() const;
    Vector quotient_coordinates(const Vector& v) const;

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum_span(const Subspace& a, const Subspace& b);
bool member(const Vector& v, const Subspace& s);
/// Image { m v : v in s }.
Subspace apply_map(const Matrix& m, const Subspace& s);

}  // namespace nilcx
