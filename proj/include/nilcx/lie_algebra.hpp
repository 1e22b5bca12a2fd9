#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcx/matrix.hpp"
#include "nilcx/subspace.hpp"

namespace nilcx {

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c_ij^k e_k over the rationals. Indices are 0-based.
///
/// Only the brackets with i < j are ever supplied; the opposite order is filled
/// in by antisymmetry, so [x, x] = 0 holds by construction. The Jacobi identity
/// is *not* enforced here (see jacobi_defect).
class LieAlgebra {
public:
    /// Keys (i, j) with i != j; a key with i > j stores -[e_j, e_i].
    using BracketTable = std::map<std::pair<std::size_t, std::size_t>, Vector>;

    LieAlgebra() = default;
    /// Abelian algebra of the given dimension.
    explicit LieAlgebra(std::size_t dim, std::vector<std::string> names = {});
    LieAlgebra(std::size_t dim, const BracketTable& brackets, std::vector<std::string> names = {});

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return constants_[(i * dim_ + j) * dim_ + k];
    }
    Vector bracket_basis(std::size_t i, std::size_t j) const;
    /// Nonzero brackets [e_i, e_j] with i < j.
    BracketTable brackets() const;
    /// Matrix of x -> [x, e_j].
    Matrix right_adjoint(std::size_t j) const;

    /// Equality of structure constants; labels are ignored.
    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.constants_ == b.constants_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    std::vector<Scalar> constants_;
};

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y);

struct JacobiDefect {
    std::size_t i, j, k;  // 0-based, i < j < k
    Vector defect;        // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

std::vector<JacobiDefect> jacobi_defect(const LieAlgebra& g);
bool is_lie_algebra(const LieAlgebra& g);

struct SeriesReport {
    /// terms[0] = {0}, terms[k] = g_k, up to and including terms[stabilized_at].
    std::vector<Subspace> terms;
    std::size_t stabilized_at = 0;
    bool is_nilpotent = false;
    std::optional<std::size_t> step;
    std::optional<std::vector<std::size_t>> ascending_type;

    /// g_k for any k >= 0 (the series is constant after stabilization).
    const Subspace& term(std::size_t k) const { return terms[std::min(k, stabilized_at)]; }
};

/// Throws Error(NotALieAlgebra) if the Jacobi identity fails.
SeriesReport ascending_central_series(const LieAlgebra& g);
/// Throws Error(NotNilpotent) when the series stabilizes below g.
std::vector<std::size_t> ascending_type(const LieAlgebra& g);
Subspace center(const LieAlgebra& g);

bool is_ideal(const LieAlgebra& g, const Subspace& s);

struct Quotient {
    LieAlgebra algebra;
    /// (dim g - dim ideal) x dim g; maps g onto quotient coordinates.
    Matrix projection;
    /// dim g x (dim g - dim ideal); sends quotient basis vectors to their representatives.
    Matrix lift;
};

/// Quotient by an ideal. The complement basis is the set of non-pivot coordinates
/// of the ideal's canonical basis. Throws Error(NotAnIdeal).
Quotient quotient(const LieAlgebra& g, const Subspace& ideal);

LieAlgebra direct_product(const LieAlgebra& g1, const LieAlgebra& g2);

/// New basis f_j = sum_i p_ij e_i (the columns of p). Throws Error(SingularMatrix).
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p);

}  // namespace nilcx
