#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nilcx/lie_algebra.hpp"

namespace nilcx {

/// Almost complex structure: an even-dimensional square matrix with J^2 = -Id.
/// Column k holds J e_k.
class Acs {
public:
    /// Throws Error(OddDimension) or Error(NotAlmostComplex).
    static Acs validate(Matrix j);
    /// Standard structure J e_{2a} = e_{2a+1} on consecutive coordinate pairs (0-based).
    static Acs standard(std::size_t dim);
    /// Structure with J e_x = e_y, J e_y = -e_x for every listed pair (0-based).
    static Acs from_pairs(std::size_t dim, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

    std::size_t dim() const noexcept { return matrix_.rows(); }
    const Matrix& matrix() const noexcept { return matrix_; }
    Vector apply(const Vector& v) const { return matrix_ * v; }

    friend bool operator==(const Acs&, const Acs&) = default;

private:
    explicit Acs(Matrix m) : matrix_(std::move(m)) {}
    Matrix matrix_;
};

Acs validate_acs(const Matrix& j);

/// N_J(X,Y) = [X,Y] + J[JX,Y] + J[X,JY] - [JX,JY].
Vector nijenhuis(const LieAlgebra& g, const Acs& j, const Vector& x, const Vector& y);

struct NijenhuisDefect {
    std::size_t i, k;  // 0-based, i < k
    Vector defect;
};

std::vector<NijenhuisDefect> integrability_defect(const LieAlgebra& g, const Acs& j);
bool is_integrable(const LieAlgebra& g, const Acs& j);

enum class JKind { Nilpotent, WeaklyNonNilpotent, StronglyNonNilpotent };

const char* to_string(JKind kind);
bool is_quasi_nilpotent(JKind kind);

struct JClassification {
    JKind kind = JKind::Nilpotent;
    /// Least t with a_t(J) = a_{t+1}(J).
    std::size_t stabilization_index = 0;
    /// a_0(J) = {0}, a_1(J), ..., a_t(J).
    std::vector<Subspace> j_series;

    const Subspace& term(std::size_t k) const { return j_series[std::min(k, stabilization_index)]; }
};

/// Ascending J-compatible series and the three-way classification.
/// Throws Error(NotALieAlgebra) or Error(NotIntegrable).
JClassification j_compatible_series(const LieAlgebra& g, const Acs& j);

/// s ∩ J(s): the largest J-invariant subspace contained in s.
Subspace largest_j_invariant(const Acs& j, const Subspace& s);

struct InducedQuotient {
    LieAlgebra algebra;
    Acs structure;
    Matrix projection;
};

/// Quotient of g by a_q(J) with the induced structure. Throws Error(IndexOutOfRange)
/// when q exceeds the stabilization index.
InducedQuotient induced_quotient(const LieAlgebra& g, const Acs& j, std::size_t q);

/// Columns (2k, 2k+1) of `basis` must be pairs (X, JX); throws Error(NotJAdapted) otherwise.
/// True iff #(basis columns in g_k) = dim g_k for every k.
bool doubly_adapted_check(const LieAlgebra& g, const Acs& j, const Matrix& basis);

/// A J-adapted basis {X_1, JX_1, X_2, JX_2, ...} as matrix columns, chosen greedily
/// among the coordinate vectors.
Matrix adapted_basis(const Acs& j);

/// Structure transported along change_basis(g, p): p^{-1} J p.
Acs transport(const Acs& j, const Matrix& p);

}  // namespace nilcx
