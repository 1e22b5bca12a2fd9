#include "nilcx/complex_structure.hpp"

#include "nilcx/error.hpp"

namespace nilcx {

Acs Acs::validate(Matrix j) {
    if (!j.is_square()) throw Error(ErrorKind::DimensionMismatch, "almost complex structure must be square");
    if (j.rows() % 2 != 0) throw Error(ErrorKind::OddDimension, "almost complex structure needs even dimension");
    if (j * j != -Matrix::identity(j.rows())) throw Error(ErrorKind::NotAlmostComplex, "J^2 != -Id");
    return Acs(std::move(j));
}

Acs Acs::standard(std::size_t dim) {
    if (dim % 2 != 0) throw Error(ErrorKind::OddDimension, "standard structure needs even dimension");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < dim; a += 2) pairs.emplace_back(a, a + 1);
    return from_pairs(dim, pairs);
}

Acs Acs::from_pairs(std::size_t dim, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    Matrix m(dim, dim);
    for (auto [x, y] : pairs) {
        if (x >= dim || y >= dim) throw Error(ErrorKind::IndexOutOfRange, "pair index");
        m.at(y, x) = 1;
        m.at(x, y) = -1;
    }
    return validate(std::move(m));
}

Acs validate_acs(const Matrix& j) { return Acs::validate(j); }

Vector nijenhuis(const LieAlgebra& g, const Acs& j, const Vector& x, const Vector& y) {
    if (j.dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "nijenhuis");
    const Vector jx = j.apply(x);
    const Vector jy = j.apply(y);
    return bracket(g, x, y) + j.apply(bracket(g, jx, y) + bracket(g, x, jy)) - bracket(g, jx, jy);
}

std::vector<NijenhuisDefect> integrability_defect(const LieAlgebra& g, const Acs& j) {
    if (j.dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "integrability_defect");
    const std::size_t n = g.dim();
    std::vector<NijenhuisDefect> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            Vector d = nijenhuis(g, j, unit_vector(n, i), unit_vector(n, k));
            if (!is_zero(d)) out.push_back({i, k, std::move(d)});
        }
    }
    return out;
}

bool is_integrable(const LieAlgebra& g, const Acs& j) { return integrability_defect(g, j).empty(); }

const char* to_string(JKind kind) {
    switch (kind) {
        case JKind::Nilpotent: return "nilpotent";
        case JKind::WeaklyNonNilpotent: return "weakly non-nilpotent";
        case JKind::StronglyNonNilpotent: return "strongly non-nilpotent";
    }
    return "unknown";
}

bool is_quasi_nilpotent(JKind kind) { return kind != JKind::StronglyNonNilpotent; }

JClassification j_compatible_series(const LieAlgebra& g, const Acs& j) {
    if (j.dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "j_compatible_series");
    if (!is_lie_algebra(g)) throw Error(ErrorKind::NotALieAlgebra, "Jacobi identity fails");
    if (!is_integrable(g, j)) throw Error(ErrorKind::NotIntegrable, "Nijenhuis tensor does not vanish");
    const std::size_t n = g.dim();
    std::vector<Matrix> adjoints;
    for (std::size_t k = 0; k < n; ++k) {
        Matrix ad = g.right_adjoint(k);
        Matrix ad_j = ad * j.matrix();
        adjoints.push_back(std::move(ad));
        adjoints.push_back(std::move(ad_j));
    }
    JClassification result;
    result.j_series.push_back(Subspace::zero(n));
    while (true) {
        const Matrix q = result.j_series.back().quotient_map();
        Matrix conditions(0, n);
        for (const auto& ad : adjoints) conditions = conditions.stacked(q * ad);
        Subspace next = kernel_basis(conditions);
        if (next == result.j_series.back()) break;
        result.j_series.push_back(std::move(next));
    }
    result.stabilization_index = result.j_series.size() - 1;
    if (result.j_series.back().is_full()) {
        result.kind = JKind::Nilpotent;
    } else if (result.term(1).is_zero()) {
        result.kind = JKind::StronglyNonNilpotent;
    } else {
        result.kind = JKind::WeaklyNonNilpotent;
    }
    return result;
}

Subspace largest_j_invariant(const Acs& j, const Subspace& s) {
    if (j.dim() != s.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "largest_j_invariant");
    return intersect(s, apply_map(j.matrix(), s));
}

InducedQuotient induced_quotient(const LieAlgebra& g, const Acs& j, std::size_t q) {
    const JClassification cls = j_compatible_series(g, j);
    if (q > cls.stabilization_index) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "q = " + std::to_string(q) + " exceeds stabilization index " +
                        std::to_string(cls.stabilization_index));
    }
    Quotient quo = quotient(g, cls.j_series[q]);
    Acs induced = Acs::validate(quo.projection * j.matrix() * quo.lift);
    return {std::move(quo.algebra), std::move(induced), std::move(quo.projection)};
}

bool doubly_adapted_check(const LieAlgebra& g, const Acs& j, const Matrix& basis) {
    const std::size_t n = g.dim();
    if (j.dim() != n || basis.rows() != n || basis.cols() != n) {
        throw Error(ErrorKind::DimensionMismatch, "doubly_adapted_check");
    }
    if (rref(basis).rank != n) throw Error(ErrorKind::NotJAdapted, "basis is not invertible");
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        if (j.apply(basis.column(k)) != basis.column(k + 1)) {
            throw Error(ErrorKind::NotJAdapted,
                        "column " + std::to_string(k + 2) + " is not J of column " + std::to_string(k + 1));
        }
    }
    const SeriesReport series = ascending_central_series(g);
    for (std::size_t k = 1; k <= series.stabilized_at; ++k) {
        const Subspace& gk = series.terms[k];
        std::size_t count = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (gk.contains(basis.column(c))) ++count;
        }
        if (count != gk.dim()) return false;
    }
    return true;
}

Matrix adapted_basis(const Acs& j) {
    const std::size_t n = j.dim();
    std::vector<Vector> columns;
    Subspace covered = Subspace::zero(n);
    for (std::size_t k = 0; k < n && covered.dim() < n; ++k) {
        Vector x = unit_vector(n, k);
        if (covered.contains(x)) continue;
        Vector jx = j.apply(x);
        covered = sum_span(covered, Subspace::span(n, {x, jx}));
        columns.push_back(std::move(x));
        columns.push_back(std::move(jx));
    }
    return Matrix::from_columns(n, columns);
}

Acs transport(const Acs& j, const Matrix& p) { return Acs::validate(p.inverse() * j.matrix() * p); }

}  // namespace nilcx
