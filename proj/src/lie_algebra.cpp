#include "nilcx/lie_algebra.hpp"

#include <algorithm>

#include "nilcx/error.hpp"

namespace nilcx {

namespace {

std::vector<std::string> default_names(std::size_t dim, std::vector<std::string> names) {
    if (names.empty()) {
        for (std::size_t k = 0; k < dim; ++k) names.push_back("e" + std::to_string(k + 1));
    }
    if (names.size() != dim) throw Error(ErrorKind::DimensionMismatch, "basis label count");
    return names;
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> names)
    : dim_(dim), names_(default_names(dim, std::move(names))), constants_(dim * dim * dim) {}

LieAlgebra::LieAlgebra(std::size_t dim, const BracketTable& brackets, std::vector<std::string> names)
    : LieAlgebra(dim, std::move(names)) {
    std::vector<bool> seen(dim * dim, false);
    for (const auto& [key, value] : brackets) {
        auto [i, j] = key;
        if (i >= dim || j >= dim) throw Error(ErrorKind::IndexOutOfRange, "bracket index");
        if (i == j) throw Error(ErrorKind::InvalidArgument, "bracket [e_i, e_i] must vanish");
        if (value.size() != dim) throw Error(ErrorKind::DimensionMismatch, "bracket value length");
        const std::size_t lo = std::min(i, j);
        const std::size_t hi = std::max(i, j);
        if (seen[lo * dim + hi]) throw Error(ErrorKind::DuplicateBracket, "bracket given twice");
        seen[lo * dim + hi] = true;
        const bool flip = i > j;
        for (std::size_t k = 0; k < dim; ++k) {
            const Scalar v = flip ? -value[k] : value[k];
            constants_[(lo * dim + hi) * dim + k] = v;
            constants_[(hi * dim + lo) * dim + k] = -v;
        }
    }
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    const auto first = constants_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
    return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

LieAlgebra::BracketTable LieAlgebra::brackets() const {
    BracketTable out;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i + 1; j < dim_; ++j) {
            Vector v = bracket_basis(i, j);
            if (!is_zero(v)) out.emplace(std::make_pair(i, j), std::move(v));
        }
    }
    return out;
}

Matrix LieAlgebra::right_adjoint(std::size_t j) const {
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, i) = constant(i, j, k);
    return m;
}

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y) {
    const std::size_t n = g.dim();
    if (x.size() != n || y.size() != n) throw Error(ErrorKind::DimensionMismatch, "bracket arguments");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || y[j].is_zero()) continue;
            const Scalar w = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = g.constant(i, j, k);
                if (!c.is_zero()) out[k] += w * c;
            }
        }
    }
    return out;
}

std::vector<JacobiDefect> jacobi_defect(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<JacobiDefect> out;
    const auto bracket_with_basis = [&](const Vector& v, std::size_t k) {
        Vector r(n);
        for (std::size_t m = 0; m < n; ++m) {
            if (v[m].is_zero()) continue;
            for (std::size_t l = 0; l < n; ++l) {
                const Scalar& c = g.constant(m, k, l);
                if (!c.is_zero()) r[l] += v[m] * c;
            }
        }
        return r;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector d = bracket_with_basis(g.bracket_basis(i, j), k) +
                           bracket_with_basis(g.bracket_basis(j, k), i) +
                           bracket_with_basis(g.bracket_basis(k, i), j);
                if (!is_zero(d)) out.push_back({i, j, k, std::move(d)});
            }
        }
    }
    return out;
}

bool is_lie_algebra(const LieAlgebra& g) { return jacobi_defect(g).empty(); }

SeriesReport ascending_central_series(const LieAlgebra& g) {
    if (!is_lie_algebra(g)) throw Error(ErrorKind::NotALieAlgebra, "Jacobi identity fails");
    const std::size_t n = g.dim();
    std::vector<Matrix> adjoints;
    for (std::size_t j = 0; j < n; ++j) adjoints.push_back(g.right_adjoint(j));

    SeriesReport report;
    report.terms.push_back(Subspace::zero(n));
    while (true) {
        const Subspace& previous = report.terms.back();
        const Matrix q = previous.quotient_map();
        Matrix conditions(0, n);
        for (const auto& ad : adjoints) conditions = conditions.stacked(q * ad);
        Subspace next = kernel_basis(conditions);
        if (next == previous) break;
        report.terms.push_back(std::move(next));
    }
    report.stabilized_at = report.terms.size() - 1;
    report.is_nilpotent = report.terms.back().is_full();
    if (report.is_nilpotent) {
        report.step = report.stabilized_at;
        std::vector<std::size_t> type;
        for (std::size_t k = 1; k < report.terms.size(); ++k) type.push_back(report.terms[k].dim());
        report.ascending_type = std::move(type);
    }
    return report;
}

std::vector<std::size_t> ascending_type(const LieAlgebra& g) {
    const SeriesReport report = ascending_central_series(g);
    if (!report.is_nilpotent) throw Error(ErrorKind::NotNilpotent, "ascending central series stabilizes below g");
    return *report.ascending_type;
}

Subspace center(const LieAlgebra& g) { return ascending_central_series(g).term(1); }

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
    if (s.ambient_dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "is_ideal");
    for (std::size_t r = 0; r < s.dim(); ++r) {
        const Vector v = s.basis().row(r);
        for (std::size_t i = 0; i < g.dim(); ++i) {
            if (!s.contains(bracket(g, unit_vector(g.dim(), i), v))) return false;
        }
    }
    return true;
}

Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
    if (!is_ideal(g, ideal)) throw Error(ErrorKind::NotAnIdeal, "subspace is not an ideal");
    const std::size_t n = g.dim();
    const auto comp = ideal.complement_indices();
    const std::size_t m = comp.size();
    Matrix projection = ideal.quotient_map();
    Matrix lift(n, m);
    std::vector<std::string> names;
    for (std::size_t a = 0; a < m; ++a) {
        lift.at(comp[a], a) = 1;
        names.push_back(g.names()[comp[a]]);
    }
    LieAlgebra::BracketTable table;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            Vector v = projection * g.bracket_basis(comp[a], comp[b]);
            if (!is_zero(v)) table.emplace(std::make_pair(a, b), std::move(v));
        }
    }
    return {LieAlgebra(m, table, std::move(names)), std::move(projection), std::move(lift)};
}

LieAlgebra direct_product(const LieAlgebra& g1, const LieAlgebra& g2) {
    const std::size_t n1 = g1.dim();
    const std::size_t n = n1 + g2.dim();
    LieAlgebra::BracketTable table;
    for (const auto& [key, value] : g1.brackets()) {
        Vector v(n);
        std::copy(value.begin(), value.end(), v.begin());
        table.emplace(key, std::move(v));
    }
    for (const auto& [key, value] : g2.brackets()) {
        Vector v(n);
        std::copy(value.begin(), value.end(), v.begin() + static_cast<std::ptrdiff_t>(n1));
        table.emplace(std::make_pair(key.first + n1, key.second + n1), std::move(v));
    }
    std::vector<std::string> names = g1.names();
    names.insert(names.end(), g2.names().begin(), g2.names().end());
    return LieAlgebra(n, table, std::move(names));
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p) {
    const std::size_t n = g.dim();
    if (p.rows() != n || p.cols() != n) throw Error(ErrorKind::DimensionMismatch, "change_basis matrix size");
    const Matrix inv = p.inverse();
    std::vector<Vector> columns;
    for (std::size_t j = 0; j < n; ++j) columns.push_back(p.column(j));
    LieAlgebra::BracketTable table;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector v = inv * bracket(g, columns[i], columns[j]);
            if (!is_zero(v)) table.emplace(std::make_pair(i, j), std::move(v));
        }
    }
    return LieAlgebra(n, table);
}

}  // namespace nilcx
