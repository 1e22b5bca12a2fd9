#include "nilcx/subspace.hpp"

#include "nilcx/error.hpp"

namespace nilcx {

Subspace Subspace::zero(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = Matrix(0, ambient_dim);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = Matrix::identity(ambient_dim);
    for (std::size_t k = 0; k < ambient_dim; ++k) s.pivots_.push_back(k);
    return s;
}

Subspace Subspace::row_space(const Matrix& m) {
    RrefResult red = rref(m);
    Subspace s;
    s.ambient_ = m.cols();
    s.basis_ = Matrix(red.rank, m.cols());
    for (std::size_t r = 0; r < red.rank; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) s.basis_.at(r, c) = red.reduced.at(r, c);
    s.pivots_ = std::move(red.pivots);
    return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
    if (generators.empty()) return zero(ambient_dim);
    return row_space(Matrix::from_rows(ambient_dim, generators));
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& axes) {
    std::vector<Vector> gens;
    for (auto a : axes) {
        if (a >= ambient_dim) throw Error(ErrorKind::IndexOutOfRange, "coordinate axis");
        gens.push_back(unit_vector(ambient_dim, a));
    }
    return span(ambient_dim, gens);
}

std::vector<Vector> Subspace::vectors() const {
    std::vector<Vector> out;
    for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row(r));
    return out;
}

std::vector<std::size_t> Subspace::complement_indices() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (p < pivots_.size() && pivots_[p] == c) {
            ++p;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

Vector Subspace::quotient_coordinates(const Vector& v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "quotient coordinates");
    Vector rest = v;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        const Scalar c = rest[pivots_[r]];
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < ambient_; ++k) {
            if (!basis_.at(r, k).is_zero()) rest[k] -= c * basis_.at(r, k);
        }
    }
    Vector out;
    for (auto c : complement_indices()) out.push_back(rest[c]);
    return out;
}

Matrix Subspace::quotient_map() const {
    const auto comp = complement_indices();
    Matrix q(comp.size(), ambient_);
    for (std::size_t c = 0; c < ambient_; ++c) {
        const Vector col = quotient_coordinates(unit_vector(ambient_, c));
        for (std::size_t r = 0; r < comp.size(); ++r) q.at(r, c) = col[r];
    }
    return q;
}

bool Subspace::contains(const Vector& v) const { return nilcx::is_zero(quotient_coordinates(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspace containment");
    for (std::size_t r = 0; r < other.dim(); ++r) {
        if (!contains(other.basis_.row(r))) return false;
    }
    return true;
}

Subspace kernel_basis(const Matrix& m) {
    const RrefResult red = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : red.pivots) is_pivot[p] = true;
    std::vector<Vector> gens;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = -red.reduced.at(r, f);
        gens.push_back(std::move(v));
    }
    return Subspace::span(n, gens);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "intersect");
    const std::size_t n = a.ambient_dim();
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    if (da == 0 || db == 0) return Subspace::zero(n);
    // Columns: basis of a, then minus basis of b; a kernel vector (l, m) gives sum l_i a_i in a ∩ b.
    Matrix stacked(n, da + db);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < da; ++i) stacked.at(r, i) = a.basis().at(i, r);
        for (std::size_t j = 0; j < db; ++j) stacked.at(r, da + j) = -b.basis().at(j, r);
    }
    const Subspace ker = kernel_basis(stacked);
    std::vector<Vector> gens;
    for (std::size_t k = 0; k < ker.dim(); ++k) {
        Vector v(n);
        for (std::size_t i = 0; i < da; ++i) {
            const Scalar& l = ker.basis().at(k, i);
            if (l.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) v[c] += l * a.basis().at(i, c);
        }
        gens.push_back(std::move(v));
    }
    return Subspace::span(n, gens);
}

Subspace sum_span(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "sum_span");
    return Subspace::row_space(a.basis().stacked(b.basis()));
}

bool member(const Vector& v, const Subspace& s) {
    if (v.size() != s.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "member");
    return s.contains(v);
}

Subspace apply_map(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "apply_map");
    std::vector<Vector> images;
    for (std::size_t r = 0; r < s.dim(); ++r) images.push_back(m * s.basis().row(r));
    return Subspace::span(m.rows(), images);
}

}  // namespace nilcx
