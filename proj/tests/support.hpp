#pragma once

// Test-side oracles and generators. The oracles work on raw mpq_class tables with
// their own elimination so they share no code path with the library routines they
// check.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nilcx/complex_structure.hpp"
#include "nilcx/lie_algebra.hpp"
#include "nilcx/nla.hpp"
#include "nilcx/subspace.hpp"

namespace testing {

using Q = mpq_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;  // row-major, rows of equal length

// ---------------------------------------------------------------------------
// oracle linear algebra

/// Basis of { x : m x = 0 } for an r x n matrix.
inline QMat nullspace(QMat m, std::size_t n) {
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const Q inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Q f = m[r][col];
            for (std::size_t c = 0; c < n; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    QMat basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        QVec v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::size_t rank(const QMat& m, std::size_t n) { return n - nullspace(m, n).size(); }

/// Rows spanning the annihilator of span(vectors) in the dual.
inline QMat annihilator(const QMat& vectors, std::size_t n) { return nullspace(vectors, n); }

// ---------------------------------------------------------------------------
// oracle Lie algebra

struct Table {
    std::size_t n = 0;
    std::vector<Q> c;  // c[(i*n+j)*n+k] = coefficient of e_k in [e_i,e_j]

    Q& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; }
    const Q& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * n + j) * n + k]; }
};

inline Table table_of(const nilcx::LieAlgebra& g) {
    Table t{g.dim(), std::vector<Q>(g.dim() * g.dim() * g.dim())};
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j)
            for (std::size_t k = 0; k < t.n; ++k) t.at(i, j, k) = g.constant(i, j, k).raw();
    return t;
}

inline QVec br(const Table& t, const QVec& x, const QVec& y) {
    QVec out(t.n, 0);
    for (std::size_t i = 0; i < t.n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < t.n; ++j) {
            if (y[j] == 0) continue;
            const Q f = x[i] * y[j];
            for (std::size_t k = 0; k < t.n; ++k) out[k] += f * t.at(i, j, k);
        }
    }
    return out;
}

inline QVec unit(std::size_t n, std::size_t i) {
    QVec v(n, 0);
    v[i] = 1;
    return v;
}

inline bool zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline bool jacobi_holds(const Table& t) {
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j)
            for (std::size_t k = 0; k < t.n; ++k) {
                const QVec a = unit(t.n, i), b = unit(t.n, j), c = unit(t.n, k);
                const QVec s1 = br(t, br(t, a, b), c);
                const QVec s2 = br(t, br(t, b, c), a);
                const QVec s3 = br(t, br(t, c, a), b);
                for (std::size_t m = 0; m < t.n; ++m)
                    if (s1[m] + s2[m] + s3[m] != 0) return false;
            }
    return true;
}

/// Basis of { x : [x, e_j] and [jx, e_j] lie in span(w) for all j }. With `jm` empty
/// only the first condition is imposed. jm is given by columns: jm[k] = J e_k.
inline QMat next_term(const Table& t, const QMat& w, const QMat& jm) {
    const QMat ann = annihilator(w, t.n);
    QMat rows;
    for (std::size_t j = 0; j < t.n; ++j) {
        for (const auto& f : ann) {
            // f([x, e_j]) as a linear form in x
            QVec form(t.n, 0);
            for (std::size_t i = 0; i < t.n; ++i)
                for (std::size_t k = 0; k < t.n; ++k) form[i] += f[k] * t.at(i, j, k);
            rows.push_back(form);
            if (!jm.empty()) {
                // f([J x, e_j]) = sum_i x_i f([J e_i, e_j])
                QVec jform(t.n, 0);
                for (std::size_t i = 0; i < t.n; ++i)
                    for (std::size_t l = 0; l < t.n; ++l) jform[i] += jm[i][l] * form[l];
                rows.push_back(jform);
            }
        }
    }
    return nullspace(rows, t.n);
}

/// Dimensions of g_1, g_2, ... until stabilization.
inline std::vector<std::size_t> series_dims(const Table& t, const QMat& jm = {}) {
    std::vector<std::size_t> dims;
    QMat w;
    std::size_t prev = 0;
    for (;;) {
        w = next_term(t, w, jm);
        if (w.size() == prev) break;
        dims.push_back(w.size());
        prev = w.size();
        if (prev == t.n) break;
    }
    return dims;
}

inline std::size_t center_dim(const Table& t) { return next_term(t, {}, {}).size(); }

/// Columns of an Acs as raw rationals: result[k] = J e_k.
inline QMat columns_of(const nilcx::Acs& j) {
    QMat cols(j.dim(), QVec(j.dim(), 0));
    for (std::size_t r = 0; r < j.dim(); ++r)
        for (std::size_t c = 0; c < j.dim(); ++c) cols[c][r] = j.matrix().at(r, c).raw();
    return cols;
}

inline QVec apply_cols(const QMat& cols, const QVec& v) {
    QVec out(v.size(), 0);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0)
            for (std::size_t r = 0; r < v.size(); ++r) out[r] += v[k] * cols[k][r];
    return out;
}

inline bool nijenhuis_vanishes(const Table& t, const QMat& jm) {
    for (std::size_t a = 0; a < t.n; ++a)
        for (std::size_t b = a + 1; b < t.n; ++b) {
            const QVec x = unit(t.n, a), y = unit(t.n, b);
            const QVec jx = apply_cols(jm, x), jy = apply_cols(jm, y);
            const QVec t1 = br(t, x, y);
            const QVec t2 = apply_cols(jm, br(t, jx, y));
            const QVec t3 = apply_cols(jm, br(t, x, jy));
            const QVec t4 = br(t, jx, jy);
            for (std::size_t k = 0; k < t.n; ++k)
                if (t1[k] + t2[k] + t3[k] - t4[k] != 0) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// generators

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
    bool chance(int percent) { return integer(1, 100) <= percent; }

    /// p/q with |p| <= 3, 1 <= q <= 3; zero with the given probability.
    nilcx::Scalar scalar(int zero_percent = 40) {
        if (chance(zero_percent)) return nilcx::Scalar(0);
        int p = 0;
        while (p == 0) p = integer(-3, 3);
        return nilcx::Scalar(p, integer(1, 3));
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// Invertible matrix: permuted product of unit lower and upper triangular factors.
inline nilcx::Matrix random_invertible(Rng& rng, std::size_t n) {
    nilcx::Matrix lower = nilcx::Matrix::identity(n), upper = nilcx::Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (r > c) lower.at(r, c) = rng.scalar(60);
            if (r < c) upper.at(r, c) = rng.scalar(60);
        }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    nilcx::Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) p.at(perm[i], i) = nilcx::Scalar(rng.chance(50) ? 1 : -1);
    return p * lower * upper;
}

inline nilcx::Subspace random_subspace(Rng& rng, std::size_t n) {
    const std::size_t count = rng.index(n + 1);
    std::vector<nilcx::Vector> gens;
    for (std::size_t i = 0; i < count; ++i) {
        nilcx::Vector v(n);
        for (auto& x : v) x = rng.scalar(50);
        gens.push_back(v);
    }
    // Reuse earlier generators now and then so that sums and intersections are not generic.
    if (count >= 2 && rng.chance(30)) gens.push_back(gens[0] + gens[1]);
    return nilcx::Subspace::span(n, gens);
}

/// Arbitrary antisymmetric constants; usually not a Lie algebra.
inline nilcx::LieAlgebra random_bracket_table(Rng& rng, std::size_t n, int zero_percent = 85) {
    nilcx::LieAlgebra::BracketTable table;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            nilcx::Vector v(n);
            for (auto& x : v) x = rng.scalar(zero_percent);
            if (!nilcx::is_zero(v)) table[{i, j}] = v;
        }
    return nilcx::LieAlgebra(n, table);
}

/// Two-step nilpotent algebra: brackets of the first n - m vectors land in the last m.
inline nilcx::LieAlgebra random_two_step(Rng& rng, std::size_t n) {
    const std::size_t m = 1 + rng.index(n / 2);
    nilcx::LieAlgebra::BracketTable table;
    for (std::size_t i = 0; i + m < n; ++i)
        for (std::size_t j = i + 1; j + m < n; ++j) {
            nilcx::Vector v(n);
            for (std::size_t k = n - m; k < n; ++k) v[k] = rng.scalar(60);
            if (!nilcx::is_zero(v)) table[{i, j}] = v;
        }
    return nilcx::LieAlgebra(n, table);
}

/// Random almost complex structure P J0 P^{-1}.
inline nilcx::Acs random_acs(Rng& rng, std::size_t n) {
    const nilcx::Matrix p = random_invertible(rng, n);
    return nilcx::Acs::validate(p * nilcx::Acs::standard(n).matrix() * p.inverse());
}

// ---------------------------------------------------------------------------
// corpus

inline std::filesystem::path corpus_dir() { return NILCX_CORPUS_DIR; }

inline nilcx::NlaDocument corpus_doc(const std::string& file) {
    return nilcx::read_nla_file((corpus_dir() / file).string());
}

struct Pair {
    std::string label;
    nilcx::LieAlgebra g;
    nilcx::Acs j;
};

/// Every (algebra, structure) pair of the corpus.
inline std::vector<Pair> corpus_pairs() {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(corpus_dir()))
        if (e.path().extension() == ".nla") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<Pair> out;
    for (const auto& f : files) {
        const nilcx::NlaDocument doc = nilcx::read_nla_file(f.string());
        for (const auto& s : doc.structures)
            out.push_back({f.filename().string() + ":" + s.name, nilcx::to_algebra(doc), nilcx::structure(doc, s.name)});
    }
    return out;
}

/// A corpus pair moved to a random basis; still integrable.
inline Pair random_integrable(Rng& rng, const std::vector<Pair>& pool) {
    const Pair& base = pool[rng.index(pool.size())];
    const nilcx::Matrix p = random_invertible(rng, base.g.dim());
    return {base.label, nilcx::change_basis(base.g, p), nilcx::transport(base.j, p)};
}

inline nilcx::Subspace to_subspace(const QMat& basis, std::size_t n) {
    std::vector<nilcx::Vector> gens;
    for (const auto& v : basis) {
        nilcx::Vector w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = nilcx::Scalar(v[i]);
        gens.push_back(w);
    }
    return nilcx::Subspace::span(n, gens);
}

}  // namespace testing
