#include "nilcx/structure_equations.hpp"

#include <algorithm>

#include "nilcx/error.hpp"

namespace nilcx {

namespace {

using CVector = std::vector<CScalar>;

/// Coefficients u_s v_t - u_t v_s of u ∧ v on basis pairs s < t.
template <typename Sink>
void wedge(const CVector& u, const CVector& v, const CScalar& scale, Sink&& sink) {
    const std::size_t m = u.size();
    for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t t = s + 1; t < m; ++t) {
            CScalar c = u[s] * v[t] - u[t] * v[s];
            if (!c.is_zero()) sink(s, t, scale * c);
        }
    }
}

/// Sorts (a, b, c) and returns the permutation sign; 0 when an index repeats.
int sort3(std::array<std::size_t, 3>& t) {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) return 0;
    int sign = 1;
    for (int pass = 0; pass < 2; ++pass) {
        for (int k = 0; k < 2; ++k) {
            if (t[k] > t[k + 1]) {
                std::swap(t[k], t[k + 1]);
                sign = -sign;
            }
        }
    }
    return sign;
}

}  // namespace

RealEquations real_equations(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    RealEquations eqs{n, std::vector<std::map<std::pair<std::size_t, std::size_t>, Scalar>>(n)};
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                const Scalar& c = g.constant(j, k, i);
                if (!c.is_zero()) eqs.d[i][{j, k}] = -c;
            }
        }
    }
    return eqs;
}

LieAlgebra algebra_from_equations(const RealEquations& eqs) {
    const std::size_t n = eqs.dim;
    if (eqs.d.size() != n) throw Error(ErrorKind::DimensionMismatch, "equation count");
    LieAlgebra::BracketTable table;
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [key, coeff] : eqs.d[i]) {
            if (key.first >= key.second || key.second >= n) throw Error(ErrorKind::IndexOutOfRange, "2-form index");
            if (coeff.is_zero()) continue;
            auto& v = table[key];
            if (v.empty()) v.resize(n);
            v[i] = -coeff;
        }
    }
    return LieAlgebra(n, table);
}

std::vector<DSquareTerm> d_square_defect(const RealEquations& eqs) {
    const std::size_t n = eqs.dim;
    std::vector<DSquareTerm> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::map<std::array<std::size_t, 3>, Scalar> three_form;
        const auto add = [&](std::array<std::size_t, 3> t, const Scalar& v) {
            const int sign = sort3(t);
            if (sign == 0) return;
            three_form[t] += sign > 0 ? v : -v;
        };
        // d(e^{jk}) = de^j ∧ e^k - e^j ∧ de^k
        for (const auto& [jk, c] : eqs.d[i]) {
            const auto [j, k] = jk;
            for (const auto& [pq, w] : eqs.d[j]) add({pq.first, pq.second, k}, c * w);
            for (const auto& [pq, w] : eqs.d[k]) add({j, pq.first, pq.second}, -(c * w));
        }
        for (const auto& [t, v] : three_form) {
            if (!v.is_zero()) out.push_back({i, t, v});
        }
    }
    return out;
}

ComplexTwoForm::ComplexTwoForm(std::size_t n_half)
    : n_(n_half), holo_(n_half * n_half), mixed_(n_half * n_half), antiholo_(n_half * n_half) {}

void ComplexTwoForm::add20(std::size_t b, std::size_t c, const CScalar& v) {
    if (b == c) return;
    if (b < c) holo_[b * n_ + c] += v;
    else holo_[c * n_ + b] -= v;
}

void ComplexTwoForm::add11(std::size_t b, std::size_t c, const CScalar& v) { mixed_[b * n_ + c] += v; }

void ComplexTwoForm::add02(std::size_t b, std::size_t c, const CScalar& v) {
    if (b == c) return;
    if (b < c) antiholo_[b * n_ + c] += v;
    else antiholo_[c * n_ + b] -= v;
}

bool ComplexTwoForm::is_zero() const {
    const auto zero = [](const CScalar& z) { return z.is_zero(); };
    return std::all_of(holo_.begin(), holo_.end(), zero) && std::all_of(mixed_.begin(), mixed_.end(), zero) &&
           !has_02_part();
}

bool ComplexTwoForm::has_02_part() const {
    return std::any_of(antiholo_.begin(), antiholo_.end(), [](const CScalar& z) { return !z.is_zero(); });
}

ComplexTwoForm ComplexTwoForm::conj() const {
    // conj(w^{bc}) = w^{bbar cbar}; conj(w^{b cbar}) = wbar^b ∧ w^c = -w^{c bbar}.
    ComplexTwoForm out(n_);
    for (std::size_t b = 0; b < n_; ++b) {
        for (std::size_t c = 0; c < n_; ++c) {
            out.antiholo_[b * n_ + c] = holo_[b * n_ + c].conj();
            out.holo_[b * n_ + c] = antiholo_[b * n_ + c].conj();
            out.mixed_[c * n_ + b] = -mixed_[b * n_ + c].conj();
        }
    }
    return out;
}

ComplexTwoForm ComplexTwoForm::only20() const {
    ComplexTwoForm out(n_);
    out.holo_ = holo_;
    return out;
}

ComplexTwoForm ComplexTwoForm::only11() const {
    ComplexTwoForm out(n_);
    out.mixed_ = mixed_;
    return out;
}

ComplexTwoForm ComplexTwoForm::only02() const {
    ComplexTwoForm out(n_);
    out.antiholo_ = antiholo_;
    return out;
}

ComplexTwoForm ComplexTwoForm::operator+(const ComplexTwoForm& rhs) const {
    if (rhs.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "2-form sum");
    ComplexTwoForm out = *this;
    for (std::size_t k = 0; k < holo_.size(); ++k) {
        out.holo_[k] += rhs.holo_[k];
        out.mixed_[k] += rhs.mixed_[k];
        out.antiholo_[k] += rhs.antiholo_[k];
    }
    return out;
}

bool ComplexEquations::has_02_part() const {
    return std::any_of(d.begin(), d.end(), [](const ComplexTwoForm& f) { return f.has_02_part(); });
}

Pairing pairing_dim8_reference() { return {{3, 7}, {2, 6}, {1, 5}, {0, 4}}; }

Pairing pairing_consecutive(std::size_t dim) {
    Pairing p;
    for (std::size_t a = 0; a + 1 < dim; a += 2) p.emplace_back(a, a + 1);
    return p;
}

Pairing default_pairing(std::size_t dim) { return dim == 8 ? pairing_dim8_reference() : pairing_consecutive(dim); }

std::optional<Pairing> infer_pairing(const Acs& j) {
    const std::size_t n = j.dim();
    const auto image_axis = [&](std::size_t x) -> std::optional<std::pair<std::size_t, int>> {
        const Vector col = j.matrix().column(x);
        std::optional<std::pair<std::size_t, int>> found;
        for (std::size_t r = 0; r < n; ++r) {
            if (col[r].is_zero()) continue;
            if (found || (col[r] != Scalar(1) && col[r] != Scalar(-1))) return std::nullopt;
            found = std::make_pair(r, col[r].sign());
        }
        return found;
    };
    Pairing out;
    std::vector<bool> used(n, false);
    for (std::size_t x = 0; x < n; ++x) {
        if (used[x]) continue;
        const auto img = image_axis(x);
        if (!img) return std::nullopt;
        const auto [y, sign] = *img;
        if (sign > 0) out.emplace_back(x, y);
        else out.emplace_back(y, x);  // J e_x = -e_y  =>  J e_y = e_x
        used[x] = used[y] = true;
    }
    return out;
}

void validate_pairing(const Pairing& pairing, std::size_t dim) {
    if (dim % 2 != 0 || pairing.size() * 2 != dim) throw Error(ErrorKind::BadPairing, "pairing must list dim/2 pairs");
    std::vector<bool> used(dim, false);
    for (auto [x, y] : pairing) {
        if (x >= dim || y >= dim) throw Error(ErrorKind::BadPairing, "pairing index out of range");
        if (x == y || used[x] || used[y]) throw Error(ErrorKind::BadPairing, "pairs must be disjoint");
        used[x] = used[y] = true;
    }
}

ComplexEquations complexify(const RealEquations& eqs, const Pairing& pairing) {
    validate_pairing(pairing, eqs.dim);
    const std::size_t n = pairing.size();
    const CScalar half(Scalar(1, 2));
    const CScalar half_i(Scalar(0), Scalar(1, 2));
    // e^x = (w + wbar)/2, e^y = i (w - wbar)/2 in the basis (w^1..w^n, wbar^1..wbar^n).
    std::vector<CVector> real_covector(eqs.dim, CVector(2 * n));
    for (std::size_t b = 0; b < n; ++b) {
        const auto [x, y] = pairing[b];
        real_covector[x][b] = half;
        real_covector[x][n + b] = half;
        real_covector[y][b] = half_i;
        real_covector[y][n + b] = -half_i;
    }
    ComplexEquations out(n);
    for (std::size_t a = 0; a < n; ++a) {
        const auto [x, y] = pairing[a];
        // dw^a = de^x - i de^y as a complex combination of real 2-forms.
        std::map<std::pair<std::size_t, std::size_t>, CScalar> form;
        for (const auto& [pq, c] : eqs.d[x]) form[pq] += CScalar(c);
        for (const auto& [pq, c] : eqs.d[y]) form[pq] += CScalar(Scalar(0), -c);
        ComplexTwoForm& target = out.d[a];
        for (const auto& [pq, z] : form) {
            if (z.is_zero()) continue;
            wedge(real_covector[pq.first], real_covector[pq.second], z,
                  [&](std::size_t s, std::size_t t, const CScalar& v) {
                      if (t < n) target.add20(s, t, v);
                      else if (s < n) target.add11(s, t - n, v);
                      else target.add02(s - n, t - n, v);
                  });
        }
    }
    return out;
}

ComplexEquations complex_equations(const LieAlgebra& g, const Acs& j, const Pairing& pairing) {
    if (j.dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "complex_equations");
    validate_pairing(pairing, g.dim());
    for (auto [x, y] : pairing) {
        if (j.apply(unit_vector(g.dim(), x)) != unit_vector(g.dim(), y)) {
            throw Error(ErrorKind::BadPairing, "J e_" + std::to_string(x + 1) + " != e_" + std::to_string(y + 1));
        }
    }
    if (!is_integrable(g, j)) throw Error(ErrorKind::NotIntegrable, "Nijenhuis tensor does not vanish");
    return complexify(real_equations(g), pairing);
}

BidegreeParts bidegree_split(const ComplexEquations& eqs, std::size_t a) {
    if (a >= eqs.d.size()) throw Error(ErrorKind::IndexOutOfRange, "equation index");
    const ComplexTwoForm& f = eqs.d[a];
    return {f.only20(), f.only11(), f.only02()};
}

Realification realify(const ComplexEquations& eqs, std::optional<Pairing> pairing) {
    const std::size_t n = eqs.n_half;
    if (eqs.d.size() != n) throw Error(ErrorKind::ConjugationInconsistent, "expected one equation per (1,0)-form");
    for (const auto& f : eqs.d) {
        if (f.n_half() != n) throw Error(ErrorKind::ConjugationInconsistent, "2-form size does not match n");
    }
    const std::size_t dim = 2 * n;
    Pairing pairs = pairing ? *pairing : default_pairing(dim);
    validate_pairing(pairs, dim);

    // w^b = e^x - i e^y, wbar^b = e^x + i e^y, as complex covectors on the real basis.
    std::vector<CVector> w(n, CVector(dim));
    std::vector<CVector> wbar(n, CVector(dim));
    for (std::size_t b = 0; b < n; ++b) {
        const auto [x, y] = pairs[b];
        w[b][x] = 1;
        w[b][y] = CScalar(Scalar(0), Scalar(-1));
        wbar[b][x] = 1;
        wbar[b][y] = CScalar::i();
    }
    RealEquations real{dim, std::vector<std::map<std::pair<std::size_t, std::size_t>, Scalar>>(dim)};
    for (std::size_t a = 0; a < n; ++a) {
        std::map<std::pair<std::size_t, std::size_t>, CScalar> form;
        const auto sink = [&](std::size_t s, std::size_t t, const CScalar& v) { form[{s, t}] += v; };
        const ComplexTwoForm& f = eqs.d[a];
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                if (b < c && !f.p20(b, c).is_zero()) wedge(w[b], w[c], f.p20(b, c), sink);
                if (!f.p11(b, c).is_zero()) wedge(w[b], wbar[c], f.p11(b, c), sink);
                if (b < c && !f.p02(b, c).is_zero()) wedge(wbar[b], wbar[c], f.p02(b, c), sink);
            }
        }
        // dw^a = de^x - i de^y: de^x = Re, de^y = -Im.
        const auto [x, y] = pairs[a];
        for (const auto& [pq, z] : form) {
            if (!z.re().is_zero()) real.d[x][pq] = z.re();
            if (!z.im().is_zero()) real.d[y][pq] = -z.im();
        }
    }
    return {algebra_from_equations(real), Acs::from_pairs(dim, pairs), std::move(pairs)};
}

}  // namespace nilcx
