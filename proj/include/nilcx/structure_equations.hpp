#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nilcx/complex_structure.hpp"

namespace nilcx {

// Sign convention throughout: de(X, Y) = -e([X, Y]), so
//     de^i = - sum_{j<k} c_jk^i e^{jk}.

/// Real Chevalley-Eilenberg equations. d[i] maps (j, k), j < k (0-based), to the
/// coefficient of e^{jk} in de^i; absent pairs are zero.
struct RealEquations {
    std::size_t dim = 0;
    std::vector<std::map<std::pair<std::size_t, std::size_t>, Scalar>> d;

    friend bool operator==(const RealEquations&, const RealEquations&) = default;
};

RealEquations real_equations(const LieAlgebra& g);

/// Inverse transcription: c_jk^i = -coeff(de^i, e^{jk}).
LieAlgebra algebra_from_equations(const RealEquations& eqs);

struct DSquareTerm {
    std::size_t i;                      // d(de^i)
    std::array<std::size_t, 3> triple;  // e^{jkl}, j < k < l
    Scalar coefficient;
};

/// Nonzero components of d(de^i), computed by the Leibniz rule on the 2-forms.
std::vector<DSquareTerm> d_square_defect(const RealEquations& eqs);

/// Complex 2-form on the bases w^{bc} (b<c), w^{b cbar} (all b, c), w^{bbar cbar} (b<c).
/// Indices are 0-based; entries of the (2,0) and (0,2) blocks with b >= c stay zero.
class ComplexTwoForm {
public:
    ComplexTwoForm() = default;
    explicit ComplexTwoForm(std::size_t n_half);

    std::size_t n_half() const noexcept { return n_; }

    const CScalar& p20(std::size_t b, std::size_t c) const { return holo_[b * n_ + c]; }
    const CScalar& p11(std::size_t b, std::size_t c) const { return mixed_[b * n_ + c]; }
    const CScalar& p02(std::size_t b, std::size_t c) const { return antiholo_[b * n_ + c]; }

    /// Accumulate onto w^{bc}; b > c is folded to -w^{cb}, b == c is ignored (w^{bb} = 0).
    void add20(std::size_t b, std::size_t c, const CScalar& v);
    void add11(std::size_t b, std::size_t c, const CScalar& v);
    void add02(std::size_t b, std::size_t c, const CScalar& v);

    bool is_zero() const;
    bool has_02_part() const;
    /// Coefficients of the conjugate form.
    ComplexTwoForm conj() const;

    ComplexTwoForm only20() const;
    ComplexTwoForm only11() const;
    ComplexTwoForm only02() const;
    ComplexTwoForm operator+(const ComplexTwoForm& rhs) const;

    friend bool operator==(const ComplexTwoForm&, const ComplexTwoForm&) = default;

private:
    std::size_t n_ = 0;
    std::vector<CScalar> holo_;
    std::vector<CScalar> mixed_;
    std::vector<CScalar> antiholo_;
};

/// d w^a for a = 1..n (stored 0-based), w^a a basis of (1,0)-forms.
struct ComplexEquations {
    std::size_t n_half = 0;
    std::vector<ComplexTwoForm> d;

    explicit ComplexEquations(std::size_t n = 0) : n_half(n), d(n, ComplexTwoForm(n)) {}

    bool has_02_part() const;
    friend bool operator==(const ComplexEquations&, const ComplexEquations&) = default;
};

/// Pairs (x, y), 0-based, with J e_x = e_y; defines w^a = e^{x_a} - i e^{y_a}.
using Pairing = std::vector<std::pair<std::size_t, std::size_t>>;

/// ((4,8),(3,7),(2,6),(1,5)) in 1-based terms.
Pairing pairing_dim8_reference();
/// Consecutive pairs ((1,2),(3,4),...) in 1-based terms.
Pairing pairing_consecutive(std::size_t dim);
/// Reference ordering in dimension 8, consecutive otherwise.
Pairing default_pairing(std::size_t dim);
/// Pairing read off a structure that permutes coordinate axes up to sign;
/// nullopt when J is not of that form.
std::optional<Pairing> infer_pairing(const Acs& j);
/// Throws Error(BadPairing) unless the pairs partition 0..dim-1.
void validate_pairing(const Pairing& pairing, std::size_t dim);

/// Rewrites real equations in the (1,0)-coframe of `pairing`; no integrability check.
ComplexEquations complexify(const RealEquations& eqs, const Pairing& pairing);

/// Throws Error(BadPairing) when J e_x != e_y for a pair, Error(NotIntegrable)
/// when the Nijenhuis tensor is nonzero.
ComplexEquations complex_equations(const LieAlgebra& g, const Acs& j, const Pairing& pairing);

struct BidegreeParts {
    ComplexTwoForm p20;
    ComplexTwoForm p11;
    ComplexTwoForm p02;
};

BidegreeParts bidegree_split(const ComplexEquations& eqs, std::size_t a);

struct Realification {
    LieAlgebra algebra;
    Acs structure;
    Pairing pairing;
};

/// Real algebra and structure whose complex equations in `pairing` (default_pairing
/// when absent) are `eqs`. Throws Error(ConjugationInconsistent) on a malformed table.
Realification realify(const ComplexEquations& eqs, std::optional<Pairing> pairing = std::nullopt);

}  // namespace nilcx
