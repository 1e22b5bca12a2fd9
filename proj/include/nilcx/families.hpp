#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilcx/obstruction.hpp"
#include "nilcx/structure_equations.hpp"

namespace nilcx {

/// The three parametrized families of strongly non-nilpotent complex structures on
/// 8-dimensional algebras with one-dimensional center, indexed by dim g_2.
enum class Family { G2Dim3, G2Dim4, G2Dim5 };

/// "G2dim3", "G2dim4", "G2dim5".
const char* to_string(Family family);
std::optional<Family> family_from_name(std::string_view name);
std::vector<Family> all_families();

/// Parameter symbols of a family in display order.
const std::vector<std::string>& family_symbols(Family family);
/// s and t are real parameters.
bool is_real_symbol(std::string_view symbol);

class FamilyParams {
public:
    explicit FamilyParams(Family family) : family_(family) {}

    Family family() const noexcept { return family_; }

    /// Throws Error(ForeignParameter) for a symbol outside the family and
    /// Error(InvalidArgument) for a non-real value of s or t.
    FamilyParams& set(const std::string& symbol, const CScalar& value);
    /// Zero when unset.
    CScalar get(const std::string& symbol) const;
    /// Nonzero values only, keyed by symbol.
    const std::map<std::string, CScalar>& values() const noexcept { return values_; }

    /// "A=1+2i, s=1/2" in display order; "0" when every parameter vanishes.
    std::string to_string() const;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

private:
    Family family_;
    std::map<std::string, CScalar> values_;
};

/// Equations dw^1..dw^4 of the family with the given values; dw^1 = 0.
ComplexEquations family_instantiate(const FamilyParams& p);

/// Side condition on real parts attached to a case.
enum class RealPartCondition { None, ReLZero, ReLNonzero, ReAReLZero, ReAReLNotBothZero };

struct FamilyCase {
    Family family;
    std::string label;  // "i", "ii", ...
    AscendingType type;
    /// Symbols forced to vanish.
    std::vector<std::string> zero;
    RealPartCondition real_part = RealPartCondition::None;

    bool conditions_hold(const FamilyParams& p) const;
    /// "G2dim3(i)".
    std::string name() const;
};

/// All eight cases; K is unconstrained in the first case of G2dim3.
const std::vector<FamilyCase>& family_cases();
std::vector<FamilyCase> family_cases(Family family);

struct CaseReport {
    Family family = Family::G2Dim3;
    bool nilpotent = false;
    AscendingType type;
    std::optional<JKind> kind;
    std::size_t center_dim = 0;
    /// Labels of the cases whose parameter conditions the values satisfy.
    std::vector<std::string> predicted;
    /// Label of the predicted case whose type equals the computed one.
    std::optional<std::string> matched;
    bool type_admissible = false;
    std::vector<std::string> problems;

    bool ok() const { return problems.empty(); }
};

/// Realifies `eqs` (reference dim-8 pairing) and checks the computed type, kind and
/// center against the family's case bookkeeping. Throws Error(JacobiViolated) when the
/// realification is not a Lie algebra.
CaseReport family_case_check(const FamilyParams& p, const ComplexEquations& eqs);
CaseReport family_case_check(const FamilyParams& p);

/// Each family parameter expressed through the real structure constants of the
/// realification in the reference pairing; returns mismatches as readable lines.
std::vector<std::string> coefficient_relation_mismatches(const FamilyParams& p, const LieAlgebra& realified);

/// One pass of the search: the first `value_limit` entries of the value list
/// (1, -1, i, -i, then 1+-i, ..., then the rest) on up to `max_support` nonzero parameters.
struct SearchStage {
    std::size_t value_limit;
    std::size_t max_support;
};

struct SearchOptions {
    std::vector<SearchStage> schedule = {{4, 6}, {8, 5}, {48, 3}, {48, 4}};
    /// Give up on a case after this many candidates (0 = no limit).
    std::size_t max_candidates = 0;
};

struct SearchHit {
    FamilyCase target;
    FamilyParams params;
    CaseReport report;
    std::size_t candidates = 0;
};

/// Deterministic enumeration of small Gaussian-rational parameter tuples
/// (real and imaginary parts in {0, +-1, +-2, +-1/2}), smallest supports and
/// simplest values first, following the stage schedule. Returns the first Jacobi-valid
/// tuple realizing the case: type equal to the case's type, strongly non-nilpotent,
/// one-dimensional center.
std::optional<SearchHit> search_case(const FamilyCase& target, const SearchOptions& options = {},
                                     const std::function<void(std::size_t)>& progress = {});

}  // namespace nilcx
