#include "nilcx/families.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "nilcx/error.hpp"

namespace nilcx {

namespace {

const std::vector<std::string> kSymbols3 = {"A", "B", "C", "D", "E", "F", "G", "H", "K", "L", "M", "N", "P", "s"};
const std::vector<std::string> kSymbols4 = {"A", "D", "E", "F", "L", "M", "N", "s"};
const std::vector<std::string> kSymbols5 = {"A", "B", "E", "F", "L", "M", "N", "P", "s", "t"};

// Complex indices are 0-based: w^1 -> 0, ..., w^4 -> 3.
void add_dw4_common(const FamilyParams& p, ComplexTwoForm& f) {
    const CScalar i = CScalar::i();
    f.add11(0, 0, p.get("L"));
    f.add11(0, 1, p.get("M"));
    f.add11(0, 2, p.get("N"));
    f.add11(1, 0, -p.get("M").conj());
    f.add11(1, 1, i * p.get("s"));
    f.add11(2, 0, -p.get("N").conj());
}

// -X (w^{ab} - w^{a bbar})
void add_balanced(ComplexTwoForm& f, std::size_t a, std::size_t b, const CScalar& x) {
    f.add20(a, b, -x);
    f.add11(a, b, x);
}

struct Relation {
    const char* symbol;
    // 1-based [e_p, e_q] coefficient on e_r for the real and imaginary part;
    // imaginary part enters with sign im_sign.
    std::array<int, 3> re;
    std::array<int, 3> im;
    int im_sign;
};

const std::vector<Relation> kRelations = {
    {"A", {4, 8, 7}, {4, 8, 3}, 1},  {"B", {4, 5, 7}, {4, 5, 3}, 1},  {"C", {3, 8, 6}, {3, 8, 2}, 1},
    {"D", {4, 7, 6}, {4, 7, 2}, 1},  {"E", {4, 5, 6}, {4, 5, 2}, 1},  {"F", {4, 8, 6}, {4, 8, 2}, 1},
    {"G", {3, 4, 2}, {3, 4, 6}, -1}, {"H", {3, 5, 6}, {3, 5, 2}, 1},  {"K", {3, 7, 6}, {3, 7, 2}, 1},
    {"L", {4, 8, 5}, {4, 8, 1}, 1},  {"M", {3, 4, 1}, {3, 8, 1}, 1},  {"N", {2, 4, 1}, {2, 8, 1}, 1},
    {"P", {2, 3, 1}, {2, 7, 1}, 1},  {"s", {3, 7, 1}, {0, 0, 0}, 0}, {"t", {2, 6, 1}, {0, 0, 0}, 0},
};

bool contains(const std::vector<std::string>& v, std::string_view s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

const char* to_string(Family family) {
    switch (family) {
        case Family::G2Dim3: return "G2dim3";
        case Family::G2Dim4: return "G2dim4";
        case Family::G2Dim5: return "G2dim5";
    }
    return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : all_families()) {
        if (name == to_string(f)) return f;
    }
    return std::nullopt;
}

std::vector<Family> all_families() { return {Family::G2Dim3, Family::G2Dim4, Family::G2Dim5}; }

const std::vector<std::string>& family_symbols(Family family) {
    switch (family) {
        case Family::G2Dim3: return kSymbols3;
        case Family::G2Dim4: return kSymbols4;
        case Family::G2Dim5: return kSymbols5;
    }
    return kSymbols3;
}

bool is_real_symbol(std::string_view symbol) { return symbol == "s" || symbol == "t"; }

FamilyParams& FamilyParams::set(const std::string& symbol, const CScalar& value) {
    if (!contains(family_symbols(family_), symbol)) {
        throw Error(ErrorKind::ForeignParameter,
                    "parameter '" + symbol + "' does not occur in " + std::string(nilcx::to_string(family_)));
    }
    if (is_real_symbol(symbol) && !value.is_real()) {
        throw Error(ErrorKind::InvalidArgument, "parameter " + symbol + " must be real");
    }
    if (value.is_zero()) values_.erase(symbol);
    else values_[symbol] = value;
    return *this;
}

CScalar FamilyParams::get(const std::string& symbol) const {
    auto it = values_.find(symbol);
    return it == values_.end() ? CScalar() : it->second;
}

std::string FamilyParams::to_string() const {
    std::string out;
    for (const auto& sym : family_symbols(family_)) {
        auto it = values_.find(sym);
        if (it == values_.end()) continue;
        if (!out.empty()) out += ", ";
        out += sym + "=" + it->second.to_string();
    }
    return out.empty() ? "0" : out;
}

ComplexEquations family_instantiate(const FamilyParams& p) {
    ComplexEquations eqs(4);
    const CScalar i = CScalar::i();
    auto& dw2 = eqs.d[1];
    auto& dw3 = eqs.d[2];
    auto& dw4 = eqs.d[3];
    switch (p.family()) {
        case Family::G2Dim3: {
            const CScalar c = p.get("C"), d = p.get("D"), g = p.get("G");
            dw2.add11(0, 0, p.get("A"));
            add_balanced(dw2, 0, 3, p.get("B"));
            dw3.add20(0, 1, c - d);
            add_balanced(dw3, 0, 3, p.get("E"));
            dw3.add11(0, 0, p.get("F"));
            dw3.add11(0, 1, g + d);
            add_balanced(dw3, 1, 3, p.get("H"));
            dw3.add11(1, 0, c - g);
            dw3.add11(1, 1, p.get("K"));
            add_dw4_common(p, dw4);
            dw4.add11(1, 2, p.get("P"));
            dw4.add11(2, 1, -p.get("P").conj());
            break;
        }
        case Family::G2Dim4:
            dw2.add11(0, 0, p.get("A"));
            add_balanced(dw3, 0, 1, p.get("D"));
            add_balanced(dw3, 0, 3, p.get("E"));
            dw3.add11(0, 0, p.get("F"));
            add_dw4_common(p, dw4);
            break;
        case Family::G2Dim5:
            dw2.add11(0, 0, p.get("A"));
            add_balanced(dw2, 0, 3, p.get("B"));
            dw3.add11(0, 0, p.get("F"));
            add_balanced(dw3, 0, 3, p.get("E"));
            add_dw4_common(p, dw4);
            dw4.add11(1, 2, p.get("P"));
            dw4.add11(2, 1, -p.get("P").conj());
            dw4.add11(2, 2, i * p.get("t"));
            break;
    }
    return eqs;
}

bool FamilyCase::conditions_hold(const FamilyParams& p) const {
    if (p.family() != family) return false;
    for (const auto& sym : zero) {
        if (!p.get(sym).is_zero()) return false;
    }
    const bool re_a = !p.get("A").re().is_zero();
    const bool re_l = !p.get("L").re().is_zero();
    switch (real_part) {
        case RealPartCondition::None: return true;
        case RealPartCondition::ReLZero: return !re_l;
        case RealPartCondition::ReLNonzero: return re_l;
        case RealPartCondition::ReAReLZero: return !re_a && !re_l;
        case RealPartCondition::ReAReLNotBothZero: return re_a || re_l;
    }
    return false;
}

std::string FamilyCase::name() const { return std::string(to_string(family)) + "(" + label + ")"; }

const std::vector<FamilyCase>& family_cases() {
    using R = RealPartCondition;
    static const std::vector<FamilyCase> cases = {
        {Family::G2Dim3, "i", {1, 3, 8}, {"A", "B"}, R::ReLZero},
        {Family::G2Dim3, "ii", {1, 3, 6, 8}, {"B", "H", "K", "P"}, R::None},
        {Family::G2Dim3, "iii", {1, 3, 5, 8}, {"K", "P"}, R::ReLZero},
        {Family::G2Dim3, "iv", {1, 3, 5, 6, 8}, {"H", "K", "P", "s"}, R::ReLNonzero},
        {Family::G2Dim4, "i", {1, 4, 8}, {}, R::ReAReLZero},
        {Family::G2Dim4, "ii", {1, 4, 6, 8}, {}, R::ReAReLNotBothZero},
        {Family::G2Dim5, "i", {1, 5, 8}, {}, R::ReLZero},
        {Family::G2Dim5, "ii", {1, 5, 6, 8}, {}, R::ReLNonzero},
    };
    return cases;
}

std::vector<FamilyCase> family_cases(Family family) {
    std::vector<FamilyCase> out;
    for (const auto& c : family_cases()) {
        if (c.family == family) out.push_back(c);
    }
    return out;
}

CaseReport family_case_check(const FamilyParams& p, const ComplexEquations& eqs) {
    if (eqs.n_half != 4) throw Error(ErrorKind::DimensionMismatch, "family equations need four (1,0)-forms");
    Realification real = realify(eqs, pairing_dim8_reference());
    if (!is_lie_algebra(real.algebra)) {
        throw Error(ErrorKind::JacobiViolated, "parameters " + p.to_string() + " violate the Jacobi identity");
    }
    CaseReport report;
    report.family = p.family();
    const SeriesReport series = ascending_central_series(real.algebra);
    report.nilpotent = series.is_nilpotent;
    report.center_dim = series.term(1).dim();
    for (const auto& c : family_cases(p.family())) {
        if (c.conditions_hold(p)) report.predicted.push_back(c.label);
    }
    if (!report.nilpotent) {
        report.problems.push_back("realification is not nilpotent");
        return report;
    }
    report.type = *series.ascending_type;
    report.kind = j_compatible_series(real.algebra, real.structure).kind;
    for (const auto& c : family_cases(p.family())) {
        if (c.type == report.type && c.conditions_hold(p)) report.matched = c.label;
    }
    const auto admissible = snn_admissible_types(8);
    report.type_admissible = std::find(admissible->begin(), admissible->end(), report.type) != admissible->end();

    if (*report.kind != JKind::StronglyNonNilpotent) {
        report.problems.push_back(std::string("structure is ") + to_string(*report.kind));
    }
    if (report.center_dim != 1) {
        report.problems.push_back("center has dimension " + std::to_string(report.center_dim));
    }
    if (!report.type_admissible) report.problems.push_back("type " + format_type(report.type) + " is not SnN-admissible");
    if (!report.matched) {
        report.problems.push_back("type " + format_type(report.type) + " is not predicted by the parameter conditions");
    }
    return report;
}

CaseReport family_case_check(const FamilyParams& p) { return family_case_check(p, family_instantiate(p)); }

std::vector<std::string> coefficient_relation_mismatches(const FamilyParams& p, const LieAlgebra& realified) {
    if (realified.dim() != 8) throw Error(ErrorKind::DimensionMismatch, "relations are stated in dimension 8");
    const auto constant = [&](const std::array<int, 3>& pqr) {
        return realified.constant(pqr[0] - 1, pqr[1] - 1, pqr[2] - 1);
    };
    std::vector<std::string> out;
    for (const auto& rel : kRelations) {
        if (!contains(family_symbols(p.family()), rel.symbol)) continue;
        const Scalar re = constant(rel.re) / Scalar(2);
        const Scalar im = rel.im_sign == 0 ? Scalar(0) : Scalar(rel.im_sign) * constant(rel.im) / Scalar(2);
        const CScalar expected = p.get(rel.symbol);
        const CScalar got(re, im);
        if (got != expected) {
            out.push_back(std::string(rel.symbol) + ": parameter " + expected.to_string() + ", constants give " +
                          got.to_string());
        }
    }
    return out;
}

}  // namespace nilcx
