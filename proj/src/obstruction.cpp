#include "nilcx/obstruction.hpp"

#include <algorithm>
#include <sstream>

#include "nilcx/error.hpp"

namespace nilcx {

namespace {

constexpr const char* kSlowGrowthCite =
    "slow-growth obstruction: a 2n-dimensional NLA with dim g_{n-1} = n-1 admits no complex structure";
constexpr const char* kFiliformCite =
    "filiform obstruction: a 2n-dimensional NLA of step 2n-1 admits no complex structure (Goze-Remm)";
constexpr const char* kQuasiFiliformCite =
    "quasi-filiform obstruction: an 8-dimensional NLA of step 6 admits no complex structure "
    "(Garcia Vergnolle-Remm; external result, not verified here)";
constexpr const char* kDim6TypesCite =
    "6-dimensional SnN structures only occur on ascending types (1,3,6) and (1,3,4,6)";
constexpr const char* kDim8TypesCite =
    "8-dimensional SnN structures only occur on ascending types (1,3,8), (1,3,5,8), (1,3,6,8), "
    "(1,3,5,6,8), (1,4,8), (1,4,6,8), (1,5,8), (1,5,6,8)";
constexpr const char* kLowDimCite = "in dimension <= 4 every complex structure on an NLA is nilpotent";
constexpr const char* kCenterOneCite =
    "a 1-dimensional center contains no nonzero J-invariant subspace, so a_1(J) = 0 and every "
    "complex structure is SnN";
constexpr const char* kCenterBoundCite =
    "center bound: an SnN structure on a 2n-dimensional NLA forces dim g_1 <= n-2, and dim g_1 <= n-3 when n >= 4";
constexpr const char* kStepCite = "an NLA carrying an SnN complex structure is at least 3-step";
constexpr const char* kLemmaCite = "if g_k ∩ J g_k = {0} then g_{k+1} ∩ J g_k = {0}";
constexpr const char* kDimKCite = "if g_k ∩ J g_k = {0} then k <= dim g_k <= n-2";
constexpr const char* kDimNextCite =
    "if g_k ∩ J g_k = {0} then 1 + dim g_k <= dim g_{k+1} <= 2n-3, and 2 + dim g_k <= dim g_{k+1} "
    "when g_{k+1} ∩ J g_{k+1} != {0}";
constexpr const char* kStepBoundCite =
    "if g_k ∩ J g_k = {0} then s >= k+2, and s = k+2 forces g_{k+1} ∩ J g_{k+1} != {0}";
constexpr const char* kDim8CenterCite = "8-dimensional NLAs with SnN structures have 1-dimensional centers";
constexpr const char* kDim8G2Cite = "8-dimensional SnN: g_2 ∩ J g_2 != {0} and 3 <= dim g_2 <= 5";
constexpr const char* kDim8StepCite = "8-dimensional SnN: nilpotency step between 3 and 5";
constexpr const char* kLargeCenterCite =
    "n >= 4 and dim g_1 >= n-2 (e.g. a product of n-2 factors) force J to be quasi-nilpotent";
constexpr const char* kJSeriesCite =
    "every a_k(J) is an even-dimensional J-invariant ideal contained in g_k";
constexpr const char* kA1Cite = "a_1(J) is the largest J-invariant subspace of the center";
constexpr const char* kCoexistCite =
    "on an 8-dimensional NLA, quasi-nilpotent and SnN complex structures never coexist";

bool type_listed(const std::vector<AscendingType>& list, const AscendingType& type) {
    return std::find(list.begin(), list.end(), type) != list.end();
}

}  // namespace

std::string format_type(const AscendingType& type) {
    std::ostringstream out;
    out << "(";
    for (std::size_t k = 0; k < type.size(); ++k) out << (k ? "," : "") << type[k];
    out << ")";
    return out.str();
}

std::optional<std::vector<AscendingType>> snn_admissible_types(std::size_t dim) {
    switch (dim) {
        case 2:
        case 4: return std::vector<AscendingType>{};
        case 6: return std::vector<AscendingType>{{1, 3, 6}, {1, 3, 4, 6}};
        case 8:
            return std::vector<AscendingType>{{1, 3, 8},    {1, 3, 5, 8}, {1, 3, 6, 8}, {1, 3, 5, 6, 8},
                                              {1, 4, 8},    {1, 4, 6, 8}, {1, 5, 8},    {1, 5, 6, 8}};
        default: return std::nullopt;
    }
}

std::vector<ObstructionVerdict> obstruction_report(const LieAlgebra& g) {
    const SeriesReport series = ascending_central_series(g);
    if (!series.is_nilpotent) throw Error(ErrorKind::NotNilpotent, "obstruction report needs a nilpotent algebra");
    const std::size_t dim = g.dim();
    std::vector<ObstructionVerdict> out;

    ObstructionVerdict odd{"odd-dimension", dim % 2 == 1, dim % 2 == 1,
                           "an almost complex structure needs even dimension", "", {{"dim", std::to_string(dim)}}};
    odd.detail = odd.triggered ? "dimension is odd" : "dimension is even";
    out.push_back(odd);
    if (odd.triggered) return out;

    const std::size_t n = dim / 2;
    const std::size_t s = *series.step;
    const AscendingType& type = *series.ascending_type;
    const std::size_t center_dim = series.term(1).dim();
    const std::string type_text = format_type(type);

    {
        ObstructionVerdict v{"slow-growth", false, false, kSlowGrowthCite, "", {}};
        if (n >= 2) {
            const std::size_t d = series.term(n - 1).dim();
            v.triggered = v.excludes_snn = d == n - 1;
            v.witness = {{"n", std::to_string(n)}, {"dim g_{n-1}", std::to_string(d)}};
            v.detail = "dim g_" + std::to_string(n - 1) + " = " + std::to_string(d) +
                       (v.triggered ? " = n-1" : " != n-1");
        } else {
            v.detail = "needs n >= 2";
        }
        out.push_back(v);
    }
    {
        ObstructionVerdict v{"filiform", false, false, kFiliformCite, "", {{"step", std::to_string(s)}}};
        v.triggered = v.excludes_snn = n >= 2 && s == 2 * n - 1;
        v.detail = v.triggered ? "step s = 2n-1: filiform" : "not filiform";
        out.push_back(v);
    }
    {
        ObstructionVerdict v{"quasi-filiform-8", false, false, kQuasiFiliformCite, "", {{"step", std::to_string(s)}}};
        v.triggered = v.excludes_snn = dim == 8 && s == 6;
        v.detail = dim != 8 ? "applies to dimension 8 only" : (v.triggered ? "step 6: quasi-filiform" : "step != 6");
        out.push_back(v);
    }

    const auto admissible = snn_admissible_types(dim);
    {
        ObstructionVerdict v{"snn-type-list", false, false, "", "", {{"type", type_text}}};
        if (dim <= 4) {
            v.citation = kLowDimCite;
        } else if (dim == 6) {
            v.citation = kDim6TypesCite;
        } else {
            v.citation = kDim8TypesCite;
        }
        if (admissible) {
            v.excludes_snn = !type_listed(*admissible, type);
            v.detail = "type " + type_text + (v.excludes_snn ? " is not" : " is") + " SnN-admissible";
        } else {
            v.citation = "SnN ascending types are unknown in dimension " + std::to_string(dim);
            v.detail = "unknown in this dimension";
        }
        out.push_back(v);
    }
    {
        ObstructionVerdict v{"center-bound", false, false, kCenterBoundCite, "", {{"dim g_1", std::to_string(center_dim)}}};
        const std::size_t bound = n >= 4 ? n - 3 : (n >= 2 ? n - 2 : 0);
        v.excludes_snn = center_dim > bound;
        v.detail = "dim g_1 = " + std::to_string(center_dim) + ", SnN bound " + std::to_string(bound);
        out.push_back(v);
    }
    {
        ObstructionVerdict v{"snn-step", false, s < 3, kStepCite, "", {{"step", std::to_string(s)}}};
        v.detail = "step " + std::to_string(s);
        out.push_back(v);
    }
    {
        // Composition: a 1-dimensional center forces SnN, so any SnN exclusion excludes everything.
        ObstructionVerdict v{"center-one-forces-snn", false, false,
                             std::string(kCenterOneCite) + "; combined with the SnN restrictions above", "",
                             {{"dim g_1", std::to_string(center_dim)}, {"type", type_text}}};
        bool snn_excluded = false;
        for (const auto& prior : out) snn_excluded = snn_excluded || prior.excludes_snn;
        v.triggered = v.excludes_snn = center_dim == 1 && snn_excluded;
        v.detail = center_dim != 1 ? "center is not 1-dimensional"
                                   : (v.triggered ? "every structure would be SnN, and SnN is excluded"
                                                  : "every structure would be SnN; SnN not excluded");
        out.push_back(v);
    }
    return out;
}

bool excludes_complex_structures(std::span<const ObstructionVerdict> verdicts) {
    return std::any_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.triggered; });
}

const char* to_string(AuditOutcome outcome) {
    switch (outcome) {
        case AuditOutcome::Pass: return "PASS";
        case AuditOutcome::Fail: return "FAIL";
        case AuditOutcome::Skipped: return "SKIP";
    }
    return "?";
}

std::vector<AuditCheck> theorem_audit(const LieAlgebra& g, const Acs& j) {
    const SeriesReport series = ascending_central_series(g);
    if (!series.is_nilpotent) throw Error(ErrorKind::NotNilpotent, "theorem audit needs a nilpotent algebra");
    const JClassification cls = j_compatible_series(g, j);
    const std::size_t dim = g.dim();
    const std::size_t n = dim / 2;
    const std::size_t s = *series.step;
    const bool snn = cls.kind == JKind::StronglyNonNilpotent;
    const AscendingType& type = *series.ascending_type;
    const std::string type_text = format_type(type);
    const std::size_t center_dim = series.term(1).dim();

    std::vector<AuditCheck> out;
    const auto record = [&](std::string rule, bool applicable, bool holds, const char* cite, std::string detail) {
        out.push_back({std::move(rule),
                       !applicable ? AuditOutcome::Skipped : (holds ? AuditOutcome::Pass : AuditOutcome::Fail), cite,
                       std::move(detail)});
    };

    {
        bool ok = true;
        std::string detail = "k = 1.." + std::to_string(cls.stabilization_index);
        for (std::size_t k = 1; k <= cls.stabilization_index; ++k) {
            const Subspace& a = cls.j_series[k];
            const bool this_ok = a.dim() % 2 == 0 && apply_map(j.matrix(), a) == a && is_ideal(g, a) &&
                                 series.term(k).contains(a);
            if (!this_ok) {
                ok = false;
                detail = "a_" + std::to_string(k) + "(J) violates the structure";
            }
        }
        record("j-series-structure", true, ok, kJSeriesCite, detail);
    }
    {
        const Subspace z = series.term(1);
        record("a1-center", true, cls.term(1) == largest_j_invariant(j, z), kA1Cite,
               "dim a_1(J) = " + std::to_string(cls.term(1).dim()));
    }
    record("snn-step", snn, s >= 3, kStepCite, "kind " + std::string(to_string(cls.kind)) + ", step " + std::to_string(s));

    for (std::size_t k = 1; k < s; ++k) {
        const Subspace& gk = series.term(k);
        const Subspace& gk1 = series.term(k + 1);
        const Subspace jgk = apply_map(j.matrix(), gk);
        if (!intersect(gk, jgk).is_zero()) continue;
        const std::string tag = "[k=" + std::to_string(k) + "]";
        const bool next_meets = !intersect(gk1, apply_map(j.matrix(), gk1)).is_zero();
        record("lemma-next-term" + tag, true, intersect(gk1, jgk).is_zero(), kLemmaCite,
               "dim g_k ∩ J g_k = 0; dim g_{k+1} ∩ J g_k = " + std::to_string(intersect(gk1, jgk).dim()));
        record("dim-bound-k" + tag, true, k <= gk.dim() && gk.dim() + 2 <= n, kDimKCite,
               "dim g_k = " + std::to_string(gk.dim()) + ", n = " + std::to_string(n));
        const bool lower = gk1.dim() >= gk.dim() + (next_meets ? 2 : 1);
        record("dim-bound-next" + tag, true, lower && gk1.dim() + 3 <= 2 * n, kDimNextCite,
               "dim g_k = " + std::to_string(gk.dim()) + ", dim g_{k+1} = " + std::to_string(gk1.dim()));
        record("step-bound" + tag, true, s >= k + 2 && (s != k + 2 || next_meets), kStepBoundCite,
               "step " + std::to_string(s));
    }

    record("center-bound", snn && n >= 4, center_dim >= 1 && center_dim + 3 <= n, kCenterBoundCite,
           "dim g_1 = " + std::to_string(center_dim) + ", n = " + std::to_string(n));
    record("large-center-quasi-nilpotent", n >= 4 && center_dim + 2 >= n, !snn, kLargeCenterCite,
           "dim g_1 = " + std::to_string(center_dim) + ", kind " + to_string(cls.kind));
    record("low-dimension-no-snn", dim <= 4, !snn, kLowDimCite, "kind " + std::string(to_string(cls.kind)));

    const auto admissible = snn_admissible_types(dim);
    record("dim6-type", dim == 6 && snn, admissible && type_listed(*admissible, type), kDim6TypesCite, "type " + type_text);

    const bool dim8_snn = dim == 8 && snn;
    record("dim8-center", dim8_snn, center_dim == 1, kDim8CenterCite, "dim g_1 = " + std::to_string(center_dim));
    {
        const Subspace& g2 = series.term(2);
        const bool meets = !intersect(g2, apply_map(j.matrix(), g2)).is_zero();
        record("dim8-g2", dim8_snn, meets && g2.dim() >= 3 && g2.dim() <= 5, kDim8G2Cite,
               "dim g_2 = " + std::to_string(g2.dim()) + (meets ? ", g_2 ∩ J g_2 != 0" : ", g_2 ∩ J g_2 = 0"));
    }
    record("dim8-step", dim8_snn, s >= 3 && s <= 5, kDim8StepCite, "step " + std::to_string(s));
    record("dim8-type", dim8_snn, admissible && type_listed(*admissible, type), kDim8TypesCite, "type " + type_text);
    record("quasi-filiform-8", dim == 8, s != 6, kQuasiFiliformCite, "step " + std::to_string(s));
    {
        const auto verdicts = obstruction_report(g);
        std::string fired;
        for (const auto& v : verdicts) {
            if (v.triggered) fired += (fired.empty() ? "" : ", ") + v.rule;
            if (snn && v.excludes_snn) fired += (fired.empty() ? "" : ", ") + v.rule + " (SnN)";
        }
        record("obstruction-consistency", true, fired.empty(),
               "no existence obstruction may fire on an algebra that carries the given structure",
               fired.empty() ? "no obstruction fires" : "fired: " + fired);
    }
    return out;
}

AuditCheck coexistence_audit(const LieAlgebra& g, std::span<const Acs> structures) {
    AuditCheck check{"dim8-coexistence", AuditOutcome::Skipped, kCoexistCite, ""};
    if (g.dim() != 8 || structures.size() < 2) {
        check.detail = "needs dimension 8 and at least two structures";
        return check;
    }
    std::size_t snn = 0;
    std::size_t quasi = 0;
    for (const auto& j : structures) {
        (j_compatible_series(g, j).kind == JKind::StronglyNonNilpotent ? snn : quasi)++;
    }
    check.outcome = (snn == 0 || quasi == 0) ? AuditOutcome::Pass : AuditOutcome::Fail;
    check.detail = std::to_string(snn) + " SnN, " + std::to_string(quasi) + " quasi-nilpotent";
    return check;
}

std::size_t count_failures(std::span<const AuditCheck> checks) {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.outcome == AuditOutcome::Fail; }));
}

}  // namespace nilcx
