#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "nilcx/equation_text.hpp"
#include "nilcx/error.hpp"
#include "nilcx/families.hpp"
#include "nilcx/nla.hpp"
#include "nilcx/obstruction.hpp"
#include "nilcx/structure_equations.hpp"

namespace nilcx::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

/// A finished command: exit status, machine-readable result and human text.
struct Outcome {
    int code = kComputed;
    json result = json::object();
    std::string text;
};

struct Options {
    std::string format = "text";
    std::string structure;  // --j
    std::string pairing;    // --pairing
    std::string ideal;      // --ideal
    std::vector<std::string> sets;
    std::string write_dir;
    std::string case_name;
};

bool is_verdict(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotALieAlgebra:
        case ErrorKind::NotNilpotent:
        case ErrorKind::NotAnIdeal:
        case ErrorKind::NotIntegrable:
        case ErrorKind::JacobiViolated: return true;
        default: return false;
    }
}

// ---------------------------------------------------------------------------
// rendering helpers

std::string format_vector(const Vector& v, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        const bool negative = v[k].sign() < 0;
        const Scalar magnitude = negative ? -v[k] : v[k];
        if (out.empty()) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        if (magnitude != Scalar(1)) out += magnitude.to_string() + " ";
        out += labels[k];
    }
    return out.empty() ? "0" : out;
}

std::string format_subspace(const Subspace& s, const std::vector<std::string>& labels) {
    if (s.is_zero()) return "{0}";
    std::string out = "span{";
    const auto vs = s.vectors();
    for (std::size_t k = 0; k < vs.size(); ++k) {
        if (k) out += ",";
        out += format_vector(vs[k], labels);
    }
    return out + "}";
}

json vector_json(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

json subspace_json(const Subspace& s, const std::vector<std::string>& labels) {
    json basis = json::array();
    for (const auto& v : s.vectors()) basis.push_back(vector_json(v));
    return {{"dim", s.dim()}, {"basis", basis}, {"text", format_subspace(s, labels)}};
}

json type_json(const AscendingType& t) {
    json a = json::array();
    for (auto k : t) a.push_back(k);
    return a;
}

json form_json(const ComplexTwoForm& f) {
    json terms = json::array();
    const std::size_t n = f.n_half();
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
            if (b < c && !f.p20(b, c).is_zero())
                terms.push_back({{"bidegree", "2,0"}, {"a", b + 1}, {"b", c + 1}, {"coefficient", f.p20(b, c).to_string()}});
            if (!f.p11(b, c).is_zero())
                terms.push_back({{"bidegree", "1,1"}, {"a", b + 1}, {"b", c + 1}, {"coefficient", f.p11(b, c).to_string()}});
            if (b < c && !f.p02(b, c).is_zero())
                terms.push_back({{"bidegree", "0,2"}, {"a", b + 1}, {"b", c + 1}, {"coefficient", f.p02(b, c).to_string()}});
        }
    }
    return terms;
}

json equations_json(const ComplexEquations& eqs) {
    json a = json::array();
    for (std::size_t k = 0; k < eqs.d.size(); ++k) {
        a.push_back({{"form", k + 1}, {"text", format_two_form(eqs.d[k])}, {"terms", form_json(eqs.d[k])}});
    }
    return a;
}

std::string equations_text(const ComplexEquations& eqs) {
    std::string out;
    for (std::size_t k = 0; k < eqs.d.size(); ++k) {
        out += "  dw" + std::to_string(k + 1) + " = " + format_two_form(eqs.d[k]) + "\n";
    }
    return out;
}

const char* kind_key(JKind kind) {
    switch (kind) {
        case JKind::Nilpotent: return "Nilpotent";
        case JKind::WeaklyNonNilpotent: return "WeaklyNonNilpotent";
        case JKind::StronglyNonNilpotent: return "StronglyNonNilpotent";
    }
    return "";
}

// ---------------------------------------------------------------------------
// structure selection and complex frames

std::vector<std::pair<std::string, Acs>> selected_structures(const NlaDocument& doc, const std::string& name) {
    std::vector<std::pair<std::string, Acs>> out;
    if (!name.empty()) {
        out.emplace_back(name, structure(doc, name));
        return out;
    }
    for (const auto& s : doc.structures) out.emplace_back(s.name, structure(doc, s.name));
    return out;
}

std::pair<std::string, Acs> one_structure(const NlaDocument& doc, const std::string& name) {
    if (name.empty() && doc.structures.empty()) {
        throw Error(ErrorKind::InvalidArgument, "the file defines no complex structure");
    }
    return selected_structures(doc, name.empty() ? doc.structures.front().name : name).front();
}

bool pairing_fits(const Acs& j, const Pairing& pairing) {
    if (pairing.size() * 2 != j.dim()) return false;
    for (auto [x, y] : pairing) {
        if (x >= j.dim() || y >= j.dim()) return false;
        if (j.apply(unit_vector(j.dim(), x)) != unit_vector(j.dim(), y)) return false;
    }
    return true;
}

/// The algebra and structure in the coordinates the (1,0)-forms are built from.
struct ComplexFrame {
    LieAlgebra algebra;
    Acs structure;
    Pairing pairing;
    std::optional<Matrix> basis;  // set when a change of basis was needed
};

ComplexFrame choose_frame(const LieAlgebra& g, const Acs& j, const std::string& pairing_text) {
    if (!pairing_text.empty()) {
        Pairing p = parse_pairing(pairing_text);
        validate_pairing(p, g.dim());
        if (!pairing_fits(j, p)) throw Error(ErrorKind::BadPairing, "J does not map each x to its partner");
        return {g, j, std::move(p), std::nullopt};
    }
    if (g.dim() == 8 && pairing_fits(j, pairing_dim8_reference())) return {g, j, pairing_dim8_reference(), std::nullopt};
    if (auto p = infer_pairing(j)) return {g, j, std::move(*p), std::nullopt};
    Matrix basis = adapted_basis(j);
    return {change_basis(g, basis), transport(j, basis), pairing_consecutive(g.dim()), std::move(basis)};
}

// ---------------------------------------------------------------------------
// commands on one .nla file

Outcome cmd_check(const NlaDocument& doc, const Options&) {
    const LieAlgebra g = to_algebra(doc);
    const auto labels = basis_labels(doc);
    const auto defects = jacobi_defect(g);
    const auto d2 = d_square_defect(real_equations(g));
    Outcome o;
    json list = json::array();
    for (const auto& d : defects) {
        list.push_back({{"triple", {d.i + 1, d.j + 1, d.k + 1}}, {"defect", vector_json(d.defect)}});
    }
    o.result = {{"dim", g.dim()},
                {"jacobi", defects.empty()},
                {"jacobi_defects", list},
                {"d_squared_zero", d2.empty()},
                {"d_squared_terms", d2.size()}};
    std::ostringstream t;
    if (defects.empty()) {
        t << "Jacobi identity holds (dim " << g.dim() << ")\n";
    } else {
        t << "Jacobi identity fails on " << defects.size() << " triple(s)\n";
        for (const auto& d : defects) {
            t << "  (" << labels[d.i] << "," << labels[d.j] << "," << labels[d.k] << "): "
              << format_vector(d.defect, labels) << "\n";
        }
    }
    t << "d^2 = 0: " << (d2.empty() ? "yes" : "no (" + std::to_string(d2.size()) + " nonzero components)") << "\n";
    o.text = t.str();
    o.code = defects.empty() && d2.empty() ? kComputed : kNegative;
    return o;
}

Outcome cmd_series(const NlaDocument& doc, const Options&) {
    const LieAlgebra g = to_algebra(doc);
    const auto labels = basis_labels(doc);
    const SeriesReport s = ascending_central_series(g);
    Outcome o;
    json terms = json::array();
    for (std::size_t k = 1; k < s.terms.size(); ++k) terms.push_back(subspace_json(s.terms[k], labels));
    o.result = {{"dim", g.dim()}, {"nilpotent", s.is_nilpotent}, {"center", subspace_json(s.term(1), labels)},
                {"terms", terms}};
    std::ostringstream t;
    if (s.is_nilpotent) {
        o.result["step"] = *s.step;
        o.result["type"] = type_json(*s.ascending_type);
        t << "nilpotent, step " << *s.step << ", ascending type " << format_type(*s.ascending_type) << "\n";
    } else {
        o.result["step"] = nullptr;
        o.result["type"] = nullptr;
        t << "not nilpotent: the ascending central series stops at dimension " << s.terms.back().dim() << "\n";
        o.code = kNegative;
    }
    for (std::size_t k = 1; k < s.terms.size(); ++k) {
        t << "  g_" << k << " = " << format_subspace(s.terms[k], labels) << "\n";
    }
    o.text = t.str();
    return o;
}

Outcome cmd_jseries(const NlaDocument& doc, const Options& opt) {
    const LieAlgebra g = to_algebra(doc);
    const auto labels = basis_labels(doc);
    const auto [name, j] = one_structure(doc, opt.structure);
    const JClassification c = j_compatible_series(g, j);
    Outcome o;
    json terms = json::array();
    for (std::size_t k = 1; k < c.j_series.size(); ++k) terms.push_back(subspace_json(c.j_series[k], labels));
    o.result = {{"structure", name},
                {"kind", kind_key(c.kind)},
                {"quasi_nilpotent", is_quasi_nilpotent(c.kind)},
                {"stabilization_index", c.stabilization_index},
                {"terms", terms}};
    std::ostringstream t;
    t << name << ": " << to_string(c.kind) << ", a_1 = " << format_subspace(c.term(1), labels) << "\n";
    for (std::size_t k = 1; k < c.j_series.size(); ++k) {
        t << "  a_" << k << " = " << format_subspace(c.j_series[k], labels) << " (dim " << c.j_series[k].dim() << ")\n";
    }
    t << "  stabilizes at t = " << c.stabilization_index << "\n";
    o.text = t.str();
    return o;
}

Outcome cmd_nijenhuis(const NlaDocument& doc, const Options& opt) {
    const LieAlgebra g = to_algebra(doc);
    const auto labels = basis_labels(doc);
    const auto [name, j] = one_structure(doc, opt.structure);
    const auto defects = integrability_defect(g, j);
    Outcome o;
    json list = json::array();
    std::ostringstream t;
    t << name << ": " << (defects.empty() ? "integrable" : "not integrable") << "\n";
    for (const auto& d : defects) {
        list.push_back({{"pair", {d.i + 1, d.k + 1}}, {"value", vector_json(d.defect)}});
        t << "  N(" << labels[d.i] << "," << labels[d.k] << ") = " << format_vector(d.defect, labels) << "\n";
    }
    o.result = {{"structure", name}, {"integrable", defects.empty()}, {"defects", list}};
    o.text = t.str();
    o.code = defects.empty() ? kComputed : kNegative;
    return o;
}

Outcome describe_algebra(const LieAlgebra& g, const NlaDocument& printed) {
    Outcome o;
    const std::string nla = print_nla(printed);
    o.result = {{"dim", g.dim()}, {"nla", nla}};
    std::ostringstream t;
    t << nla;
    if (is_lie_algebra(g)) {
        const SeriesReport s = ascending_central_series(g);
        o.result["type"] = s.is_nilpotent ? type_json(*s.ascending_type) : json(nullptr);
        if (s.is_nilpotent) t << "# ascending type " << format_type(*s.ascending_type) << "\n";
    } else {
        o.result["type"] = nullptr;
    }
    o.text = t.str();
    return o;
}

Outcome cmd_quotient(const NlaDocument& doc, const Options& opt) {
    if (opt.ideal.empty()) throw Error(ErrorKind::InvalidArgument, "--ideal is required");
    const LieAlgebra g = to_algebra(doc);
    std::vector<Vector> gens;
    std::stringstream ss(opt.ideal);
    std::string item;
    while (std::getline(ss, item, ';')) {
        Vector v(g.dim());
        for (const auto& t : parse_terms(item, g.dim())) v[t.index - 1] += t.coefficient;
        gens.push_back(std::move(v));
    }
    const Subspace ideal = Subspace::span(g.dim(), gens);
    const Quotient q = quotient(g, ideal);
    Outcome o = describe_algebra(q.algebra, make_document(q.algebra));
    o.result["ideal"] = subspace_json(ideal, basis_labels(doc));
    json reps = json::array();
    for (std::size_t c = 0; c < q.lift.cols(); ++c) reps.push_back(format_vector(q.lift.column(c), basis_labels(doc)));
    o.result["representatives"] = reps;
    o.text = "# quotient by " + format_subspace(ideal, basis_labels(doc)) + "\n" + o.text;
    return o;
}

Outcome cmd_obstruct(const NlaDocument& doc, const Options&) {
    const LieAlgebra g = to_algebra(doc);
    const auto verdicts = obstruction_report(g);
    Outcome o;
    json list = json::array();
    std::ostringstream t;
    for (const auto& v : verdicts) {
        json w = json::object();
        for (const auto& [k, val] : v.witness) w[k] = val;
        list.push_back({{"rule", v.rule},
                        {"triggered", v.triggered},
                        {"excludes_snn", v.excludes_snn},
                        {"citation", v.citation},
                        {"detail", v.detail},
                        {"witness", w}});
        t << (v.triggered ? "TRIGGERED " : (v.excludes_snn ? "NO-SNN    " : "-         ")) << v.rule << ": " << v.detail
          << "\n            " << v.citation << "\n";
    }
    const bool excluded = excludes_complex_structures(verdicts);
    o.result = {{"excludes_complex_structures", excluded}, {"verdicts", list}};
    t << (excluded ? "no complex structure exists\n" : "no obstruction to complex structures found\n");
    o.text = t.str();
    o.code = excluded ? kNegative : kComputed;
    return o;
}

json checks_json(const std::vector<AuditCheck>& checks) {
    json list = json::array();
    for (const auto& c : checks) {
        list.push_back({{"rule", c.rule}, {"outcome", to_string(c.outcome)}, {"citation", c.citation}, {"detail", c.detail}});
    }
    return list;
}

Outcome cmd_audit(const NlaDocument& doc, const Options& opt) {
    const LieAlgebra g = to_algebra(doc);
    const auto structures = selected_structures(doc, opt.structure);
    Outcome o;
    std::ostringstream t;
    json list = json::array();
    std::size_t failures = 0;
    bool all_integrable = true;
    std::vector<Acs> integrable;
    for (const auto& [name, j] : structures) {
        if (!is_integrable(g, j)) {
            all_integrable = false;
            list.push_back({{"structure", name}, {"integrable", false}, {"checks", json::array()}, {"failures", 0}});
            t << name << ": not integrable, nothing to audit\n";
            continue;
        }
        integrable.push_back(j);
        const auto checks = theorem_audit(g, j);
        const std::size_t f = count_failures(checks);
        failures += f;
        const JKind kind = j_compatible_series(g, j).kind;
        list.push_back({{"structure", name},
                        {"integrable", true},
                        {"kind", kind_key(kind)},
                        {"checks", checks_json(checks)},
                        {"failures", f}});
        t << name << " (" << to_string(kind) << "): " << f << " failure(s)\n";
        for (const auto& c : checks) t << "  " << to_string(c.outcome) << "  " << c.rule << "  " << c.detail << "\n";
    }
    o.result = {{"structures", list}};
    if (opt.structure.empty()) {
        const AuditCheck co = coexistence_audit(g, integrable);
        if (co.outcome == AuditOutcome::Fail) ++failures;
        o.result["coexistence"] = {{"rule", co.rule}, {"outcome", to_string(co.outcome)}, {"citation", co.citation},
                                   {"detail", co.detail}};
        t << "coexistence: " << to_string(co.outcome) << "  " << co.detail << "\n";
    }
    if (structures.empty()) t << "no complex structures in the file\n";
    o.result["failures"] = failures;
    t << "total failures: " << failures << "\n";
    o.text = t.str();
    o.code = failures == 0 && all_integrable ? kComputed : kNegative;
    return o;
}

Outcome cmd_ceq(const NlaDocument& doc, const Options& opt) {
    const LieAlgebra g = to_algebra(doc);
    const auto [name, j] = one_structure(doc, opt.structure);
    const ComplexFrame frame = choose_frame(g, j, opt.pairing);
    const ComplexEquations eqs = complex_equations(frame.algebra, frame.structure, frame.pairing);
    Outcome o;
    o.result = {{"structure", name},
                {"pairing", format_pairing(frame.pairing)},
                {"frame", frame.basis ? "adapted" : "coordinate"},
                {"equations", equations_json(eqs)},
                {"has_02_part", eqs.has_02_part()}};
    std::ostringstream t;
    t << name << ": (1,0)-forms w^a = e^x - i e^y for pairing " << format_pairing(frame.pairing) << "\n";
    if (frame.basis) {
        json cols = json::array();
        const auto labels = basis_labels(doc);
        t << "  in the J-adapted basis";
        for (std::size_t c = 0; c < frame.basis->cols(); ++c) {
            cols.push_back(vector_json(frame.basis->column(c)));
            t << (c ? ", " : " ") << "f" << c + 1 << " = " << format_vector(frame.basis->column(c), labels);
        }
        t << "\n";
        o.result["adapted_basis"] = cols;
    }
    t << equations_text(eqs);
    o.text = t.str();
    return o;
}

Outcome cmd_roundtrip_nla(const NlaDocument& doc, const Options& opt) {
    Outcome o;
    std::ostringstream t;
    const std::string printed = print_nla(doc);
    const NlaDocument again = parse_nla(printed);
    const bool text_ok = again == doc && print_nla(again) == printed;
    t << "print/parse: " << (text_ok ? "identical" : "MISMATCH") << "\n";
    bool ok = text_ok;
    json list = json::array();
    const LieAlgebra g = to_algebra(doc);
    for (const auto& [name, j] : selected_structures(doc, opt.structure)) {
        if (!is_lie_algebra(g) || !is_integrable(g, j)) {
            list.push_back({{"structure", name}, {"checked", false}});
            t << name << ": skipped (not an integrable structure on a Lie algebra)\n";
            continue;
        }
        const ComplexFrame frame = choose_frame(g, j, opt.pairing);
        const ComplexEquations eqs = complex_equations(frame.algebra, frame.structure, frame.pairing);
        const Realification r = realify(eqs, frame.pairing);
        const bool back = r.algebra == frame.algebra && r.structure == frame.structure;
        const bool forth = complex_equations(r.algebra, r.structure, r.pairing) == eqs;
        ok = ok && back && forth;
        list.push_back({{"structure", name}, {"checked", true}, {"realify_recovers_constants", back},
                        {"complex_equations_recovered", forth}});
        t << name << ": realify(complex_equations) " << (back ? "recovers" : "DOES NOT recover")
          << " the constants; complex_equations(realify) " << (forth ? "recovers" : "DOES NOT recover")
          << " the equations\n";
    }
    o.result = {{"print_parse_identity", text_ok}, {"structures", list}, {"ok", ok}};
    o.text = t.str();
    o.code = ok ? kComputed : kNegative;
    return o;
}

// ---------------------------------------------------------------------------
// commands on equation files

Outcome cmd_roundtrip_ceq(const EquationDocument& doc, const Options& opt) {
    Outcome o;
    std::ostringstream t;
    const std::string printed = print_equations(doc);
    const EquationDocument again = parse_equations(printed);
    const bool text_ok = again == doc && print_equations(again) == printed;
    Pairing pairing = !opt.pairing.empty() ? parse_pairing(opt.pairing)
                                            : doc.pairing.value_or(default_pairing(2 * doc.equations.n_half));
    const Realification r = realify(doc.equations, pairing);
    const bool lie = is_lie_algebra(r.algebra);
    const bool forth = complexify(real_equations(r.algebra), r.pairing) == doc.equations;
    const bool ok = text_ok && forth;
    o.result = {{"print_parse_identity", text_ok}, {"jacobi", lie}, {"complex_equations_recovered", forth}, {"ok", ok}};
    t << "print/parse: " << (text_ok ? "identical" : "MISMATCH") << "\n";
    t << "complex equations of the realification " << (forth ? "match" : "DO NOT match") << " the input\n";
    if (!lie) t << "note: the realification violates the Jacobi identity\n";
    o.text = t.str();
    o.code = ok ? kComputed : kNegative;
    return o;
}

Outcome cmd_realify(const EquationDocument& doc, const Options& opt) {
    Pairing pairing = !opt.pairing.empty() ? parse_pairing(opt.pairing)
                                            : doc.pairing.value_or(default_pairing(2 * doc.equations.n_half));
    const Realification r = realify(doc.equations, pairing);
    Outcome o = describe_algebra(r.algebra, make_document(r.algebra, {{"J", r.structure}}));
    const bool lie = is_lie_algebra(r.algebra);
    o.result["pairing"] = format_pairing(r.pairing);
    o.result["jacobi"] = lie;
    if (!lie) {
        o.text += "# the Jacobi identity fails\n";
        o.code = kNegative;
    }
    return o;
}

// ---------------------------------------------------------------------------
// families

FamilyParams parse_sets(Family family, const std::vector<std::string>& sets) {
    FamilyParams p(family);
    for (const auto& s : sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "expected SYMBOL=VALUE, got '" + s + "'");
        p.set(s.substr(0, eq), CScalar::parse(s.substr(eq + 1)));
    }
    return p;
}

json report_json(const CaseReport& r) {
    json j = {{"nilpotent", r.nilpotent},
              {"type", r.nilpotent ? type_json(r.type) : json(nullptr)},
              {"kind", r.kind ? json(kind_key(*r.kind)) : json(nullptr)},
              {"center_dim", r.center_dim},
              {"predicted_cases", r.predicted},
              {"matched_case", r.matched ? json(*r.matched) : json(nullptr)},
              {"type_admissible", r.type_admissible},
              {"problems", r.problems},
              {"ok", r.ok()}};
    return j;
}

Outcome cmd_family(const std::string& name, const Options& opt) {
    const auto family = family_from_name(name);
    if (!family) throw Error(ErrorKind::InvalidArgument, "unknown family '" + name + "' (G2dim3, G2dim4, G2dim5)");
    const FamilyParams p = parse_sets(*family, opt.sets);
    const ComplexEquations eqs = family_instantiate(p);
    Outcome o;
    json params = json::object();
    for (const auto& [k, v] : p.values()) params[k] = v.to_string();
    o.result = {{"family", name}, {"parameters", params}, {"equations", equations_json(eqs)}};
    std::ostringstream t;
    t << name << " at " << p.to_string() << "\n" << equations_text(eqs);
    try {
        const CaseReport r = family_case_check(p, eqs);
        const Realification real = realify(eqs, pairing_dim8_reference());
        const auto mismatches = coefficient_relation_mismatches(p, real.algebra);
        o.result["jacobi"] = true;
        o.result["report"] = report_json(r);
        o.result["relation_mismatches"] = mismatches;
        t << "Jacobi identity holds\n";
        if (r.nilpotent) t << "ascending type " << format_type(r.type) << ", ";
        if (r.kind) t << to_string(*r.kind) << ", ";
        t << "center of dimension " << r.center_dim << "\n";
        t << "cases allowed by the parameters:";
        for (const auto& c : r.predicted) t << " (" << c << ")";
        t << (r.predicted.empty() ? " none\n" : "\n");
        t << (r.matched ? "computed type matches case (" + *r.matched + ")\n" : "");
        for (const auto& pr : r.problems) t << "problem: " << pr << "\n";
        for (const auto& m : mismatches) t << "relation mismatch: " << m << "\n";
        o.code = r.ok() && mismatches.empty() ? kComputed : kNegative;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::JacobiViolated) throw;
        o.result["jacobi"] = false;
        o.result["report"] = nullptr;
        o.result["relation_mismatches"] = json::array();
        t << "the parameters violate the Jacobi identity\n";
        o.code = kNegative;
    }
    o.text = t.str();
    return o;
}

std::string file_stem_for(const FamilyCase& c) {
    std::string family = to_string(c.family);
    std::transform(family.begin(), family.end(), family.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return "family_" + family + "_" + c.label;
}

std::string instance_file_text(const SearchHit& hit, const Realification& r) {
    std::ostringstream out;
    out << "# Realification of the " << to_string(hit.target.family) << " equations at " << hit.params.to_string()
        << ".\n"
        << "# Case (" << hit.target.label << "), expected ascending type " << format_type(hit.target.type)
        << "; found by `nilcx family-search`\n"
        << "# after " << hit.candidates << " candidate tuples. (1,0)-forms w^a = e^x - i e^y for the pairs "
        << format_pairing(r.pairing) << ".\n";
    NlaDocument doc = make_document(r.algebra, {{"J", r.structure}});
    doc.name = hit.target.name();
    out << print_nla(doc);
    return out.str();
}

Outcome cmd_family_search(const Options& opt) {
    Outcome o;
    std::ostringstream t;
    json hits = json::array();
    std::vector<std::string> manifest;
    bool all_found = true;
    for (const auto& c : family_cases()) {
        if (!opt.case_name.empty() && opt.case_name != c.name()) continue;
        const auto hit = search_case(c);
        if (!hit) {
            all_found = false;
            hits.push_back({{"case", c.name()}, {"found", false}});
            t << c.name() << ": no instance found\n";
            continue;
        }
        json params = json::object();
        std::string joined;
        for (const auto& [k, v] : hit->params.values()) params[k] = v.to_string();
        for (const auto& sym : family_symbols(c.family)) {
            const CScalar v = hit->params.get(sym);
            if (v.is_zero()) continue;
            joined += (joined.empty() ? "" : ";") + sym + "=" + v.to_string();
        }
        const std::string file = file_stem_for(c) + ".nla";
        hits.push_back({{"case", c.name()},
                        {"found", true},
                        {"parameters", params},
                        {"type", type_json(hit->report.type)},
                        {"candidates", hit->candidates},
                        {"file", file}});
        t << c.name() << ": " << hit->params.to_string() << "  type " << format_type(hit->report.type) << "  ("
          << hit->candidates << " candidates)\n";
        manifest.push_back(file + " " + to_string(c.family) + " " + c.label + " " + joined);
        if (!opt.write_dir.empty()) {
            const Realification r = realify(family_instantiate(hit->params), pairing_dim8_reference());
            std::ofstream f(fs::path(opt.write_dir) / file);
            if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write into " + opt.write_dir);
            f << instance_file_text(*hit, r);
        }
    }
    if (!opt.write_dir.empty() && opt.case_name.empty()) {
        std::ofstream f(fs::path(opt.write_dir) / "family_instances.txt");
        if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write into " + opt.write_dir);
        f << "# file family case parameters (written by `nilcx family-search --write`)\n";
        for (const auto& line : manifest) f << line << "\n";
    }
    o.result = {{"instances", hits}};
    o.text = t.str();
    o.code = all_found ? kComputed : kNegative;
    return o;
}

// ---------------------------------------------------------------------------
// envelope and dispatch

json error_json(const Error& e) {
    json j = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
        j["line"] = pe->line();
        j["column"] = pe->column();
    }
    return j;
}

const char* status_of(int code) {
    switch (code) {
        case kComputed: return "ok";
        case kNegative: return "negative";
        default: return "error";
    }
}

/// Runs a command body and wraps its outcome or error in the report envelope.
json guarded(const std::string& command, const std::string& file, const std::function<Outcome()>& body,
             std::string& text) {
    json env = {{"command", command}, {"file", file}};
    int code = kComputed;
    try {
        Outcome o = body();
        code = o.code;
        env["status"] = status_of(code);
        env["exit_code"] = code;
        env["result"] = std::move(o.result);
        text = std::move(o.text);
        return env;
    } catch (const Error& e) {
        code = is_verdict(e.kind()) ? kNegative : kInputError;
        env["status"] = status_of(code);
        env["exit_code"] = code;
        env["error"] = error_json(e);
        text = std::string(code == kNegative ? "verdict: " : "error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        code = kInputError;
        env["status"] = status_of(code);
        env["exit_code"] = code;
        env["error"] = {{"kind", "InvalidArgument"}, {"message", e.what()}};
        text = std::string("error: ") + e.what() + "\n";
    }
    return env;
}

std::vector<std::string> directory_files(const std::string& dir, const std::string& extension) {
    std::vector<std::string> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == extension) files.push_back(entry.path().string());
    }
    if (ec) throw Error(ErrorKind::InvalidArgument, "cannot list directory " + dir);
    std::sort(files.begin(), files.end());
    return files;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nilpotent Lie algebras and their complex structures, in exact arithmetic", "nilcx"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> files;
    std::string all_dir;
    std::string family_name;

    const auto file_command = [&](const std::string& name, const std::string& help, const std::string& ext = "nla") {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", files, "Input ." + ext + " file");
        sub->add_option("--all", all_dir, "Process every ." + ext + " file of a directory");
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        return sub;
    };

    CLI::App* check = file_command("check", "Jacobi identity and d^2 = 0");
    CLI::App* series = file_command("series", "Ascending central series, type and step");
    CLI::App* jseries = file_command("jseries", "Ascending J-compatible series and classification");
    CLI::App* nijenhuis = file_command("nijenhuis", "Nijenhuis tensor on basis pairs");
    CLI::App* quotient_cmd = file_command("quotient", "Quotient by an ideal");
    CLI::App* product = file_command("product", "Direct product of two algebras");
    CLI::App* obstruct = file_command("obstruct", "Obstructions to complex structures");
    CLI::App* audit = file_command("audit", "Check structural statements on every structure");
    CLI::App* ceq = file_command("ceq", "Complex structure equations");
    CLI::App* roundtrip = file_command("roundtrip", "Print/parse and realify/complexify round trips (.nla or .ceq)");
    CLI::App* realify_cmd = file_command("realify", "Real algebra and structure of a .ceq file", "ceq");
    CLI::App* family = app.add_subcommand("family", "Instantiate a family and check its case bookkeeping");
    CLI::App* search = app.add_subcommand("family-search", "Search small parameters realizing every family case");

    for (CLI::App* sub : {jseries, nijenhuis, audit, ceq, roundtrip}) {
        sub->add_option("--j", opt.structure, "Structure name (default: first; audit and roundtrip: all)");
    }
    for (CLI::App* sub : {ceq, roundtrip, realify_cmd}) {
        sub->add_option("--pairing", opt.pairing, "Pairs x,y with J e_x = e_y, e.g. \"4,8;3,7;2,6;1,5\"");
    }
    quotient_cmd->add_option("--ideal", opt.ideal, "Generators separated by ';', e.g. \"7;8\"")->required();
    family->add_option("name", family_name, "G2dim3, G2dim4 or G2dim5")->required();
    family->add_option("--set", opt.sets, "SYMBOL=VALUE, e.g. A=1+2i or s=1/2");
    family->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    search->add_option("--write", opt.write_dir, "Directory for instance files and family_instances.txt");
    search->add_option("--case", opt.case_name, "Only this case, e.g. \"G2dim3(i)\"");
    search->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kComputed : kInputError;
    }

    const bool as_json = opt.format == "json";
    CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();

    const auto emit = [&](const json& env, const std::string& text) {
        if (as_json) out << env.dump(2) << "\n";
        else out << text;
    };

    if (chosen == family || chosen == search) {
        std::string text;
        const json env = guarded(
            command, "", [&] { return chosen == family ? cmd_family(family_name, opt) : cmd_family_search(opt); }, text);
        emit(env, text);
        return env["exit_code"].get<int>();
    }

    if (chosen == product) {
        if (files.size() != 2) {
            err << "product needs exactly two files\n";
            return kInputError;
        }
        std::string text;
        const json env = guarded(command, files[0] + " " + files[1], [&] {
            const NlaDocument da = read_nla_file(files[0]);
            const NlaDocument db = read_nla_file(files[1]);
            const LieAlgebra g = direct_product(to_algebra(da), to_algebra(db));
            std::vector<std::pair<std::string, Acs>> js;
            if (!da.structures.empty() && !db.structures.empty()) {
                const Acs ja = structure(da, da.structures.front().name);
                const Acs jb = structure(db, db.structures.front().name);
                Matrix m(g.dim(), g.dim());
                for (std::size_t r = 0; r < da.dim; ++r)
                    for (std::size_t c = 0; c < da.dim; ++c) m.at(r, c) = ja.matrix().at(r, c);
                for (std::size_t r = 0; r < db.dim; ++r)
                    for (std::size_t c = 0; c < db.dim; ++c) m.at(da.dim + r, da.dim + c) = jb.matrix().at(r, c);
                js.emplace_back("J", Acs::validate(m));
            }
            return describe_algebra(g, make_document(g, js));
        }, text);
        emit(env, text);
        return env["exit_code"].get<int>();
    }

    const bool ceq_input = chosen == realify_cmd;
    const auto body_for = [&](const std::string& path) -> std::function<Outcome()> {
        return [&, path]() -> Outcome {
            const bool is_ceq = ceq_input || (chosen == roundtrip && fs::path(path).extension() == ".ceq");
            if (is_ceq) {
                const EquationDocument doc = read_equations_file(path);
                return chosen == realify_cmd ? cmd_realify(doc, opt) : cmd_roundtrip_ceq(doc, opt);
            }
            const NlaDocument doc = read_nla_file(path);
            if (chosen == check) return cmd_check(doc, opt);
            if (chosen == series) return cmd_series(doc, opt);
            if (chosen == jseries) return cmd_jseries(doc, opt);
            if (chosen == nijenhuis) return cmd_nijenhuis(doc, opt);
            if (chosen == quotient_cmd) return cmd_quotient(doc, opt);
            if (chosen == obstruct) return cmd_obstruct(doc, opt);
            if (chosen == audit) return cmd_audit(doc, opt);
            if (chosen == ceq) return cmd_ceq(doc, opt);
            return cmd_roundtrip_nla(doc, opt);
        };
    };

    if (!all_dir.empty()) {
        if (!files.empty()) {
            err << "give either files or --all, not both\n";
            return kInputError;
        }
        std::vector<std::string> paths;
        try {
            paths = directory_files(all_dir, ceq_input ? ".ceq" : ".nla");
        } catch (const Error& e) {
            err << e.what() << "\n";
            return kInputError;
        }
        json reports = json::array();
        std::string text;
        int worst = kComputed;
        for (const auto& path : paths) {
            std::string part;
            json env = guarded(command, path, body_for(path), part);
            worst = std::max(worst, env["exit_code"].get<int>());
            text += "== " + path + "\n" + part;
            reports.push_back(std::move(env));
        }
        const json batch = {{"command", command}, {"directory", all_dir}, {"exit_code", worst}, {"reports", reports}};
        emit(batch, text);
        return worst;
    }

    if (files.size() != 1) {
        err << command << " needs one input file (or --all DIR)\n";
        return kInputError;
    }
    std::string text;
    const json env = guarded(command, files[0], body_for(files[0]), text);
    emit(env, text);
    return env["exit_code"].get<int>();
}

}  // namespace nilcx::cli
