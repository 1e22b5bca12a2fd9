#include <doctest.h>

#include <algorithm>

#include "nilcx/error.hpp"
#include "nilcx/nla.hpp"
#include "nilcx/obstruction.hpp"
#include "support.hpp"

using namespace nilcx;

namespace {

const ObstructionVerdict& verdict(const std::vector<ObstructionVerdict>& vs, const std::string& rule) {
    const auto it = std::find_if(vs.begin(), vs.end(), [&](const auto& v) { return v.rule == rule; });
    REQUIRE(it != vs.end());
    return *it;
}

const AuditCheck& check(const std::vector<AuditCheck>& cs, const std::string& rule) {
    const auto it = std::find_if(cs.begin(), cs.end(), [&](const auto& c) { return c.rule == rule; });
    REQUIRE(it != cs.end());
    return *it;
}

LieAlgebra corpus(const std::string& file) { return to_algebra(testing::corpus_doc(file)); }

}  // namespace

TEST_CASE("filiform model is obstructed twice") {
    const auto vs = obstruction_report(corpus("filiform8.nla"));
    CHECK(verdict(vs, "filiform").triggered);
    CHECK(verdict(vs, "slow-growth").triggered);
    CHECK(excludes_complex_structures(vs));
}

TEST_CASE("abelian algebra is not obstructed") {
    const auto vs = obstruction_report(LieAlgebra(8));
    CHECK_FALSE(excludes_complex_structures(vs));
    for (const auto& v : vs) CHECK_FALSE(v.triggered);
}

TEST_CASE("odd dimension is reported as a verdict") {
    const auto vs = obstruction_report(corpus("h3.nla"));
    REQUIRE(vs.size() == 1);
    CHECK(vs.front().rule == "odd-dimension");
    CHECK(vs.front().triggered);
}

TEST_CASE("the product example has no direct obstruction") {
    const auto vs = obstruction_report(corpus("ex3_17.nla"));
    CHECK_FALSE(excludes_complex_structures(vs));
    // The center is 2-dimensional, so structures need not be SnN.
    CHECK_FALSE(verdict(vs, "center-one-forces-snn").triggered);
}

TEST_CASE("obstruction errors") {
    CHECK_THROWS_AS(obstruction_report(to_algebra(parse_nla("dim 2\n[1,2] = 2\n"))), Error);
}

TEST_CASE("admissible SnN types") {
    CHECK(snn_admissible_types(4)->empty());
    CHECK(snn_admissible_types(2)->empty());
    CHECK(*snn_admissible_types(6) == std::vector<AscendingType>{{1, 3, 6}, {1, 3, 4, 6}});
    CHECK(snn_admissible_types(8)->size() == 8);
    CHECK_FALSE(snn_admissible_types(10).has_value());
    CHECK(format_type({1, 3, 8}) == "(1,3,8)");
}

TEST_CASE("audit of the SnN ten-dimensional example") {
    const NlaDocument doc = testing::corpus_doc("ex2_6.nla");
    const auto checks = theorem_audit(to_algebra(doc), structure(doc, "J"));
    CHECK(count_failures(checks) == 0);
    CHECK(check(checks, "center-bound").outcome == AuditOutcome::Pass);
    CHECK(check(checks, "snn-step").outcome == AuditOutcome::Pass);
}

TEST_CASE("audit skips SnN conditionals for nilpotent structures") {
    const NlaDocument doc = testing::corpus_doc("ex2_5.nla");
    const auto checks = theorem_audit(to_algebra(doc), structure(doc, "Jhat"));
    CHECK(count_failures(checks) == 0);
    CHECK(check(checks, "snn-step").outcome == AuditOutcome::Skipped);
    CHECK(check(checks, "center-bound").outcome == AuditOutcome::Skipped);
    CHECK(check(checks, "a1-center").outcome == AuditOutcome::Pass);
}

TEST_CASE("audit of family instances") {
    for (const char* file : {"family_g2dim3_i.nla", "family_g2dim4_ii.nla", "family_g2dim5_i.nla"}) {
        CAPTURE(file);
        const NlaDocument doc = testing::corpus_doc(file);
        const auto checks = theorem_audit(to_algebra(doc), structure(doc, "J"));
        CHECK(count_failures(checks) == 0);
        CHECK(check(checks, "dim8-center").outcome == AuditOutcome::Pass);
        CHECK(check(checks, "dim8-type").outcome == AuditOutcome::Pass);
    }
}

TEST_CASE("audit refuses non-integrable structures") {
    const NlaDocument doc = testing::corpus_doc("ex2_5.nla");
    CHECK_THROWS_AS(theorem_audit(to_algebra(doc), Acs::from_pairs(8, {{0, 2}, {1, 3}, {4, 5}, {6, 7}})), Error);
}

TEST_CASE("coexistence audit") {
    const NlaDocument doc = testing::corpus_doc("ex2_5.nla");
    const std::vector<Acs> both = {structure(doc, "J"), structure(doc, "Jhat")};
    CHECK(coexistence_audit(to_algebra(doc), both).outcome == AuditOutcome::Pass);
    CHECK(coexistence_audit(to_algebra(doc), std::vector<Acs>{both.front()}).outcome == AuditOutcome::Skipped);
}

TEST_CASE("property: audits of moved corpus structures never fail") {
    testing::Rng rng(909);
    const auto pool = testing::corpus_pairs();
    for (int trial = 0; trial < 200; ++trial) {
        const testing::Pair p = testing::random_integrable(rng, pool);
        CAPTURE(p.label);
        CHECK(count_failures(theorem_audit(p.g, p.j)) == 0);
    }
}
