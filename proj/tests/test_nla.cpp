#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "nilcx/equation_text.hpp"
#include "nilcx/error.hpp"
#include "nilcx/nla.hpp"
#include "support.hpp"

using namespace nilcx;

namespace {

std::optional<ErrorKind> parse_kind(std::string_view text) {
    try {
        parse_nla(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    return std::nullopt;
}

/// Corpus-like text with random edits: deletions, duplications and byte flips.
std::string mutate(testing::Rng& rng, std::string text) {
    static const std::string alphabet = "[]=,-/*()#\"\n 0123456789Jdimnamebasis\t\\x";
    const int edits = rng.integer(1, 6);
    for (int k = 0; k < edits && !text.empty(); ++k) {
        const std::size_t pos = rng.index(text.size());
        switch (rng.integer(0, 3)) {
            case 0: text.erase(pos, 1 + rng.index(4)); break;
            case 1: text.insert(pos, 1, alphabet[rng.index(alphabet.size())]); break;
            case 2: text[pos] = static_cast<char>(rng.integer(0, 255)); break;
            default: text.insert(pos, text.substr(pos, 1 + rng.index(8))); break;
        }
    }
    return text;
}

std::vector<std::string> corpus_texts(const std::string& extension) {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(testing::corpus_dir())) {
        if (e.path().extension() != extension) continue;
        std::ifstream f(e.path());
        out.emplace_back(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("heisenberg algebra from text") {
    const NlaDocument doc = parse_nla("dim 3\n[1,2] = 3\n");
    CHECK(doc.dim == 3);
    const LieAlgebra g = to_algebra(doc);
    CHECK(g.constant(0, 1, 2) == Scalar(1));
    CHECK(g.brackets().size() == 1);
}

TEST_CASE("full grammar") {
    const NlaDocument doc = parse_nla(
        "# comment\n"
        "name \"demo # not a comment\"\n"
        "cite \"somewhere\"\n"
        "dim 4\n"
        "basis X1 X2 X3 X4   # trailing\n"
        "[2,1] = -1/2*3 (3/4)*4\n"
        "[1,3] = 0\n"
        "J 1 = 2\n"
        "J 3 = -4\n");
    CHECK(doc.name == std::optional<std::string>("demo # not a comment"));
    CHECK(doc.cite == std::optional<std::string>("somewhere"));
    CHECK(doc.basis == std::vector<std::string>{"X1", "X2", "X3", "X4"});
    REQUIRE(doc.brackets.size() == 2);
    const LieAlgebra g = to_algebra(doc);
    CHECK(g.constant(0, 1, 2) == Scalar(1, 2));
    CHECK(g.constant(0, 1, 3) == Scalar(-3, 4));
    const Acs j = structure(doc, "J");
    CHECK(j.apply(unit_vector(4, 3)) == unit_vector(4, 2));
    CHECK(basis_labels(doc).front() == "X1");
    CHECK_THROWS_AS(structure(doc, "Jx"), Error);
}

TEST_CASE("parser diagnostics") {
    CHECK(parse_kind("dim 3\n[1,1] = 2\n").has_value());
    CHECK(parse_kind("dim 3\n[1,2] = 3\n[2,1] = 3\n") == ErrorKind::DuplicateBracket);
    CHECK(parse_kind("dim 3\n[1,4] = 3\n") == ErrorKind::IndexOutOfRange);
    CHECK(parse_kind("dim 3\n[1,2] = 7\n") == ErrorKind::IndexOutOfRange);
    CHECK(parse_kind("[1,2] = 3\n") == ErrorKind::Syntax);
    CHECK(parse_kind("dim 4\nJ 1 = 2\n") == ErrorKind::NotAlmostComplex);
    CHECK(parse_kind("dim 2\nJ 1 = 2\nJ 2 = 1\n") == ErrorKind::JInconsistent);
    CHECK(parse_kind("dim 2\nfoo 1\n") == ErrorKind::Syntax);
    CHECK(parse_kind("dim 65\n").has_value());

    try {
        parse_nla("dim 3\n\n[1,2] = 3 x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() >= 1);
    }
}

TEST_CASE("terms") {
    const auto t = parse_terms("-1/2*3 4", 4);
    REQUIRE(t.size() == 2);
    CHECK(t[0].coefficient == Scalar(-1, 2));
    CHECK(t[0].index == 3);
    CHECK(format_terms(t) == "-1/2*3 4");
    CHECK(format_terms({}) == "0");
    CHECK(parse_terms("0", 2).empty());
    CHECK_THROWS_AS(parse_terms("5", 4), ParseError);
}

TEST_CASE("corpus files parse and print canonically") {
    for (const auto& text : corpus_texts(".nla")) {
        const NlaDocument doc = parse_nla(text);
        CAPTURE(doc.name.value_or("?"));
        const std::string printed = print_nla(doc);
        CHECK(parse_nla(printed) == doc);
        CHECK(print_nla(parse_nla(printed)) == printed);
    }
}

TEST_CASE("make_document round trips algebras and structures") {
    for (const auto& pair : testing::corpus_pairs()) {
        CAPTURE(pair.label);
        const NlaDocument doc = make_document(pair.g, {{"J", pair.j}});
        const NlaDocument back = parse_nla(print_nla(doc));
        CHECK(to_algebra(back) == pair.g);
        CHECK(structure(back, "J") == pair.j);
    }
}

TEST_CASE("property: print/parse identity on random documents") {
    testing::Rng rng(1304);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 * (1 + rng.index(4));
        const LieAlgebra g = testing::random_bracket_table(rng, n, 80);
        std::vector<std::pair<std::string, Acs>> js;
        if (rng.chance(70)) js.emplace_back("J", testing::random_acs(rng, n));
        if (rng.chance(30)) js.emplace_back("Jalt", Acs::standard(n));
        NlaDocument doc = make_document(g, js);
        if (rng.chance(50)) doc.name = "random " + std::to_string(trial);
        const NlaDocument back = parse_nla(print_nla(doc));
        CHECK(back == doc);
        CHECK(to_algebra(back) == g);
    }
}

TEST_CASE("property: parsers are total on mutated input") {
    testing::Rng rng(1405);
    const auto nla = corpus_texts(".nla");
    const std::vector<std::string> ceq = {
        "dim 8\npairing 4,8;3,7;2,6;1,5\ndw2 = (i) w1^-1 + (-1) w1^4\ndw3 = (1/2) w-1^-2\n",
        "dim 4\ndw2 = (1-i) w1^-1\ndw-2 = (-1-i) w-1^1\n"};
    int rejected = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::string text = mutate(rng, nla[rng.index(nla.size())]);
        try {
            const NlaDocument doc = parse_nla(text);
            CHECK(parse_nla(print_nla(doc)) == doc);
        } catch (const ParseError& e) {
            CHECK(e.line() >= 1);
            CHECK(e.column() >= 1);
            ++rejected;
        }
        const std::string etext = mutate(rng, ceq[rng.index(ceq.size())]);
        try {
            const EquationDocument doc = parse_equations(etext);
            CHECK(parse_equations(print_equations(doc)) == doc);
        } catch (const ParseError& e) {
            CHECK(e.line() >= 1);
            ++rejected;
        }
    }
    CHECK(rejected > 100);
}
