#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilcx/complex_structure.hpp"

namespace nilcx {

// Text format for algebras and structures (.nla). Indices are 1-based.
//
//   # comment
//   name "Example"
//   cite "where it comes from"
//   dim 8
//   basis X1 X2 ...           (optional, dim names)
//   [1,3] = 6                 [e1,e3] = e6
//   [3,5] = -1 1/2*2          [e3,e5] = -e1 + 1/2 e2
//   J 1 = 2                   J e1 = e2 (and J e2 = -e1)
//   Jhat 5 = 8
//
// A bracket line with i > j is stored as [j,i] with negated terms; `0` is an empty
// right-hand side. A structure line `NAME i = terms` sets NAME e_i; when it has a single
// term c*j it also fixes NAME e_j = -(1/c) e_i. Names of structures start with `J`.

struct NlaTerm {
    Scalar coefficient;
    std::size_t index;  // 1-based

    friend bool operator==(const NlaTerm&, const NlaTerm&) = default;
};

struct NlaBracket {
    std::size_t i, j;  // 1-based, i < j
    std::vector<NlaTerm> terms;

    friend bool operator==(const NlaBracket&, const NlaBracket&) = default;
};

struct NlaStructure {
    std::string name;
    /// columns[k] = J e_{k+1}, one per basis vector.
    std::vector<std::vector<NlaTerm>> columns;

    friend bool operator==(const NlaStructure&, const NlaStructure&) = default;
};

struct NlaDocument {
    std::size_t dim = 0;
    std::optional<std::string> name;
    std::optional<std::string> cite;
    std::vector<std::string> basis;
    std::vector<NlaBracket> brackets;
    std::vector<NlaStructure> structures;

    friend bool operator==(const NlaDocument&, const NlaDocument&) = default;
};

inline constexpr std::size_t kMaxNlaDim = 64;

/// Throws ParseError (Syntax, DuplicateBracket, IndexOutOfRange, JInconsistent,
/// NotAlmostComplex) with the offending line and column.
NlaDocument parse_nla(std::string_view text);
NlaDocument read_nla_file(const std::string& path);
/// Canonical text; parse_nla(print_nla(d)) == d.
std::string print_nla(const NlaDocument& doc);

LieAlgebra to_algebra(const NlaDocument& doc);
/// Throws Error(InvalidArgument) when no structure has that name.
Acs structure(const NlaDocument& doc, std::string_view name);

/// Document for an algebra (and optional named structures); zero constants omitted.
NlaDocument make_document(const LieAlgebra& g, const std::vector<std::pair<std::string, Acs>>& structures = {});

/// Basis labels: the document's basis line, or e1..en.
std::vector<std::string> basis_labels(const NlaDocument& doc);

/// Parses a term list such as "7", "-1/2*3 4" or "0" against the given dimension.
/// Throws ParseError (line 1).
std::vector<NlaTerm> parse_terms(std::string_view text, std::size_t dim);

/// Renders "-1/2*3" style terms; "0" when empty.
std::string format_terms(const std::vector<NlaTerm>& terms);

}  // namespace nilcx
