#include "nilcx/nla.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "nilcx/error.hpp"

namespace nilcx {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

/// Cursor over one line; columns are 1-based.
class LineCursor {
public:
    LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    std::size_t column() const { return pos_ + 1; }
    std::size_t line() const { return line_; }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!at_end() && is_space(text_[pos_])) ++pos_;
    }

    bool consume(char c) {
        skip_space();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    std::string_view identifier() {
        skip_space();
        const std::size_t start = pos_;
        if (!is_ident_start(peek())) fail("expected a name");
        while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    std::size_t index(std::size_t dim) {
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && is_digit(text_[pos_])) ++pos_;
        if (start == pos_) fail("expected an index");
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        (void)ptr;
        if (ec != std::errc() || value == 0 || value > dim) {
            throw ParseError(ErrorKind::IndexOutOfRange, line_, start + 1,
                             "index " + std::string(text_.substr(start, pos_ - start)) + " outside 1.." +
                                 std::to_string(dim));
        }
        return value;
    }

    std::size_t positive_integer() {
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && is_digit(text_[pos_])) ++pos_;
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        (void)ptr;
        if (start == pos_) fail("expected a number");
        if (ec != std::errc() || value == 0 || value > kMaxNlaDim) {
            throw ParseError(ErrorKind::Syntax, line_, start + 1,
                             "dimension must lie in 1.." + std::to_string(kMaxNlaDim));
        }
        return value;
    }

    std::string quoted() {
        skip_space();
        if (peek() != '"') fail("expected a quoted string");
        ++pos_;
        std::string out;
        while (true) {
            if (at_end()) fail("unterminated string");
            const char c = text_[pos_++];
            if (c == '"') break;
            if (c == '\\') {
                if (at_end()) fail("unterminated escape");
                const char e = text_[pos_++];
                if (e != '"' && e != '\\') {
                    throw ParseError(ErrorKind::Syntax, line_, pos_ - 1, "unknown escape");
                }
                out.push_back(e);
            } else {
                out.push_back(c);
            }
        }
        return out;
    }

    /// Whitespace-separated terms up to the end of the line.
    std::vector<NlaTerm> terms(std::size_t dim) {
        std::map<std::size_t, Scalar> sum;
        skip_space();
        if (at_end()) fail("missing right-hand side");
        if (peek() == '0') {
            const std::size_t save = pos_;
            ++pos_;
            skip_space();
            if (at_end()) return {};
            pos_ = save;
        }
        while (true) {
            skip_space();
            if (at_end()) break;
            bool negative = false;
            while (peek() == '+' || peek() == '-') {
                negative ^= peek() == '-';
                ++pos_;
                skip_space();
            }
            Scalar coefficient(1);
            std::size_t index = 0;
            const std::size_t start = pos_;
            if (peek() == '(') {
                ++pos_;
                coefficient = rational();
                expect(')');
                expect('*');
                index = this->index(dim);
            } else {
                // INT, or RATIONAL*INT
                while (!at_end() && (is_digit(peek()) || peek() == '/')) ++pos_;
                const std::string_view head = text_.substr(start, pos_ - start);
                skip_space();
                if (peek() == '*') {
                    ++pos_;
                    coefficient = parse_rational(head, start);
                    index = this->index(dim);
                } else {
                    if (head.find('/') != std::string_view::npos) {
                        throw ParseError(ErrorKind::Syntax, line_, start + 1, "a fraction must be followed by '*index'");
                    }
                    pos_ = start;
                    index = this->index(dim);
                }
            }
            if (!at_end() && !is_space(peek())) fail("unexpected character after term");
            sum[index] += negative ? -coefficient : coefficient;
        }
        std::vector<NlaTerm> out;
        for (auto& [k, c] : sum) {
            if (!c.is_zero()) out.push_back({std::move(c), k});
        }
        return out;
    }

    void expect_end() {
        skip_space();
        if (!at_end()) fail("unexpected trailing text");
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(ErrorKind::Syntax, line_, column(), message);
    }

private:
    Scalar rational() {
        skip_space();
        const std::size_t start = pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        while (!at_end() && (is_digit(peek()) || peek() == '/')) ++pos_;
        return parse_rational(text_.substr(start, pos_ - start), start);
    }

    Scalar parse_rational(std::string_view s, std::size_t start) const {
        try {
            return Scalar::parse(s);
        } catch (const Error&) {
            throw ParseError(ErrorKind::Syntax, line_, start + 1, "malformed coefficient '" + std::string(s) + "'");
        }
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

/// Strips a trailing comment that is not inside a quoted string.
std::string_view strip_comment(std::string_view line) {
    bool quoted = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
        const char c = line[k];
        if (quoted && c == '\\') {
            ++k;
        } else if (c == '"') {
            quoted = !quoted;
        } else if (c == '#' && !quoted) {
            return line.substr(0, k);
        }
    }
    return line;
}

struct PendingStructure {
    std::size_t first_line;
    std::vector<std::optional<std::vector<NlaTerm>>> columns;
};

void assign_column(PendingStructure& s, std::size_t column, std::vector<NlaTerm> terms, std::size_t line,
                   std::size_t col, const std::string& name) {
    auto& slot = s.columns[column - 1];
    if (slot && *slot != terms) {
        throw ParseError(ErrorKind::JInconsistent, line, col,
                         name + " e" + std::to_string(column) + " is already set to " + format_terms(*slot));
    }
    slot = std::move(terms);
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out + "\"";
}

Matrix structure_matrix(const NlaStructure& s, std::size_t dim) {
    Matrix m(dim, dim);
    for (std::size_t c = 0; c < s.columns.size(); ++c) {
        for (const auto& t : s.columns[c]) m.at(t.index - 1, c) = t.coefficient;
    }
    return m;
}

}  // namespace

std::string format_terms(const std::vector<NlaTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += ' ';
        if (t.coefficient == Scalar(1)) {
            out += std::to_string(t.index);
        } else if (t.coefficient == Scalar(-1)) {
            out += "-" + std::to_string(t.index);
        } else {
            out += t.coefficient.to_string() + "*" + std::to_string(t.index);
        }
    }
    return out;
}

std::vector<NlaTerm> parse_terms(std::string_view text, std::size_t dim) {
    LineCursor cur(text, 1);
    return cur.terms(dim);
}

NlaDocument parse_nla(std::string_view text) {
    NlaDocument doc;
    bool have_dim = false;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<std::string> structure_order;
    std::map<std::string, PendingStructure> pending;

    std::size_t line_no = 0;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        const std::size_t end = std::min(text.find('\n', offset), text.size());
        const std::string_view raw = text.substr(offset, end - offset);
        offset = end + 1;
        ++line_no;
        LineCursor cur(strip_comment(raw), line_no);
        cur.skip_space();
        if (cur.at_end()) {
            if (end == text.size()) break;
            continue;
        }
        const auto need_dim = [&] {
            if (!have_dim) cur.fail("'dim' must come first");
        };

        if (cur.peek() == '[') {
            need_dim();
            cur.expect('[');
            const std::size_t col_i = cur.column();
            std::size_t i = cur.index(doc.dim);
            cur.expect(',');
            std::size_t j = cur.index(doc.dim);
            cur.expect(']');
            cur.expect('=');
            std::vector<NlaTerm> terms = cur.terms(doc.dim);
            if (i == j) {
                throw ParseError(ErrorKind::Syntax, line_no, col_i, "[e" + std::to_string(i) + ",e" +
                                                                        std::to_string(i) + "] is zero by antisymmetry");
            }
            if (i > j) {
                std::swap(i, j);
                for (auto& t : terms) t.coefficient = -t.coefficient;
            }
            if (!seen.insert({i, j}).second) {
                throw ParseError(ErrorKind::DuplicateBracket, line_no, col_i,
                                 "bracket [" + std::to_string(i) + "," + std::to_string(j) + "] given twice");
            }
            doc.brackets.push_back({i, j, std::move(terms)});
            if (end == text.size()) break;
            continue;
        }

        const std::size_t word_col = cur.column();
        const std::string word(cur.identifier());
        if (word == "dim") {
            if (have_dim) throw ParseError(ErrorKind::Syntax, line_no, word_col, "'dim' given twice");
            doc.dim = cur.positive_integer();
            have_dim = true;
            cur.expect_end();
        } else if (word == "name" || word == "cite") {
            auto& field = word == "name" ? doc.name : doc.cite;
            if (field) throw ParseError(ErrorKind::Syntax, line_no, word_col, "'" + word + "' given twice");
            field = cur.quoted();
            cur.expect_end();
        } else if (word == "basis") {
            need_dim();
            if (!doc.basis.empty()) throw ParseError(ErrorKind::Syntax, line_no, word_col, "'basis' given twice");
            std::set<std::string> unique;
            while (true) {
                cur.skip_space();
                if (cur.at_end()) break;
                const std::size_t col = cur.column();
                std::string label(cur.identifier());
                if (!unique.insert(label).second) {
                    throw ParseError(ErrorKind::Syntax, line_no, col, "basis name '" + label + "' repeated");
                }
                doc.basis.push_back(std::move(label));
            }
            if (doc.basis.size() != doc.dim) {
                throw ParseError(ErrorKind::Syntax, line_no, word_col,
                                 "basis lists " + std::to_string(doc.basis.size()) + " names, expected " +
                                     std::to_string(doc.dim));
            }
        } else if (word.front() == 'J') {
            need_dim();
            const std::size_t col_i = cur.column();
            const std::size_t i = cur.index(doc.dim);
            cur.expect('=');
            std::vector<NlaTerm> terms = cur.terms(doc.dim);
            auto [it, fresh] = pending.try_emplace(word, PendingStructure{line_no, {}});
            if (fresh) {
                it->second.columns.resize(doc.dim);
                structure_order.push_back(word);
            }
            if (terms.size() == 1) {
                const NlaTerm t = terms.front();
                if (t.index == i) {
                    throw ParseError(ErrorKind::JInconsistent, line_no, col_i,
                                     word + " e" + std::to_string(i) + " cannot be a multiple of e" + std::to_string(i));
                }
                assign_column(it->second, t.index, {{-t.coefficient.inverse(), i}}, line_no, col_i, word);
            }
            assign_column(it->second, i, std::move(terms), line_no, col_i, word);
        } else {
            throw ParseError(ErrorKind::Syntax, line_no, word_col, "unknown statement '" + word + "'");
        }
        if (end == text.size()) break;
    }
    if (!have_dim) throw ParseError(ErrorKind::Syntax, line_no == 0 ? 1 : line_no, 1, "missing 'dim'");

    for (const auto& name : structure_order) {
        const PendingStructure& p = pending.at(name);
        NlaStructure s{name, {}};
        for (std::size_t c = 0; c < p.columns.size(); ++c) {
            if (!p.columns[c]) {
                throw ParseError(ErrorKind::NotAlmostComplex, p.first_line, 1,
                                 name + " e" + std::to_string(c + 1) + " is not specified");
            }
            s.columns.push_back(*p.columns[c]);
        }
        try {
            Acs::validate(structure_matrix(s, doc.dim));
        } catch (const Error& e) {
            throw ParseError(e.kind(), p.first_line, 1, name + ": " + e.what());
        }
        doc.structures.push_back(std::move(s));
    }
    return doc;
}

NlaDocument read_nla_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_nla(ss.str());
}

std::string print_nla(const NlaDocument& doc) {
    std::ostringstream out;
    if (doc.name) out << "name " << quote(*doc.name) << '\n';
    if (doc.cite) out << "cite " << quote(*doc.cite) << '\n';
    out << "dim " << doc.dim << '\n';
    if (!doc.basis.empty()) {
        out << "basis";
        for (const auto& b : doc.basis) out << ' ' << b;
        out << '\n';
    }
    for (const auto& b : doc.brackets) out << '[' << b.i << ',' << b.j << "] = " << format_terms(b.terms) << '\n';
    for (const auto& s : doc.structures) {
        for (std::size_t c = 0; c < s.columns.size(); ++c) {
            out << s.name << ' ' << c + 1 << " = " << format_terms(s.columns[c]) << '\n';
        }
    }
    return out.str();
}

LieAlgebra to_algebra(const NlaDocument& doc) {
    LieAlgebra::BracketTable table;
    for (const auto& b : doc.brackets) {
        if (b.terms.empty()) continue;
        Vector v(doc.dim);
        for (const auto& t : b.terms) v[t.index - 1] = t.coefficient;
        table[{b.i - 1, b.j - 1}] = std::move(v);
    }
    return LieAlgebra(doc.dim, table, doc.basis);
}

Acs structure(const NlaDocument& doc, std::string_view name) {
    for (const auto& s : doc.structures) {
        if (s.name == name) return Acs::validate(structure_matrix(s, doc.dim));
    }
    throw Error(ErrorKind::InvalidArgument, "no structure named '" + std::string(name) + "'");
}

NlaDocument make_document(const LieAlgebra& g, const std::vector<std::pair<std::string, Acs>>& structures) {
    NlaDocument doc;
    doc.dim = g.dim();
    for (const auto& [key, v] : g.brackets()) {
        NlaBracket b{key.first + 1, key.second + 1, {}};
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (!v[k].is_zero()) b.terms.push_back({v[k], k + 1});
        }
        doc.brackets.push_back(std::move(b));
    }
    for (const auto& [name, j] : structures) {
        if (j.dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "structure " + name);
        NlaStructure s{name, {}};
        for (std::size_t c = 0; c < j.dim(); ++c) {
            std::vector<NlaTerm> col;
            for (std::size_t r = 0; r < j.dim(); ++r) {
                if (!j.matrix().at(r, c).is_zero()) col.push_back({j.matrix().at(r, c), r + 1});
            }
            s.columns.push_back(std::move(col));
        }
        doc.structures.push_back(std::move(s));
    }
    return doc;
}

std::vector<std::string> basis_labels(const NlaDocument& doc) {
    if (!doc.basis.empty()) return doc.basis;
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= doc.dim; ++k) out.push_back("e" + std::to_string(k));
    return out;
}

}  // namespace nilcx
