#include "nilcx/equation_text.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "nilcx/error.hpp"
#include "nilcx/nla.hpp"

namespace nilcx {

namespace {

class Cursor {
public:
    Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char raw_peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    std::size_t column() const { return pos_ + 1; }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }
    bool consume_word(std::string_view w) {
        skip_space();
        if (text_.substr(pos_, w.size()) != w) return false;
        pos_ += w.size();
        return true;
    }

    /// Unsigned integer directly at the cursor (no leading space).
    std::size_t number(std::size_t low, std::size_t high, ErrorKind range_kind) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (start == pos_) fail("expected a number");
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        (void)ptr;
        if (ec != std::errc() || value < low || value > high) {
            throw ParseError(range_kind, line_, start + 1,
                             "value " + std::string(text_.substr(start, pos_ - start)) + " outside " +
                                 std::to_string(low) + ".." + std::to_string(high));
        }
        return value;
    }

    std::string_view rest() {
        skip_space();
        std::string_view r = text_.substr(pos_);
        pos_ = text_.size();
        while (!r.empty() && (r.back() == ' ' || r.back() == '\t' || r.back() == '\r')) r.remove_suffix(1);
        return r;
    }

    /// Text up to the matching ')'.
    std::string_view until_close() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
        if (pos_ >= text_.size()) fail("missing ')'");
        std::string_view inside = text_.substr(start, pos_ - start);
        ++pos_;
        return inside;
    }

    void expect_end() {
        if (!at_end()) fail("unexpected trailing text");
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(ErrorKind::Syntax, line_, column(), message);
    }
    std::size_t line() const { return line_; }

private:
    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

ComplexTwoForm parse_form(Cursor& cur, std::size_t n) {
    ComplexTwoForm form(n);
    if (cur.peek() == '0') {
        cur.consume('0');
        if (cur.at_end()) return form;
        cur.fail("'0' must stand alone");
    }
    bool first = true;
    while (!cur.at_end()) {
        bool negative = false;
        if (cur.consume('+')) {
        } else if (cur.consume('-')) {
            negative = true;
        } else if (!first) {
            cur.fail("expected '+' or '-' between terms");
        }
        first = false;
        CScalar c(1);
        if (cur.peek() == '(') {
            cur.consume('(');
            const std::size_t col = cur.column();
            const std::string_view inside = cur.until_close();
            try {
                c = CScalar::parse(inside);
            } catch (const Error&) {
                throw ParseError(ErrorKind::Syntax, cur.line(), col, "malformed coefficient '" + std::string(inside) + "'");
            }
        }
        if (negative) c = -c;
        cur.expect('w');
        const bool bar_a = cur.raw_peek() == '-';
        if (bar_a) cur.consume('-');
        const std::size_t a = cur.number(1, n, ErrorKind::IndexOutOfRange) - 1;
        if (cur.raw_peek() != '^') cur.fail("expected '^'");
        cur.consume('^');
        const bool bar_b = cur.raw_peek() == '-';
        if (bar_b) cur.consume('-');
        const std::size_t b = cur.number(1, n, ErrorKind::IndexOutOfRange) - 1;
        if (!bar_a && !bar_b) form.add20(a, b, c);
        else if (!bar_a && bar_b) form.add11(a, b, c);
        else if (bar_a && !bar_b) form.add11(b, a, -c);
        else form.add02(a, b, c);
    }
    return form;
}

std::string term(const CScalar& c, std::size_t a, std::size_t b, bool bar_a, bool bar_b) {
    return "(" + c.to_string() + ") w" + (bar_a ? "-" : "") + std::to_string(a + 1) + "^" + (bar_b ? "-" : "") +
           std::to_string(b + 1);
}

}  // namespace

Pairing parse_pairing(std::string_view text) {
    Pairing out;
    std::size_t pos = 0;
    const auto fail = [&] { return Error(ErrorKind::BadPairing, "malformed pairing '" + std::string(text) + "'"); };
    const auto number = [&]() -> std::size_t {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, v);
        (void)ptr;
        if (start == pos || ec != std::errc() || v == 0) throw fail();
        while (pos < text.size() && text[pos] == ' ') ++pos;
        return v - 1;
    };
    while (true) {
        const std::size_t x = number();
        if (pos >= text.size() || text[pos] != ',') throw fail();
        ++pos;
        const std::size_t y = number();
        out.emplace_back(x, y);
        if (pos >= text.size()) break;
        if (text[pos] != ';') throw fail();
        ++pos;
    }
    return out;
}

std::string format_pairing(const Pairing& pairing) {
    std::string out;
    for (auto [x, y] : pairing) {
        if (!out.empty()) out += ';';
        out += std::to_string(x + 1) + "," + std::to_string(y + 1);
    }
    return out;
}

EquationDocument parse_equations(std::string_view text) {
    std::optional<std::size_t> dim;
    std::optional<Pairing> pairing;
    std::size_t pairing_line = 0;
    ComplexEquations eqs;
    std::vector<bool> given;
    std::map<std::size_t, std::pair<ComplexTwoForm, std::size_t>> conjugates;

    std::size_t line_no = 0;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        const std::size_t end = std::min(text.find('\n', offset), text.size());
        Cursor cur(strip_comment(text.substr(offset, end - offset)), ++line_no);
        offset = end + 1;
        if (!cur.at_end()) {
            if (cur.consume_word("dim")) {
                if (dim) cur.fail("'dim' given twice");
                if (cur.peek() < '0' || cur.peek() > '9') cur.fail("expected a number");
                const std::size_t col = cur.column();
                const std::size_t d = cur.number(2, kMaxNlaDim, ErrorKind::Syntax);
                if (d % 2 != 0) throw ParseError(ErrorKind::Syntax, line_no, col, "dimension must be even");
                cur.expect_end();
                dim = d;
                eqs = ComplexEquations(d / 2);
                given.assign(d / 2, false);
            } else if (cur.consume_word("pairing")) {
                if (pairing) cur.fail("'pairing' given twice");
                const std::size_t col = cur.column();
                try {
                    pairing = parse_pairing(cur.rest());
                } catch (const Error& e) {
                    throw ParseError(ErrorKind::BadPairing, line_no, col, e.what());
                }
                pairing_line = line_no;
            } else if (cur.consume_word("dw")) {
                if (!dim) cur.fail("'dim' must come first");
                const std::size_t n = *dim / 2;
                const bool bar = cur.raw_peek() == '-';
                if (bar) cur.consume('-');
                const std::size_t col = cur.column();
                const std::size_t a = cur.number(1, n, ErrorKind::IndexOutOfRange) - 1;
                cur.expect('=');
                ComplexTwoForm form = parse_form(cur, n);
                if (bar) {
                    if (conjugates.count(a)) {
                        throw ParseError(ErrorKind::Syntax, line_no, col, "dw-" + std::to_string(a + 1) + " given twice");
                    }
                    conjugates.emplace(a, std::make_pair(std::move(form), line_no));
                } else {
                    if (given[a]) throw ParseError(ErrorKind::Syntax, line_no, col, "dw" + std::to_string(a + 1) + " given twice");
                    given[a] = true;
                    eqs.d[a] = std::move(form);
                }
            } else {
                cur.fail("expected 'dim', 'pairing' or an equation");
            }
        }
        if (end == text.size()) break;
    }
    if (!dim) throw ParseError(ErrorKind::Syntax, line_no == 0 ? 1 : line_no, 1, "missing 'dim'");
    for (const auto& [a, entry] : conjugates) {
        if (entry.first != eqs.d[a].conj()) {
            throw ParseError(ErrorKind::ConjugationInconsistent, entry.second, 1,
                             "dw-" + std::to_string(a + 1) + " is not the conjugate of dw" + std::to_string(a + 1));
        }
    }
    if (pairing) {
        try {
            validate_pairing(*pairing, *dim);
        } catch (const Error& e) {
            throw ParseError(ErrorKind::BadPairing, pairing_line, 1, e.what());
        }
    }
    return {std::move(eqs), std::move(pairing)};
}

EquationDocument read_equations_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_equations(ss.str());
}

std::string format_two_form(const ComplexTwoForm& form) {
    const std::size_t n = form.n_half();
    std::vector<std::string> terms;
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
            if (!form.p20(b, c).is_zero()) terms.push_back(term(form.p20(b, c), b, c, false, false));
        }
    }
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
            if (!form.p11(b, c).is_zero()) terms.push_back(term(form.p11(b, c), b, c, false, true));
        }
    }
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
            if (!form.p02(b, c).is_zero()) terms.push_back(term(form.p02(b, c), b, c, true, true));
        }
    }
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (std::size_t k = 1; k < terms.size(); ++k) out += " + " + terms[k];
    return out;
}

std::string print_equations(const EquationDocument& doc) {
    std::ostringstream out;
    out << "dim " << 2 * doc.equations.n_half << '\n';
    if (doc.pairing) out << "pairing " << format_pairing(*doc.pairing) << '\n';
    for (std::size_t a = 0; a < doc.equations.d.size(); ++a) {
        out << "dw" << a + 1 << " = " << format_two_form(doc.equations.d[a]) << '\n';
    }
    return out.str();
}

}  // namespace nilcx
