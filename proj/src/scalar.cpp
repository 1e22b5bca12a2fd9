#include "nilcx/scalar.hpp"

#include <cctype>
#include <ostream>

#include "nilcx/error.hpp"

namespace nilcx {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) : value_(numerator, denominator) {
    if (denominator == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return Scalar(mpq_class(n, d));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
    return Scalar(mpq_class(1 / value_));
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (rhs.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

CScalar CScalar::parse(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    const auto fail = [&] {
        return Error(ErrorKind::InvalidArgument, "malformed Gaussian rational '" + std::string(text) + "'");
    };
    if (compact.empty()) throw fail();

    // Split at the last sign that is not in leading position.
    std::size_t split = std::string::npos;
    for (std::size_t k = compact.size(); k-- > 1;) {
        if (compact[k] == '+' || compact[k] == '-') {
            split = k;
            break;
        }
    }
    const auto imaginary = [&](std::string_view part) {
        part.remove_suffix(1);
        if (part.empty() || part == "+") return Scalar(1);
        if (part == "-") return Scalar(-1);
        return Scalar::parse(part);
    };
    try {
        if (compact.back() != 'i') {
            if (split != std::string::npos) throw fail();
            return CScalar(Scalar::parse(compact));
        }
        if (split == std::string::npos) return CScalar(Scalar(0), imaginary(compact));
        const std::string_view all(compact);
        return CScalar(Scalar::parse(all.substr(0, split)), imaginary(all.substr(split)));
    } catch (const Error&) {
        throw fail();
    }
}

CScalar CScalar::inverse() const {
    const Scalar norm = re_ * re_ + im_ * im_;
    if (norm.is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
    return CScalar(re_ / norm, -im_ / norm);
}

std::string CScalar::to_string() const {
    const auto imag_text = [](const Scalar& v) {
        if (v == Scalar(1)) return std::string("i");
        if (v == Scalar(-1)) return std::string("-i");
        return v.to_string() + "i";
    };
    if (im_.is_zero()) return re_.to_string();
    if (re_.is_zero()) return imag_text(im_);
    std::string out = re_.to_string();
    if (im_.sign() > 0) out += "+";
    return out + imag_text(im_);
}

CScalar& CScalar::operator+=(const CScalar& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

CScalar& CScalar::operator-=(const CScalar& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

CScalar& CScalar::operator*=(const CScalar& rhs) {
    Scalar re = re_ * rhs.re_ - im_ * rhs.im_;
    Scalar im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

CScalar& CScalar::operator/=(const CScalar& rhs) { return *this *= rhs.inverse(); }

std::ostream& operator<<(std::ostream& os, const CScalar& z) { return os << z.to_string(); }

}  // namespace nilcx
