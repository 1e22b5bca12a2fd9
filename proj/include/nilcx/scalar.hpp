#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace nilcx {

/// Exact rational number in lowest terms with a positive denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(int value) : value_(value) {}
    Scalar(long value) : value_(value) {}
    Scalar(long numerator, long denominator);
    explicit Scalar(mpq_class value);

    /// Accepts "p" or "p/q" with optional leading sign. Throws Error(InvalidArgument).
    static Scalar parse(std::string_view text);

    const mpq_class& raw() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const noexcept { return sgn(value_); }
    std::string numerator() const { return value_.get_num().get_str(); }
    std::string denominator() const { return value_.get_den().get_str(); }
    std::string to_string() const { return value_.get_str(); }

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs) { value_ += rhs.value_; return *this; }
    Scalar& operator-=(const Scalar& rhs) { value_ -= rhs.value_; return *this; }
    Scalar& operator*=(const Scalar& rhs) { value_ *= rhs.value_; return *this; }
    Scalar& operator/=(const Scalar& rhs);

    Scalar operator-() const { return Scalar(mpq_class(-value_)); }

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Gaussian rational re + im*i.
class CScalar {
public:
    CScalar() = default;
    CScalar(int re) : re_(re) {}
    CScalar(Scalar re) : re_(std::move(re)) {}
    CScalar(Scalar re, Scalar im) : re_(std::move(re)), im_(std::move(im)) {}

    static CScalar i() { return CScalar(Scalar(0), Scalar(1)); }

    /// Accepts forms such as "1", "-1/2", "i", "-3/4i", "1+2i", "1/2-i".
    static CScalar parse(std::string_view text);

    const Scalar& re() const noexcept { return re_; }
    const Scalar& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const noexcept { return im_.is_zero(); }
    CScalar conj() const { return CScalar(re_, -im_); }
    CScalar inverse() const;

    /// Canonical text: "0", "1/2", "-i", "3/4i", "1-2i", "1/2+1/3i".
    std::string to_string() const;

    CScalar& operator+=(const CScalar& rhs);
    CScalar& operator-=(const CScalar& rhs);
    CScalar& operator*=(const CScalar& rhs);
    CScalar& operator/=(const CScalar& rhs);
    CScalar operator-() const { return CScalar(-re_, -im_); }

    friend CScalar operator+(CScalar lhs, const CScalar& rhs) { return lhs += rhs; }
    friend CScalar operator-(CScalar lhs, const CScalar& rhs) { return lhs -= rhs; }
    friend CScalar operator*(CScalar lhs, const CScalar& rhs) { return lhs *= rhs; }
    friend CScalar operator/(CScalar lhs, const CScalar& rhs) { return lhs /= rhs; }
    friend bool operator==(const CScalar&, const CScalar&) = default;

private:
    Scalar re_;
    Scalar im_;
};

std::ostream& operator<<(std::ostream& os, const CScalar& z);

}  // namespace nilcx
