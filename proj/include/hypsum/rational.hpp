#pragma once

/// Exact rational arithmetic.
///
/// BigRational is a thin value type over GMP's mpq_class. Every instance is
/// canonical: the denominator is positive, numerator and denominator are
/// coprime, and zero is 0/1. Operations never leave an instance
/// uncanonicalized, so equality is structural.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hypsum {

using BigInt = mpz_class;

class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit BigRational(const BigInt& value) : value_(value) {}
    BigRational(const BigInt& numerator, const BigInt& denominator);
    BigRational(long numerator, long denominator)
        : BigRational(BigInt(numerator), BigInt(denominator)) {}

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
    /// input or a zero denominator.
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Nearest double; exact conversion is not possible in general.
    double to_double() const { return value_.get_d(); }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const { return value_.get_str(); }

    const mpq_class& raw() const { return value_; }

    BigRational& operator+=(const BigRational& rhs) { value_ += rhs.value_; return *this; }
    BigRational& operator-=(const BigRational& rhs) { value_ -= rhs.value_; return *this; }
    BigRational& operator*=(const BigRational& rhs) { value_ *= rhs.value_; return *this; }
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
    friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
    friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
    friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
    friend BigRational operator-(const BigRational& x) { return BigRational(mpq_class(-x.value_)); }

    friend bool operator==(const BigRational& lhs, const BigRational& rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit BigRational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& x);

/// 2^exponent for any signed exponent.
BigRational pow2(long exponent);

BigRational abs(const BigRational& x);

/// Largest integer not above x.
BigInt floor(const BigRational& x);

/// True when x is an integer <= 0, i.e. a pole of Gamma.
bool is_nonpositive_integer(const BigRational& x);

}  // namespace hypsum
