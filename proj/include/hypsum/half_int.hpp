#pragma once

#include <optional>
#include <string>

#include "hypsum/rational.hpp"

namespace hypsum {

/// An integer or half-odd integer, stored as twice its value.
class HalfInt {
public:
    HalfInt() = default;

    static HalfInt from_twice(BigInt twice_value) { return HalfInt(std::move(twice_value)); }
    static HalfInt from_integer(const BigInt& value) { return HalfInt(2 * value); }

    /// Empty when x is not a multiple of 1/2.
    static std::optional<HalfInt> from_rational(const BigRational& x);

    const BigInt& twice_value() const { return twice_; }

    bool is_integer() const { return mpz_even_p(twice_.get_mpz_t()) != 0; }
    bool is_half_odd() const { return !is_integer(); }

    /// Pole of Gamma: a nonpositive integer.
    bool is_pole() const { return is_integer() && sgn(twice_) <= 0; }

    BigRational to_rational() const { return BigRational(twice_, BigInt(2)); }
    std::string to_string() const { return to_rational().to_string(); }

    friend HalfInt operator+(const HalfInt& a, const HalfInt& b) {
        return HalfInt(BigInt(a.twice_ + b.twice_));
    }
    friend HalfInt operator-(const HalfInt& a, const HalfInt& b) {
        return HalfInt(BigInt(a.twice_ - b.twice_));
    }
    friend bool operator==(const HalfInt& a, const HalfInt& b) { return a.twice_ == b.twice_; }

private:
    explicit HalfInt(BigInt twice) : twice_(std::move(twice)) {}

    BigInt twice_;
};

/// The value 1/2.
inline HalfInt half() { return HalfInt::from_twice(BigInt(1)); }

}  // namespace hypsum
