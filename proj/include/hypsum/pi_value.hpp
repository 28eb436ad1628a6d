#pragma once

/// Exact values of the form  sum_e q_e * pi^(e/2)  with rational q_e.
///
/// Products of Gamma at half-integer arguments stay inside this set: Gamma of
/// an integer is rational and Gamma of a half-odd integer is a rational
/// multiple of sqrt(pi). The representation is a sparse map from the doubled
/// exponent e to its coefficient, with zero coefficients never stored, so two
/// values are equal exactly when their maps are equal.

#include <iosfwd>
#include <map>
#include <string>

#include "hypsum/rational.hpp"

namespace hypsum {

class PiVal {
public:
    using Terms = std::map<long, BigRational>;

    PiVal() = default;
    PiVal(const BigRational& q) { add_term(0, q); }  // NOLINT(google-explicit-constructor)
    PiVal(long q) : PiVal(BigRational(q)) {}         // NOLINT(google-explicit-constructor)

    /// q * pi^(half_exponent / 2).
    static PiVal monomial(const BigRational& q, long half_exponent);

    /// pi itself, i.e. pi^(2/2).
    static PiVal pi() { return monomial(BigRational(1), 2); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    /// Coefficient of pi^(e/2); zero when absent.
    BigRational coefficient(long half_exponent) const;

    std::string to_string() const;

    PiVal& operator+=(const PiVal& rhs);
    PiVal& operator-=(const PiVal& rhs);
    PiVal& operator*=(const PiVal& rhs) { return *this = *this * rhs; }

    friend PiVal operator+(PiVal a, const PiVal& b) { return a += b; }
    friend PiVal operator-(PiVal a, const PiVal& b) { return a -= b; }
    friend PiVal operator*(const PiVal& a, const PiVal& b);
    friend PiVal operator-(const PiVal& a);

    friend bool operator==(const PiVal& a, const PiVal& b) { return a.terms_ == b.terms_; }

private:
    void add_term(long half_exponent, const BigRational& q);

    Terms terms_;
};

PiVal pival_add(const PiVal& a, const PiVal& b);
PiVal pival_mul(const PiVal& a, const PiVal& b);

/// Inverse of a monomial. Throws std::domain_error for zero or multi-term values.
PiVal reciprocal(const PiVal& v);

/// The degree-0 coefficient of a value with no surviving pi-power.
/// Throws NotRational otherwise.
BigRational pival_as_rational(const PiVal& v);

std::ostream& operator<<(std::ostream& os, const PiVal& v);

}  // namespace hypsum
