#pragma once

#include <string>
#include <variant>

#include "hypsum/half_int.hpp"
#include "hypsum/pi_value.hpp"
#include "hypsum/rational.hpp"

namespace hypsum {

/// Parameters of a terminating 2F1(a, b; c; z) with a a nonpositive integer.
struct SeriesSpec {
    long a = 0;
    BigRational b;
    BigRational c;
    BigRational z;

    friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

/// Selects the exact (PiVal) or floating (log-Gamma) path of the closed forms.
class EvalMode {
public:
    enum class Kind { Exact, Float };

    EvalMode() = default;
    static EvalMode exact() { return EvalMode(Kind::Exact, 0.0); }
    /// Throws std::invalid_argument unless tolerance > 0.
    static EvalMode floating(double tolerance);

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ == Kind::Exact; }
    double tolerance() const { return tolerance_; }

    /// "exact" or "float:<tol>".
    std::string to_string() const;

    friend bool operator==(const EvalMode&, const EvalMode&) = default;

private:
    EvalMode(Kind kind, double tolerance) : kind_(kind), tolerance_(tolerance) {}

    Kind kind_ = Kind::Exact;
    double tolerance_ = 0.0;
};

/// Exact rational in Exact mode, double in Float mode.
using MasterValue = std::variant<BigRational, double>;

/// sum_{k=0}^{-a} (a)_k (b)_k z^k / ((c)_k k!), accumulated exactly in
/// ascending k. Throws InvalidSpec when a > 0 or c + j = 0 for some j < -a.
BigRational hyp2f1_terminating(const SeriesSpec& spec);

/// Gauss's second summation theorem,
///   2F1(a, b; (a+b+1)/2; 1/2) = Gamma(1/2) Gamma((a+b+1)/2) / (Gamma((a+1)/2) Gamma((b+1)/2)),
/// evaluated exactly. A denominator pole yields zero. Throws NumeratorPole
/// when (a+b+1)/2 is a nonpositive integer, and UnsupportedArgument when the
/// quarter-integer Gammas cannot be paired into a rational ratio.
PiVal gauss_second(const HalfInt& a, const HalfInt& b);

/// Closed form for 2F1(-2n, alpha; 2 alpha + i; 2) as a finite sum over
/// r = 0..i of Gamma ratios and Pochhammer quotients.
///
/// Exact mode needs alpha to be an integer or half-odd integer. Whenever
/// Gamma(1 - 2 alpha - i) or any numerator Gamma sits on a pole the formula
/// is a limit rather than a value and PoleAmbiguity is thrown; this covers
/// alpha = 1/2 for every i. InvalidParams flags a lower parameter or
/// Pochhammer denominator that vanishes.
MasterValue master_even(unsigned long n, const BigRational& alpha, unsigned long i,
                        const EvalMode& mode);

/// Closed form for 2F1(-2n-1, alpha; 2 alpha + i; 2); same contract as
/// master_even.
MasterValue master_odd(unsigned long n, const BigRational& alpha, unsigned long i,
                       const EvalMode& mode);

}  // namespace hypsum
