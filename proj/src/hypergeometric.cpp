#include "hypsum/hypergeometric.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hypsum/combinatorics.hpp"
#include "hypsum/errors.hpp"
#include "hypsum/gamma.hpp"

namespace hypsum {

EvalMode EvalMode::floating(double tolerance) {
    if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
        throw std::invalid_argument("float tolerance must be positive");
    }
    return EvalMode(Kind::Float, tolerance);
}

std::string EvalMode::to_string() const {
    if (is_exact()) {
        return "exact";
    }
    std::ostringstream os;
    os << "float:" << tolerance_;
    return os.str();
}

BigRational hyp2f1_terminating(const SeriesSpec& spec) {
    if (spec.a > 0) {
        throw InvalidSpec("terminating series needs a <= 0, got " + std::to_string(spec.a));
    }
    const long terms = -spec.a;
    BigRational sum(0);
    BigRational term(1);
    for (long k = 0; k <= terms; ++k) {
        sum += term;
        if (k == terms) {
            break;
        }
        const BigRational lower = spec.c + BigRational(k);
        if (lower.is_zero()) {
            throw InvalidSpec("lower parameter c = " + spec.c.to_string() +
                              " vanishes at k = " + std::to_string(k));
        }
        term *= BigRational(spec.a + k) * (spec.b + BigRational(k)) * spec.z;
        term /= lower * BigRational(k + 1);
    }
    return sum;
}

PiVal gauss_second(const HalfInt& a, const HalfInt& b) {
    const BigRational half_q(1, 2);
    const BigRational ra = a.to_rational();
    const BigRational rb = b.to_rational();
    const BigRational top = (ra + rb + BigRational(1)) * half_q;
    const BigRational left = (ra + BigRational(1)) * half_q;
    const BigRational right = (rb + BigRational(1)) * half_q;

    if (is_nonpositive_integer(top)) {
        throw NumeratorPole("Gamma((a+b+1)/2) has a pole at " + top.to_string());
    }
    if (is_nonpositive_integer(left) || is_nonpositive_integer(right)) {
        return PiVal();
    }

    const PiVal sqrt_pi = PiVal::monomial(BigRational(1), 1);
    const auto top_h = HalfInt::from_rational(top);
    const auto left_h = HalfInt::from_rational(left);
    const auto right_h = HalfInt::from_rational(right);
    if (top_h && left_h && right_h) {
        return sqrt_pi * gamma_half(*top_h) * rgamma_half(*left_h) * rgamma_half(*right_h);
    }
    // Gamma(top)/Gamma(right) is rational when a/2 is an integer, and
    // symmetrically for b.
    const BigRational a_half = ra * half_q;
    const BigRational b_half = rb * half_q;
    if (a_half.is_integer() && left_h && a_half.numerator().fits_slong_p()) {
        return sqrt_pi * PiVal(gamma_shift_ratio(right, a_half.numerator().get_si())) *
               rgamma_half(*left_h);
    }
    if (b_half.is_integer() && right_h && b_half.numerator().fits_slong_p()) {
        return sqrt_pi * PiVal(gamma_shift_ratio(left, b_half.numerator().get_si())) *
               rgamma_half(*right_h);
    }
    throw UnsupportedArgument("Gauss closed form at a = " + a.to_string() + ", b = " +
                              b.to_string() + " needs Gamma at quarter-integers");
}

namespace {

/// Per-parity shape of the closed form. With d = i - r:
///   numerator Gamma   offset - alpha - d/2
///   denominator Gamma offset - d/2
///   Pochhammer        (1 - offset + d/2)_n / (alpha + 1 - offset + d/2)_n
struct MasterShape {
    long upper;          // upper parameter of the 2F1
    BigRational offset;  // 1/2 for the even form, 0 for the odd form
    int sign;
};

struct MasterTerm {
    BigRational gamma_top;
    BigRational gamma_bottom;
    BigRational poch_top;
    BigRational poch_bottom;
};

MasterTerm master_term(const MasterShape& shape, const BigRational& alpha, unsigned long i,
                       unsigned long r) {
    const BigRational d_half(static_cast<long>(i - r), 2);
    const BigRational one_minus = BigRational(1) - shape.offset;
    return {shape.offset - alpha - d_half, shape.offset - d_half, one_minus + d_half,
            alpha + one_minus + d_half};
}

void check_master(const MasterShape& shape, unsigned long n, const BigRational& alpha,
                  unsigned long i) {
    const BigRational lower = BigRational(2) * alpha + BigRational(static_cast<long>(i));
    for (long j = 0; j < -shape.upper; ++j) {
        if ((lower + BigRational(j)).is_zero()) {
            throw InvalidParams("lower parameter 2*alpha + i = " + lower.to_string() +
                                " vanishes inside the series");
        }
    }
    if (is_nonpositive_integer(BigRational(1) - lower)) {
        throw PoleAmbiguity("Gamma(1 - 2*alpha - i) is at a pole for alpha = " +
                            alpha.to_string() + ", i = " + std::to_string(i) +
                            "; the closed form is a limit here");
    }
    if (is_nonpositive_integer(alpha) || is_nonpositive_integer(BigRational(1) - alpha)) {
        throw PoleAmbiguity("Gamma(alpha) Gamma(1 - alpha) is at a pole for alpha = " +
                            alpha.to_string());
    }
    for (unsigned long r = 0; r <= i; ++r) {
        const MasterTerm t = master_term(shape, alpha, i, r);
        if (is_nonpositive_integer(t.gamma_top)) {
            throw PoleAmbiguity("numerator Gamma(" + t.gamma_top.to_string() +
                                ") is at a pole in term r = " + std::to_string(r));
        }
        if (pochhammer(t.poch_bottom, n).is_zero()) {
            throw InvalidParams("Pochhammer denominator (" + t.poch_bottom.to_string() + ")_" +
                                std::to_string(n) + " vanishes");
        }
    }
}

HalfInt as_half_int(const BigRational& x) {
    auto h = HalfInt::from_rational(x);
    if (!h) {
        throw InternalAlgebra("expected a half-integer Gamma argument, got " + x.to_string());
    }
    return *h;
}

BigRational master_exact(const MasterShape& shape, unsigned long n, const BigRational& alpha,
                         unsigned long i) {
    if (!HalfInt::from_rational(alpha)) {
        throw InvalidParams("exact mode needs a half-integer alpha, got " + alpha.to_string());
    }
    const BigRational lower = BigRational(2) * alpha + BigRational(static_cast<long>(i));
    const PiVal prefactor = PiVal(pow2(-lower.numerator().get_si())) *
                            gamma_half(as_half_int(alpha)) *
                            gamma_half(as_half_int(BigRational(1) - alpha)) *
                            rgamma_half(as_half_int(alpha + BigRational(static_cast<long>(i)))) *
                            rgamma_half(as_half_int(BigRational(1) - lower));
    PiVal sum;
    for (unsigned long r = 0; r <= i; ++r) {
        const MasterTerm t = master_term(shape, alpha, i, r);
        const PiVal bottom = rgamma_half(as_half_int(t.gamma_bottom));
        if (bottom.is_zero()) {
            continue;
        }
        BigRational coeff = binomial(i, static_cast<long>(r)) * pochhammer(t.poch_top, n) /
                            pochhammer(t.poch_bottom, n);
        if (r % 2 == 1) {
            coeff = -coeff;
        }
        sum += PiVal(coeff) * gamma_half(as_half_int(t.gamma_top)) * bottom;
    }
    try {
        return BigRational(shape.sign) * pival_as_rational(prefactor * sum);
    } catch (const NotRational& e) {
        throw InternalAlgebra(e.what());
    }
}

double pochhammer_quotient(double top, double bottom, unsigned long n) {
    double q = 1.0;
    for (unsigned long j = 0; j < n; ++j) {
        q *= (top + static_cast<double>(j)) / (bottom + static_cast<double>(j));
    }
    return q;
}

double master_float(const MasterShape& shape, unsigned long n, const BigRational& alpha,
                    unsigned long i) {
    const double a = alpha.to_double();
    const BigRational lower = BigRational(2) * alpha + BigRational(static_cast<long>(i));

    const LogGamma g_alpha = lgamma_real(a);
    const LogGamma g_reflect = lgamma_real((BigRational(1) - alpha).to_double());
    const LogGamma g_shift = lgamma_real((alpha + BigRational(static_cast<long>(i))).to_double());
    const LogGamma g_lower = lgamma_real((BigRational(1) - lower).to_double());
    const double pre_log = -lower.to_double() * std::numbers::ln2 + g_alpha.log_abs +
                           g_reflect.log_abs - g_shift.log_abs - g_lower.log_abs;
    const int pre_sign = shape.sign * g_alpha.sign * g_reflect.sign * g_shift.sign * g_lower.sign;

    double sum = 0.0;
    for (unsigned long r = 0; r <= i; ++r) {
        const MasterTerm t = master_term(shape, alpha, i, r);
        if (is_nonpositive_integer(t.gamma_bottom)) {
            continue;
        }
        const LogGamma top = lgamma_real(t.gamma_top.to_double());
        const LogGamma bottom = lgamma_real(t.gamma_bottom.to_double());
        const int sign = pre_sign * top.sign * bottom.sign * (r % 2 == 1 ? -1 : 1);
        const double magnitude = std::exp(pre_log + top.log_abs - bottom.log_abs);
        sum += sign * binomial(i, static_cast<long>(r)).to_double() * magnitude *
               pochhammer_quotient(t.poch_top.to_double(), t.poch_bottom.to_double(), n);
    }
    return sum;
}

MasterValue master_eval(const MasterShape& shape, unsigned long n, const BigRational& alpha,
                        unsigned long i, const EvalMode& mode) {
    check_master(shape, n, alpha, i);
    if (mode.is_exact()) {
        return master_exact(shape, n, alpha, i);
    }
    return master_float(shape, n, alpha, i);
}

}  // namespace

MasterValue master_even(unsigned long n, const BigRational& alpha, unsigned long i,
                        const EvalMode& mode) {
    const MasterShape shape{-2 * static_cast<long>(n), BigRational(1, 2), 1};
    return master_eval(shape, n, alpha, i, mode);
}

MasterValue master_odd(unsigned long n, const BigRational& alpha, unsigned long i,
                       const EvalMode& mode) {
    const MasterShape shape{-2 * static_cast<long>(n) - 1, BigRational(0), -1};
    return master_eval(shape, n, alpha, i, mode);
}

}  // namespace hypsum
