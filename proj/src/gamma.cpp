#include "hypsum/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hypsum/combinatorics.hpp"
#include "hypsum/errors.hpp"

namespace hypsum {

namespace {

unsigned long checked_count(const BigInt& value) {
    if (!value.fits_ulong_p()) {
        throw std::length_error("Gamma recurrence length " + value.get_str() + " is too large");
    }
    return value.get_ui();
}

}  // namespace

PiVal rgamma_half(const HalfInt& x) {
    const BigInt& twice = x.twice_value();
    if (x.is_integer()) {
        if (sgn(twice) <= 0) {
            return PiVal();
        }
        const BigInt m = twice / 2;
        return PiVal(BigRational(1) / factorial(checked_count(m - 1)));
    }
    // x = h + 1/2 with h integer.
    BigInt h;
    mpz_fdiv_q_2exp(h.get_mpz_t(), twice.get_mpz_t(), 1);
    if (sgn(h) >= 0) {
        // Gamma(h + 1/2) = (1/2)_h sqrt(pi)
        const BigRational up = pochhammer(BigRational(1, 2), checked_count(h));
        return PiVal::monomial(BigRational(1) / up, -1);
    }
    // Gamma(1/2) = (h + 1/2)_{-h} Gamma(h + 1/2)
    const BigRational down = pochhammer(x.to_rational(), checked_count(-h));
    return PiVal::monomial(down, -1);
}

PiVal gamma_half(const HalfInt& x) {
    if (x.is_pole()) {
        throw PoleError("Gamma has a pole at " + x.to_string());
    }
    return reciprocal(rgamma_half(x));
}

BigRational gamma_shift_ratio(const BigRational& x, long shift) {
    if (is_nonpositive_integer(x) || is_nonpositive_integer(x + BigRational(shift))) {
        throw PoleError("Gamma ratio touches a pole at " + x.to_string());
    }
    if (shift >= 0) {
        return pochhammer(x, static_cast<unsigned long>(shift));
    }
    return BigRational(1) / pochhammer(x + BigRational(shift), static_cast<unsigned long>(-shift));
}

namespace {

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_log_gamma(double x) {
    x -= 1.0;
    double a = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) {
        a += kLanczos[k] / (x + static_cast<double>(k));
    }
    const double t = x + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t + std::log(a);
}

// sin(pi x) with the argument reduced to [-1/2, 1/2] first.
double sin_pi(double x) {
    const double n = std::nearbyint(x);
    const double s = std::sin(std::numbers::pi * (x - n));
    return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

}  // namespace

LogGamma lgamma_real(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("lgamma_real: non-finite argument");
    }
    if (x <= 0.0 && x == std::floor(x)) {
        throw PoleError("lgamma_real: pole at " + std::to_string(x));
    }
    if (x >= 0.5) {
        return {lanczos_log_gamma(x), 1};
    }
    // Gamma(x) Gamma(1 - x) = pi / sin(pi x), and Gamma(1 - x) > 0 here.
    const double s = sin_pi(x);
    return {std::log(std::numbers::pi) - std::log(std::fabs(s)) - lanczos_log_gamma(1.0 - x),
            s < 0.0 ? -1 : 1};
}

}  // namespace hypsum
