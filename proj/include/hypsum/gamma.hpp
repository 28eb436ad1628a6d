#pragma once

#include "hypsum/half_int.hpp"
#include "hypsum/pi_value.hpp"
#include "hypsum/rational.hpp"

namespace hypsum {

/// Exact 1/Gamma(x) at an integer or half-odd integer.
///
/// Positive integers give 1/(x-1)!, nonpositive integers give exact zero (the
/// Gamma pole), and half-odd arguments give a single q * pi^(-1/2) term
/// obtained from Gamma(1/2) = sqrt(pi) and the shift recurrence.
PiVal rgamma_half(const HalfInt& x);

/// Exact Gamma(x); throws PoleError at nonpositive integers.
PiVal gamma_half(const HalfInt& x);

/// Gamma(x + shift) / Gamma(x) for rational x and integer shift. Neither
/// x nor x + shift may be a pole; throws PoleError otherwise.
BigRational gamma_shift_ratio(const BigRational& x, long shift);

struct LogGamma {
    double log_abs;  // ln|Gamma(x)|
    int sign;        // +1 or -1
};

/// ln|Gamma(x)| and sign(Gamma(x)) in double precision, via a Lanczos sum for
/// x >= 1/2 and the reflection formula below. Throws PoleError at
/// nonpositive integers.
LogGamma lgamma_real(double x);

}  // namespace hypsum
