#pragma once

#include "hypsum/rational.hpp"

namespace hypsum {

/// C(n, k) for n >= 0; zero when k lies outside [0, n].
BigRational binomial(unsigned long n, long k);

/// Rising factorial x (x+1) ... (x+n-1); (x)_0 = 1 for every x, including 0.
BigRational pochhammer(const BigRational& x, unsigned long n);

/// n! computed as pochhammer(1, n).
inline BigRational factorial(unsigned long n) { return pochhammer(BigRational(1), n); }

}  // namespace hypsum
