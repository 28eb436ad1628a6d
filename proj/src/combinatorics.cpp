#include "hypsum/combinatorics.hpp"

namespace hypsum {

BigRational binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) {
        return BigRational(0);
    }
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), n, static_cast<unsigned long>(k));
    return BigRational(c);
}

BigRational pochhammer(const BigRational& x, unsigned long n) {
    // x = p/q: (x)_n = prod_j (p + j q) / q^n, accumulated over integers so
    // that only the final value is reduced.
    const BigInt p = x.numerator();
    const BigInt q = x.denominator();
    BigInt num(1);
    BigInt factor = p;
    for (unsigned long j = 0; j < n; ++j) {
        num *= factor;
        if (num == 0) {
            return BigRational(0);
        }
        factor += q;
    }
    BigInt den;
    mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), n);
    return BigRational(num, den);
}

}  // namespace hypsum
