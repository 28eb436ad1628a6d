#include "hypsum/half_int.hpp"

namespace hypsum {

std::optional<HalfInt> HalfInt::from_rational(const BigRational& x) {
    const BigInt den = x.denominator();
    if (den == 1) {
        return from_integer(x.numerator());
    }
    if (den == 2) {
        return from_twice(x.numerator());
    }
    return std::nullopt;
}

}  // namespace hypsum
