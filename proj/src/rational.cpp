#include "hypsum/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hypsum {

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator)
    : value_(numerator, denominator) {
    if (denominator == 0) {
        throw std::domain_error("BigRational: zero denominator");
    }
    value_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("BigRational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
    if (text.empty()) {
        return false;
    }
    std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (start == text.size()) {
        return false;
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            return false;
        }
    }
    std::string digits(text.front() == '+' ? text.substr(1) : text);
    return out.set_str(digits, 10) == 0;
}

}  // namespace

BigRational BigRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    BigInt num;
    BigInt den(1);
    const bool ok = slash == std::string_view::npos
                        ? parse_integer(text, num)
                        : parse_integer(text.substr(0, slash), num) &&
                              parse_integer(text.substr(slash + 1), den);
    if (!ok) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return BigRational(num, den);
}

std::ostream& operator<<(std::ostream& os, const BigRational& x) {
    return os << x.to_string();
}

BigRational pow2(long exponent) {
    BigInt p;
    const unsigned long magnitude = exponent < 0 ? -static_cast<unsigned long>(exponent)
                                                 : static_cast<unsigned long>(exponent);
    mpz_ui_pow_ui(p.get_mpz_t(), 2, magnitude);
    return exponent < 0 ? BigRational(BigInt(1), p) : BigRational(p);
}

BigRational abs(const BigRational& x) {
    return x.sign() < 0 ? -x : x;
}

BigInt floor(const BigRational& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
    return q;
}

bool is_nonpositive_integer(const BigRational& x) {
    return x.is_integer() && x.sign() <= 0;
}

}  // namespace hypsum
