#include "hypsum/pi_value.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hypsum/errors.hpp"

namespace hypsum {

PiVal PiVal::monomial(const BigRational& q, long half_exponent) {
    PiVal v;
    v.add_term(half_exponent, q);
    return v;
}

BigRational PiVal::coefficient(long half_exponent) const {
    const auto it = terms_.find(half_exponent);
    return it == terms_.end() ? BigRational(0) : it->second;
}

void PiVal::add_term(long half_exponent, const BigRational& q) {
    if (q.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(half_exponent, q);
    if (!inserted) {
        it->second += q;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

PiVal& PiVal::operator+=(const PiVal& rhs) {
    if (&rhs == this) {
        return *this += PiVal(rhs);
    }
    for (const auto& [e, q] : rhs.terms_) {
        add_term(e, q);
    }
    return *this;
}

PiVal& PiVal::operator-=(const PiVal& rhs) {
    if (&rhs == this) {
        terms_.clear();
        return *this;
    }
    for (const auto& [e, q] : rhs.terms_) {
        add_term(e, -q);
    }
    return *this;
}

PiVal operator*(const PiVal& a, const PiVal& b) {
    PiVal out;
    for (const auto& [ea, qa] : a.terms_) {
        for (const auto& [eb, qb] : b.terms_) {
            out.add_term(ea + eb, qa * qb);
        }
    }
    return out;
}

PiVal operator-(const PiVal& a) {
    PiVal out;
    for (const auto& [e, q] : a.terms_) {
        out.terms_.emplace(e, -q);
    }
    return out;
}

std::string PiVal::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, q] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << q;
        if (e != 0) {
            os << "*pi^(" << e << "/2)";
        }
    }
    return os.str();
}

PiVal pival_add(const PiVal& a, const PiVal& b) { return a + b; }

PiVal pival_mul(const PiVal& a, const PiVal& b) { return a * b; }

PiVal reciprocal(const PiVal& v) {
    if (!v.is_monomial()) {
        throw std::domain_error("reciprocal of a PiVal requires a single nonzero term, got " +
                                v.to_string());
    }
    const auto& [e, q] = *v.terms().begin();
    return PiVal::monomial(BigRational(1) / q, -e);
}

BigRational pival_as_rational(const PiVal& v) {
    for (const auto& [e, q] : v.terms()) {
        if (e != 0) {
            throw NotRational("value " + v.to_string() + " has a surviving power of pi");
        }
    }
    return v.coefficient(0);
}

std::ostream& operator<<(std::ostream& os, const PiVal& v) { return os << v.to_string(); }

}  // namespace hypsum
