#include "hypsum/identities.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "hypsum/combinatorics.hpp"
#include "hypsum/errors.hpp"
#include "hypsum/gamma.hpp"
#include "hypsum/pi_value.hpp"

namespace hypsum {

namespace {

struct NamedIdentity {
    IdentityId::Kind kind;
    std::string_view name;
};

constexpr std::array<NamedIdentity, 11> kNames = {{
    {IdentityId::Kind::KnuthEven, "knuth-even"},
    {IdentityId::Kind::KnuthOdd, "knuth-odd"},
    {IdentityId::Kind::RiordanEven, "riordan-even"},
    {IdentityId::Kind::RiordanOdd, "riordan-odd"},
    {IdentityId::Kind::TheoremEven, "theorem-even"},
    {IdentityId::Kind::TheoremOdd, "theorem-odd"},
    {IdentityId::Kind::CorollaryEven, "corollary-even"},
    {IdentityId::Kind::CorollaryOdd, "corollary-odd"},
    {IdentityId::Kind::MasterEven, "master-even"},
    {IdentityId::Kind::MasterOdd, "master-odd"},
    {IdentityId::Kind::GaussSecond, "gauss-second"},
}};

}  // namespace

std::string_view IdentityId::name() const {
    for (const auto& entry : kNames) {
        if (entry.kind == kind_) {
            return entry.name;
        }
    }
    return "unknown";
}

std::optional<IdentityId> IdentityId::from_name(std::string_view name) {
    for (const auto& entry : kNames) {
        if (entry.name == name) {
            return IdentityId(entry.kind);
        }
    }
    return std::nullopt;
}

const std::vector<IdentityId>& IdentityId::all() {
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> out;
        for (const auto& entry : kNames) {
            out.emplace_back(entry.kind);
        }
        return out;
    }();
    return ids;
}

BigRational knuth_lhs(unsigned long n, unsigned long i) {
    // Scaled by 2^n so every term is an integer:
    //   2^n S = sum_k (-1)^k C(n+i, k+i) C(2k, k) 2^(n-k)
    BigInt total(0);
    BigInt outer;
    BigInt central;
    BigInt term;
    for (unsigned long k = 0; k <= n; ++k) {
        mpz_bin_uiui(outer.get_mpz_t(), n + i, k + i);
        mpz_bin_uiui(central.get_mpz_t(), 2 * k, k);
        term = outer * central;
        mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), n - k);
        if (k % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, n);
    return BigRational(total, scale);
}

Reduction reduce_to_2f1(unsigned long n, unsigned long i) {
    return {binomial(n + i, static_cast<long>(i)),
            SeriesSpec{-static_cast<long>(n), BigRational(1, 2),
                       BigRational(static_cast<long>(i) + 1), BigRational(2)}};
}

BigRational theorem_rhs(unsigned long nu, unsigned long i, Parity parity) {
    const bool odd = parity == Parity::Odd;
    const long shift = static_cast<long>(i);

    // Common factor 2^(2i) i! / (2i)!, times (2nu+1)_i or 2 (2nu+2)_i.
    BigRational scale = pow2(2 * shift) * factorial(i) / factorial(2 * i);
    scale *= odd ? BigRational(2) * pochhammer(BigRational(2 * static_cast<long>(nu) + 2), i)
                 : pochhammer(BigRational(2 * static_cast<long>(nu) + 1), i);

    const BigRational top_base = odd ? BigRational(1) : BigRational(1, 2);
    const BigRational bottom_base = odd ? BigRational(3, 2) : BigRational(1);
    const unsigned long fact_extra = odd ? 1 : 0;

    PiVal sum;
    for (unsigned long r = 0; r <= i; ++r) {
        const long d = static_cast<long>(i - r);
        // 1/Gamma^2 at (1-d)/2 (even) or -d/2 (odd); zero on poles.
        const PiVal rg = rgamma_half(HalfInt::from_twice(BigInt(odd ? -d : 1 - d)));
        if (rg.is_zero()) {
            continue;
        }
        const BigRational d_half(d, 2);
        const BigRational coeff = pow2(-static_cast<long>(r)) * binomial(i, static_cast<long>(r)) *
                                  pochhammer(top_base + d_half, nu) /
                                  (factorial(i - r + fact_extra) *
                                   pochhammer(bottom_base + d_half, nu));
        sum += PiVal(coeff) * rg * rg;
    }
    try {
        return pival_as_rational(PiVal::pi() * PiVal(scale) * sum);
    } catch (const NotRational& e) {
        throw InternalAlgebra(e.what());
    }
}

BigRational corollary_rhs(unsigned long nu, unsigned long i, Parity parity) {
    const long v = static_cast<long>(nu);
    const bool odd = parity == Parity::Odd;
    const auto ratio = [nu](const BigRational& top, long bottom) {
        return pochhammer(top, nu) / pochhammer(BigRational(bottom), nu);
    };
    switch (i) {
        case 0:
            return odd ? BigRational(0) : ratio(BigRational(1, 2), 1);
        case 1:
            return odd ? BigRational(v + 1) * ratio(BigRational(3, 2), 2)
                       : BigRational(2 * v + 1) * ratio(BigRational(1, 2), 1);
        case 2:
            return odd ? BigRational(2) * ratio(BigRational(5, 2), 1)
                       : BigRational(4 * v + 3, 3) * ratio(BigRational(3, 2), 1);
        case 3:
            return odd ? BigRational(8 * v + 15, 5) * ratio(BigRational(5, 2), 1)
                       : BigRational(8 * v + 5, 5) * ratio(BigRational(5, 2), 1);
        default:
            throw UnsupportedShift("no tabulated closed form for shift i = " + std::to_string(i));
    }
}

BigRational knuth_closed_form(unsigned long nu, Parity parity) {
    if (parity == Parity::Odd) {
        return BigRational(0);
    }
    return pow2(-2 * static_cast<long>(nu)) * binomial(2 * nu, static_cast<long>(nu));
}

BigRational riordan_closed_form(unsigned long nu, Parity parity) {
    const long v = static_cast<long>(nu);
    const BigRational central = binomial(2 * nu, v);
    if (parity == Parity::Odd) {
        return pow2(-2 * v - 1) * BigRational(v + 1) * central;
    }
    return pow2(-2 * v) * BigRational(2 * v + 1) * central;
}

bool within_tolerance(double reference, double value, double tolerance) {
    const double diff = std::fabs(value - reference);
    return diff <= std::max(tolerance * std::fabs(reference), kAbsoluteFloor);
}

namespace {

void require_range(const IntRange& range, const char* axis) {
    if (!range.empty() && range.lo < 0) {
        throw DomainError(std::string("grid axis ") + axis + " must be nonnegative");
    }
}

std::vector<GridPoint> enumerate_points(IdentityId identity, const Grid& grid) {
    using Kind = IdentityId::Kind;
    require_range(grid.nu, "nu");
    std::vector<GridPoint> points;
    const auto kind = identity.kind();
    switch (kind) {
        case Kind::KnuthEven:
        case Kind::KnuthOdd:
        case Kind::RiordanEven:
        case Kind::RiordanOdd: {
            const long shift = (kind == Kind::KnuthEven || kind == Kind::KnuthOdd) ? 0 : 1;
            for (long nu = grid.nu.lo; nu <= grid.nu.hi; ++nu) {
                points.push_back({nu, shift, std::nullopt});
            }
            break;
        }
        case Kind::TheoremEven:
        case Kind::TheoremOdd:
        case Kind::CorollaryEven:
        case Kind::CorollaryOdd:
            require_range(grid.i, "i");
            if ((kind == Kind::CorollaryEven || kind == Kind::CorollaryOdd) && !grid.i.empty() &&
                grid.i.hi > 3) {
                throw DomainError("corollary closed forms exist for i in 0..3 only, got i up to " +
                                  std::to_string(grid.i.hi));
            }
            for (long nu = grid.nu.lo; nu <= grid.nu.hi; ++nu) {
                for (long i = grid.i.lo; i <= grid.i.hi; ++i) {
                    points.push_back({nu, i, std::nullopt});
                }
            }
            break;
        case Kind::MasterEven:
        case Kind::MasterOdd:
            require_range(grid.i, "i");
            for (long nu = grid.nu.lo; nu <= grid.nu.hi; ++nu) {
                for (long i = grid.i.lo; i <= grid.i.hi; ++i) {
                    for (const auto& alpha : grid.alpha) {
                        points.push_back({nu, i, alpha});
                    }
                }
            }
            break;
        case Kind::GaussSecond:
            for (const auto& b : grid.alpha) {
                if (!HalfInt::from_rational(b)) {
                    throw DomainError("gauss-second needs half-integer b, got " + b.to_string());
                }
            }
            for (long m = grid.nu.lo; m <= grid.nu.hi; ++m) {
                for (const auto& b : grid.alpha) {
                    points.push_back({m, std::nullopt, b});
                }
            }
            break;
    }
    return points;
}

Value corrupt(const Value& v) {
    if (const auto* q = std::get_if<BigRational>(&v)) {
        return *q + BigRational(1);
    }
    return std::get<double>(v) + 1.0;
}

VerificationReport evaluate_point(IdentityId identity, const GridPoint& point, const Grid& grid,
                                  bool corrupt_rhs) {
    using Kind = IdentityId::Kind;
    const auto kind = identity.kind();
    const unsigned long nu = point.nu ? static_cast<unsigned long>(*point.nu) : 0;
    const unsigned long i = point.i ? static_cast<unsigned long>(*point.i) : 0;

    VerificationReport report{identity, point, BigRational(0), BigRational(0), EvalMode::exact(),
                              false};
    switch (kind) {
        case Kind::KnuthEven:
        case Kind::KnuthOdd:
        case Kind::RiordanEven:
        case Kind::RiordanOdd: {
            const bool odd = kind == Kind::KnuthOdd || kind == Kind::RiordanOdd;
            const Parity parity = odd ? Parity::Odd : Parity::Even;
            report.lhs = knuth_lhs(parity_bound(nu, parity), i);
            report.rhs = (kind == Kind::KnuthEven || kind == Kind::KnuthOdd)
                             ? knuth_closed_form(nu, parity)
                             : riordan_closed_form(nu, parity);
            break;
        }
        case Kind::TheoremEven:
        case Kind::TheoremOdd:
        case Kind::CorollaryEven:
        case Kind::CorollaryOdd: {
            const bool odd = kind == Kind::TheoremOdd || kind == Kind::CorollaryOdd;
            const Parity parity = odd ? Parity::Odd : Parity::Even;
            report.lhs = knuth_lhs(parity_bound(nu, parity), i);
            report.rhs = (kind == Kind::TheoremEven || kind == Kind::TheoremOdd)
                             ? theorem_rhs(nu, i, parity)
                             : corollary_rhs(nu, i, parity);
            break;
        }
        case Kind::MasterEven:
        case Kind::MasterOdd: {
            const bool odd = kind == Kind::MasterOdd;
            const BigRational& alpha = *point.alpha;
            EvalMode mode = grid.mode;
            if (mode.is_exact() && !HalfInt::from_rational(alpha)) {
                mode = EvalMode::floating(kDefaultTolerance);
            }
            const long upper = -static_cast<long>(parity_bound(nu, odd ? Parity::Odd : Parity::Even));
            const BigRational lower = BigRational(2) * alpha + BigRational(static_cast<long>(i));
            try {
                report.lhs = hyp2f1_terminating(SeriesSpec{upper, alpha, lower, BigRational(2)});
                const MasterValue v = odd ? master_odd(nu, alpha, i, mode)
                                          : master_even(nu, alpha, i, mode);
                report.rhs = v;
            } catch (const PoleAmbiguity& e) {
                throw DomainError(std::string(identity.name()) + ": " + e.what());
            } catch (const InvalidParams& e) {
                throw DomainError(std::string(identity.name()) + ": " + e.what());
            } catch (const InvalidSpec& e) {
                throw DomainError(std::string(identity.name()) + ": " + e.what());
            }
            report.mode = mode;
            break;
        }
        case Kind::GaussSecond: {
            const BigRational& b = *point.alpha;
            const HalfInt a_h = HalfInt::from_integer(-BigInt(*point.nu));
            const HalfInt b_h = *HalfInt::from_rational(b);
            const BigRational a(-*point.nu);
            const BigRational c = (a + b + BigRational(1)) / BigRational(2);
            try {
                report.rhs = pival_as_rational(gauss_second(a_h, b_h));
                report.lhs = hyp2f1_terminating(SeriesSpec{-*point.nu, b, c, BigRational(1, 2)});
            } catch (const NumeratorPole& e) {
                throw DomainError(std::string("gauss-second: ") + e.what());
            } catch (const InvalidSpec& e) {
                throw DomainError(std::string("gauss-second: ") + e.what());
            } catch (const UnsupportedArgument& e) {
                throw DomainError(std::string("gauss-second: ") + e.what());
            }
            break;
        }
    }

    if (corrupt_rhs) {
        report.rhs = corrupt(report.rhs);
    }
    if (report.mode.is_exact()) {
        report.matched = std::get<BigRational>(report.lhs) == std::get<BigRational>(report.rhs);
    } else {
        report.matched = within_tolerance(std::get<BigRational>(report.lhs).to_double(),
                                          std::get<double>(report.rhs), report.mode.tolerance());
    }
    return report;
}

}  // namespace

std::vector<VerificationReport> verify(IdentityId identity, const Grid& grid,
                                       const VerifyOptions& options) {
    const std::vector<GridPoint> points = enumerate_points(identity, grid);
    std::vector<std::optional<VerificationReport>> slots(points.size());
    std::vector<std::exception_ptr> errors(points.size());

    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t k = next++; k < points.size(); k = next++) {
            try {
                slots[k] = evaluate_point(identity, points[k], grid, options.corrupt_closed_form);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const unsigned workers = std::max(1u, options.workers);
    if (workers == 1 || points.size() < 2) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }

    std::vector<VerificationReport> reports;
    reports.reserve(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (errors[k]) {
            std::rethrow_exception(errors[k]);
        }
        reports.push_back(std::move(*slots[k]));
    }
    return reports;
}

}  // namespace hypsum
