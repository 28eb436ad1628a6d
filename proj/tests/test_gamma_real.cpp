#include <doctest.h>

#include <cmath>

#include "hypsum/errors.hpp"
#include "hypsum/gamma.hpp"

using namespace hypsum;

TEST_CASE("lgamma_real reference values") {
    const LogGamma one = lgamma_real(1.0);
    CHECK(std::fabs(one.log_abs) < 1e-14);
    CHECK(one.sign == 1);

    const LogGamma half = lgamma_real(0.5);
    CHECK(std::fabs(half.log_abs - 0.572364942924700087) < 1e-13);
    CHECK(half.sign == 1);

    const LogGamma neg_half = lgamma_real(-0.5);
    CHECK(std::fabs(neg_half.log_abs - 1.265512123484645396) < 1e-13);
    CHECK(neg_half.sign == -1);

    // mpmath references
    CHECK(std::fabs(lgamma_real(1.0 / 3.0).log_abs - 0.985420646927767069) < 1e-13);
    const LogGamma neg = lgamma_real(-7.0 / 3.0);
    CHECK(std::fabs(neg.log_abs - 0.266782630976648719) < 1e-13);
    CHECK(neg.sign == -1);
    CHECK(std::fabs(lgamma_real(100.0).log_abs - 359.134205369575398776) < 359.13 * 1e-13);
    const LogGamma far = lgamma_real(-99.5);
    CHECK(std::fabs(far.log_abs + 360.290810581928221381) < 360.29 * 1e-12);
    CHECK(far.sign == 1);
    CHECK(std::fabs(lgamma_real(-0.001).log_abs - 6.908333317515028432) < 1e-12);
}

TEST_CASE("lgamma_real agrees with the C library to 12 digits on [-100, 100]") {
    int count = 0;
    for (double x = -99.95; x <= 100.0; x += 0.0731) {
        if (x <= 0.0 && std::fabs(x - std::nearbyint(x)) < 1e-6) {
            continue;
        }
        const LogGamma ours = lgamma_real(x);
        const double ref = std::lgamma(x);
        const double ref_gamma = std::tgamma(x);
        CHECK_MESSAGE(std::fabs(ours.log_abs - ref) <= 1e-12 * std::max(1.0, std::fabs(ref)),
                      "x = " << x);
        if (ref_gamma != 0.0 && std::isfinite(ref_gamma)) {
            CHECK_MESSAGE(ours.sign == (ref_gamma < 0 ? -1 : 1), "x = " << x);
        }
        ++count;
    }
    CHECK(count > 2000);
}

TEST_CASE("lgamma_real poles") {
    for (double x : {0.0, -1.0, -2.0, -50.0}) {
        CHECK_THROWS_AS(lgamma_real(x), PoleError);
    }
    CHECK_NOTHROW(lgamma_real(-1.0000001));
}
