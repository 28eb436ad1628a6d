#include <doctest.h>

#include <vector>

#include "hypsum/combinatorics.hpp"
#include "hypsum/errors.hpp"
#include "hypsum/identities.hpp"

using namespace hypsum;

namespace {

// Independent oracle: binomials from Pascal's rule, each term a separate
// rational, accumulated in ascending k.
BigRational naive_sum(unsigned n, unsigned i) {
    std::vector<std::vector<BigInt>> t(2 * n + i + 2);
    for (unsigned r = 0; r < t.size(); ++r) {
        t[r].assign(r + 1, BigInt(1));
        for (unsigned k = 1; k < r; ++k) {
            t[r][k] = t[r - 1][k - 1] + t[r - 1][k];
        }
    }
    BigRational sum(0);
    for (unsigned k = 0; k <= n; ++k) {
        BigRational term = BigRational(t[n + i][k + i]) * BigRational(t[2 * k][k]) *
                           pow2(-static_cast<long>(k));
        sum += k % 2 == 0 ? term : -term;
    }
    return sum;
}

}  // namespace

TEST_CASE("knuth_lhs examples") {
    CHECK(knuth_lhs(2, 0) == BigRational(1, 2));
    CHECK(knuth_lhs(1, 0) == BigRational(0));
    CHECK(knuth_lhs(2, 1) == BigRational(3, 2));
    CHECK(knuth_lhs(2, 2) == BigRational(7, 2));
    CHECK(knuth_lhs(0, 5) == BigRational(1));
}

TEST_CASE("knuth_lhs agrees with the naive term-by-term oracle") {
    for (unsigned n = 0; n <= 30; ++n) {
        for (unsigned i = 0; i <= 10; ++i) {
            CHECK(knuth_lhs(n, i) == naive_sum(n, i));
        }
    }
}

TEST_CASE("reduce_to_2f1") {
    const Reduction r20 = reduce_to_2f1(2, 0);
    CHECK(r20.prefactor == BigRational(1));
    CHECK(r20.spec == SeriesSpec{-2, BigRational(1, 2), BigRational(1), BigRational(2)});
    CHECK(r20.prefactor * hyp2f1_terminating(r20.spec) == knuth_lhs(2, 0));

    for (unsigned long i = 0; i <= 5; ++i) {
        const Reduction r = reduce_to_2f1(0, i);
        CHECK(r.prefactor == BigRational(1));
        CHECK(r.prefactor * hyp2f1_terminating(r.spec) == BigRational(1));
    }

    const Reduction r22 = reduce_to_2f1(2, 2);
    CHECK(r22.prefactor == BigRational(6));
    CHECK(r22.spec == SeriesSpec{-2, BigRational(1, 2), BigRational(3), BigRational(2)});
    CHECK(r22.prefactor * hyp2f1_terminating(r22.spec) == BigRational(7, 2));
}

TEST_CASE("theorem_rhs examples") {
    for (unsigned long nu = 0; nu <= 10; ++nu) {
        CHECK(theorem_rhs(nu, 0, Parity::Odd) == BigRational(0));
    }
    CHECK(theorem_rhs(1, 0, Parity::Even) == BigRational(1, 2));
    CHECK(theorem_rhs(1, 1, Parity::Odd) == BigRational(3, 2));
    CHECK(theorem_rhs(1, 1, Parity::Odd) == knuth_lhs(3, 1));
    CHECK(theorem_rhs(1, 2, Parity::Even) == BigRational(7, 2));
}

TEST_CASE("theorem_rhs matches the oracle on a small grid") {
    for (unsigned long nu = 0; nu <= 12; ++nu) {
        for (unsigned long i = 0; i <= 12; ++i) {
            CHECK(theorem_rhs(nu, i, Parity::Even) == knuth_lhs(2 * nu, i));
            CHECK(theorem_rhs(nu, i, Parity::Odd) == knuth_lhs(2 * nu + 1, i));
        }
    }
}

TEST_CASE("corollary_rhs examples") {
    CHECK(corollary_rhs(1, 0, Parity::Even) == BigRational(1, 2));
    CHECK(corollary_rhs(1, 0, Parity::Even) == pow2(-2) * binomial(2, 1));
    CHECK(corollary_rhs(0, 2, Parity::Odd) == BigRational(2));
    CHECK(knuth_lhs(1, 2) == BigRational(2));
    CHECK(corollary_rhs(1, 3, Parity::Even) == BigRational(13, 2));
    CHECK(knuth_lhs(2, 3) == BigRational(13, 2));
    CHECK_THROWS_AS(corollary_rhs(0, 4, Parity::Even), UnsupportedShift);
}

TEST_CASE("classical closed forms") {
    CHECK(knuth_closed_form(1, Parity::Even) == BigRational(1, 2));
    CHECK(knuth_closed_form(7, Parity::Odd) == BigRational(0));
    CHECK(riordan_closed_form(1, Parity::Even) == BigRational(3, 2));
    // The commonly quoted odd shift-1 form is off; the direct sum disagrees.
    CHECK(riordan_closed_form(0, Parity::Odd) == BigRational(1, 2));
    CHECK(knuth_lhs(1, 1) == BigRational(1));
    for (unsigned long nu = 0; nu <= 20; ++nu) {
        const long v = static_cast<long>(nu);
        CHECK(riordan_closed_form(nu, Parity::Odd) != knuth_lhs(2 * nu + 1, 1));
        CHECK(pow2(-2 * v - 1) * BigRational(v + 1) * binomial(2 * nu + 2, v + 1) ==
              knuth_lhs(2 * nu + 1, 1));
    }
}

TEST_CASE("identity names round-trip") {
    for (const IdentityId id : IdentityId::all()) {
        const auto back = IdentityId::from_name(id.name());
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(IdentityId::from_name("nope").has_value());
}

TEST_SUITE("verify") {
    TEST_CASE("theorem-even small grid") {
        const Grid grid{{0, 3}, {0, 2}, {}, EvalMode::exact()};
        const auto reports = verify(IdentityId::Kind::TheoremEven, grid);
        REQUIRE(reports.size() == 12);
        for (const auto& r : reports) {
            CHECK(r.matched);
        }
        CHECK(*reports[0].point.nu == 0);
        CHECK(*reports[0].point.i == 0);
        CHECK(*reports[1].point.i == 1);
        CHECK(*reports[3].point.nu == 1);
    }

    TEST_CASE("knuth-odd reports zeros") {
        const auto reports = verify(IdentityId::Kind::KnuthOdd, Grid{{0, 5}, {}, {}, {}});
        REQUIRE(reports.size() == 6);
        for (const auto& r : reports) {
            CHECK(std::get<BigRational>(r.lhs).is_zero());
            CHECK(std::get<BigRational>(r.rhs).is_zero());
            CHECK(r.matched);
        }
    }

    TEST_CASE("empty grid") {
        CHECK(verify(IdentityId::Kind::TheoremOdd, Grid{}).empty());
        CHECK(verify(IdentityId::Kind::MasterEven, Grid{{0, 3}, {0, 3}, {}, {}}).empty());
    }

    TEST_CASE("domain errors") {
        CHECK_THROWS_AS(verify(IdentityId::Kind::CorollaryEven, Grid{{0, 2}, {0, 7}, {}, {}}),
                        DomainError);
        CHECK_THROWS_AS(verify(IdentityId::Kind::TheoremEven, Grid{{-1, 2}, {0, 1}, {}, {}}),
                        DomainError);
        CHECK_THROWS_AS(
            verify(IdentityId::Kind::MasterOdd, Grid{{0, 2}, {0, 1}, {BigRational(1, 2)}, {}}),
            DomainError);
        CHECK_THROWS_AS(
            verify(IdentityId::Kind::GaussSecond, Grid{{0, 2}, {}, {BigRational(1, 3)}, {}}),
            DomainError);
    }

    TEST_CASE("riordan-odd is flagged") {
        const auto reports = verify(IdentityId::Kind::RiordanOdd, Grid{{0, 4}, {}, {}, {}});
        for (const auto& r : reports) {
            CHECK_FALSE(r.matched);
            CHECK(*r.point.i == 1);
        }
    }

    TEST_CASE("master grid switches to float at generic alpha") {
        const Grid grid{{0, 2}, {0, 3}, {BigRational(1, 3), BigRational(-7, 2)}, EvalMode::exact()};
        const auto reports = verify(IdentityId::Kind::MasterEven, grid);
        REQUIRE(reports.size() == 24);
        for (const auto& r : reports) {
            CHECK(r.matched);
            const bool generic = *r.point.alpha == BigRational(1, 3);
            CHECK(r.mode.is_exact() == !generic);
        }
    }

    TEST_CASE("gauss-second grid") {
        const Grid grid{{0, 6}, {}, {BigRational(1, 2), BigRational(3, 2), BigRational(7, 2)}, {}};
        const auto reports = verify(IdentityId::Kind::GaussSecond, grid);
        CHECK(reports.size() == 21);
        for (const auto& r : reports) {
            CHECK(r.matched);
        }
    }

    TEST_CASE("worker count does not change results") {
        const Grid grid{{0, 8}, {0, 6}, {}, {}};
        const auto one = verify(IdentityId::Kind::TheoremOdd, grid, {1, false});
        const auto many = verify(IdentityId::Kind::TheoremOdd, grid, {6, false});
        REQUIRE(one.size() == many.size());
        for (std::size_t k = 0; k < one.size(); ++k) {
            CHECK(one[k].point.nu == many[k].point.nu);
            CHECK(one[k].point.i == many[k].point.i);
            CHECK(one[k].lhs == many[k].lhs);
            CHECK(one[k].rhs == many[k].rhs);
        }
    }

    TEST_CASE("corrupted closed forms never match") {
        const auto reports =
            verify(IdentityId::Kind::TheoremEven, Grid{{0, 3}, {0, 3}, {}, {}}, {2, true});
        for (const auto& r : reports) {
            CHECK_FALSE(r.matched);
        }
    }
}
