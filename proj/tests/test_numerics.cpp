#include <algorithm>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "cliquex/numerics.hpp"
#include "cliquex/rational.hpp"
#include "helpers.hpp"

using namespace cliquex;
using cliquex::testutil::abs_diff;
using cliquex::testutil::rel_diff;

TEST_CASE("log_binomial matches exact binomial coefficients up to n = 60", "[numerics]") {
    for (long n = 0; n <= 60; ++n) {
        for (long k = 0; k <= n; ++k) {
            const Real lb = log_binomial(n, k);
            const Real exact = to_real(binomial(static_cast<unsigned long>(n),
                                                static_cast<unsigned long>(k)),
                                       256);
            REQUIRE(rel_diff(exp(lb.at_precision(256)), exact) < 1e-12);
        }
    }
    REQUIRE(log_binomial(0, 0) == Real(0L));
}

TEST_CASE("log_binomial symmetry k <-> n-k is exact as computed", "[numerics]") {
    for (long n : {5L, 17L, 31L, 60L}) {
        for (long k = 0; k <= n; ++k) {
            REQUIRE(log_binomial(n, k) == log_binomial(n, n - k));
        }
    }
}

TEST_CASE("log_binomial rejects out-of-range arguments", "[numerics]") {
    REQUIRE_THROWS_AS(log_binomial(5, -1), DomainError);
    REQUIRE_THROWS_AS(log_binomial(5, 6), DomainError);
    REQUIRE_THROWS_AS(log_binomial(Real(5L), Real(-1L)), DomainError);
    REQUIRE_THROWS_AS(log_binomial(Real(5L), Real(6L)), DomainError);
    REQUIRE(log_binomial(Real(5L), Real(2.5)).is_finite());
}

TEST_CASE("log1m_exp agrees with exact rational references", "[numerics]") {
    // y = ln(2^-j): ln(1 - e^y) = ln((2^j - 1)/2^j). And the mirrored points
    // y = ln(1 - 2^-j) near zero, where log1m_exp must recover -j ln 2.
    for (unsigned long j = 1; j <= 40; ++j) {
        BigInt pow2 = 1;
        pow2 <<= j;
        const Rational pj(1, pow2);
        const Rational qj(pow2 - 1, pow2);

        const Real y1 = log(to_real(pj));
        const Real want1 = log(to_real(qj));
        REQUIRE(rel_diff(log1m_exp(y1), want1) < 1e-13);

        const Real y2 = log(to_real(qj));
        const Real want2 = log(to_real(pj));
        REQUIRE(rel_diff(log1m_exp(y2), want2) < 1e-13);
    }
}

TEST_CASE("log1m_exp frozen deep-tail value at y = -40", "[numerics]") {
    const Real want = Real::from_string("-4.24835425529158900435349172208573372663163e-18");
    REQUIRE(rel_diff(log1m_exp(Real(-40L)), want) < 1e-30);
}

TEST_CASE("log1m_exp edge behavior", "[numerics]") {
    REQUIRE(log1m_exp(Real(0L)).is_neg_infinity());
    REQUIRE(log1m_exp(Real::neg_infinity()) == Real(0L));
    REQUIRE_THROWS_AS(log1m_exp(Real(0.5)), DomainError);
    REQUIRE_THROWS_AS(log1m_exp(Real(1e-30)), DomainError);
}

TEST_CASE("log_sum_exp identities", "[numerics]") {
    const Real x = Real::from_string("2.5");
    REQUIRE(log_sum_exp(std::vector<Real>{x}) == x);

    const Real two = log_sum_exp(std::vector<Real>{x, x});
    REQUIRE(rel_diff(two, x + log(Real(2L))) < 1e-30);

    const Real ln2 = log(Real(2L));
    const Real ln3 = log(Real(3L));
    REQUIRE(rel_diff(log_sum_exp(std::vector<Real>{ln2, ln3}), log(Real(5L))) < 1e-30);

    // A -inf entry is an exact zero summand and cannot perturb the result.
    REQUIRE(log_sum_exp(std::vector<Real>{Real::neg_infinity(), ln2}) == ln2);

    REQUIRE(log_sum_exp(std::vector<Real>{Real::neg_infinity(), Real::neg_infinity()})
                .is_neg_infinity());
    REQUIRE_THROWS_AS(log_sum_exp(std::vector<Real>{}), DomainError);
    REQUIRE_THROWS_AS(log_sum_exp(std::vector<Real>{Real(0.0 / 0.0)}), DomainError);
}

TEST_CASE("log_sum_exp is permutation invariant and within the max bound", "[numerics]") {
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> dist(-50.0, 50.0);
    std::vector<Real> v;
    for (int i = 0; i < 200; ++i) v.push_back(Real(dist(rng)));
    v.push_back(v[3]);
    v.push_back(v[7]);
    v.push_back(Real::neg_infinity());

    const Real r0 = log_sum_exp(v);
    Real mx = v[0];
    for (const Real& t : v) mx = max(mx, t);
    REQUIRE(r0 >= mx);
    REQUIRE(r0 <= mx + log(Real(static_cast<long>(v.size()))) + Real(1e-30));

    for (int s = 0; s < 10; ++s) {
        std::shuffle(v.begin(), v.end(), rng);
        REQUIRE(log_sum_exp(v) == r0);
    }
}

TEST_CASE("lnfact ladder tracks lngamma", "[numerics]") {
    const auto ladder = detail::lnfact_ladder(500, 128);
    REQUIRE(ladder.size() == 501);
    REQUIRE(ladder[0] == Real(0L));
    REQUIRE(ladder[1] == Real(0L));
    for (long i : {2L, 5L, 100L, 499L, 500L}) {
        REQUIRE(rel_diff(ladder[i], lngamma(Real(i + 1, 256))) < 1e-33);
    }
}

TEST_CASE("lambert_w0 fixed points and frozen value", "[numerics]") {
    REQUIRE(lambert_w0(Real(0L)) == Real(0L));
    REQUIRE(rel_diff(lambert_w0(exp(Real(1L))), Real(1L)) < 1e-30);

    const Real w1_frozen =
        Real::from_string("5.67143290409783872999968662210355549753816e-01");
    REQUIRE(rel_diff(lambert_w0(Real(1L)), w1_frozen) < 1e-30);
}

TEST_CASE("lambert_w0 agrees with an independent bisection", "[numerics]") {
    // Solve w e^w = x on [0, x] by plain bisection at higher working precision.
    auto bisect = [](const Real& x) {
        Real lo(0L, 256), hi = max(Real(1L, 256), x.at_precision(256));
        for (int i = 0; i < 300; ++i) {
            const Real mid = (lo + hi) / 2L;
            if (mid * exp(mid) - x.at_precision(256) > Real(0L))
                hi = mid;
            else
                lo = mid;
        }
        return (lo + hi) / 2L;
    };
    for (double xd : {0.25, 1.0, 3.5, 100.0}) {
        const Real x(xd);
        REQUIRE(rel_diff(lambert_w0(x), bisect(x)) < 1e-35);
    }
}

TEST_CASE("lambert_w0 satisfies w e^w = x across the domain", "[numerics]") {
    std::vector<Real> xs = {Real(-0.367879441171442), Real(-0.3), Real(-0.1), Real(-1e-8),
                            Real(1e-8),  Real(0.5),  Real(1L),  Real(2.718281828459045),
                            Real(10L),   Real(1000L), Real(1000000L)};
    xs.push_back(-exp(Real(-1L)) + Real(1e-20));
    xs.push_back(-exp(Real(-1L)) * (Real(1L) - Real(1e-20)));
    for (const Real& x : xs) {
        const Real w = lambert_w0(x);
        const Real resid = abs(w * exp(w) - x);
        const Real bound = Real(1e-12) * max(Real(1L), abs(x));
        REQUIRE(resid <= bound);
    }
    REQUIRE_THROWS_AS(lambert_w0(Real(-0.4)), DomainError);
}
