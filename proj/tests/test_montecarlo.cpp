#include <cstdlib>

#include <catch2/catch_amalgamated.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cliquex/expectation.hpp"
#include "cliquex/hypergraph.hpp"
#include "cliquex/montecarlo.hpp"
#include "helpers.hpp"

using namespace cliquex;

TEST_CASE("degenerate probabilities give exact estimates", "[montecarlo]") {
    // p = 1: the complete graph has one maximal clique; every trial counts 1.
    const MCEstimate full = mc_estimate(6, Real(1L), 500, 7);
    REQUIRE(full.mean == Real(1L));
    REQUIRE(full.std_error == Real(0L));

    // p = 0: n isolated vertices, n maximal cliques.
    const MCEstimate empty = mc_estimate(6, Real(0L), 500, 7);
    REQUIRE(empty.mean == Real(6L));
    REQUIRE(empty.std_error == Real(0L));
}

TEST_CASE("estimates are bit-identical across repeated runs", "[montecarlo]") {
    const MCEstimate a = mc_estimate(9, Real(0.5), 4000, 99);
    const MCEstimate b = mc_estimate(9, Real(0.5), 4000, 99);
    REQUIRE(a.mean == b.mean);
    REQUIRE(a.std_error == b.std_error);
    REQUIRE(a.trials == 4000);
    REQUIRE(a.master_seed == 99);

    const MCEstimate c = mc_estimate(9, Real(0.5), 4000, 100);
    REQUIRE(!(a.mean == c.mean));
}

#ifdef _OPENMP
TEST_CASE("estimates are independent of the thread count", "[montecarlo]") {
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const MCEstimate serial = mc_estimate(9, Real(0.5), 4000, 123);
    omp_set_num_threads(saved > 1 ? saved : 4);
    const MCEstimate parallel = mc_estimate(9, Real(0.5), 4000, 123);
    omp_set_num_threads(saved);
    REQUIRE(serial.mean == parallel.mean);
    REQUIRE(serial.std_error == parallel.std_error);
}
#endif

TEST_CASE("estimator is consistent with the exact expectation", "[montecarlo]") {
    const Rational exact = exact_rational_expectation(3, Rational(1, 2)); // = 2
    REQUIRE(exact == Rational(2));
    const MCEstimate est = mc_estimate(3, Real(0.5), 20000, 2024);
    REQUIRE(abs(est.mean - to_real(exact)) <= Real(5L) * est.std_error);
}

TEST_CASE("coverage: 100 repeated experiments stay within five standard errors",
          "[montecarlo]") {
    for (long n : {3L, 6L}) {
        const Real exact = to_real(exact_rational_expectation(n, Rational(1, 2)));
        int misses = 0;
        for (std::uint64_t rep = 0; rep < 100; ++rep) {
            const MCEstimate est = mc_estimate(n, Real(0.5), 2000, 5000 + rep);
            if (abs(est.mean - exact) > Real(5L) * est.std_error) ++misses;
        }
        REQUIRE(misses <= 1);
    }
}

TEST_CASE("single-trial and invalid-trial handling", "[montecarlo]") {
    const MCEstimate one = mc_estimate(5, Real(0.5), 1, 11);
    REQUIRE(one.std_error == Real(0L));
    REQUIRE(one.trials == 1);
    REQUIRE_THROWS_AS(mc_estimate(5, Real(0.5), 0, 11), DomainError);
    REQUIRE_THROWS_AS(mc_estimate(5, Real(1.5), 100, 11), DomainError);
}

TEST_CASE("hypergraph estimator matches its analytic expectation", "[montecarlo]") {
    const HyperModelParams hp(8, 3, Real(0.5));
    const Real expected = exp(hyper_expectation_log(hp));
    const MCEstimate est = mc_estimate(8, 3, Real(0.5), 20000, 31415);
    REQUIRE(abs(est.mean - expected) <= Real(5L) * est.std_error);

    const MCEstimate rerun = mc_estimate(8, 3, Real(0.5), 20000, 31415);
    REQUIRE(est.mean == rerun.mean);

    REQUIRE_THROWS_AS(mc_estimate(8, 9, Real(0.5), 100, 1), DomainError);
}

TEST_CASE("params overloads agree with the flat overloads", "[montecarlo]") {
    const MCEstimate flat = mc_estimate(7, Real(0.4), 1000, 55);
    const MCEstimate viaparams = mc_estimate(ModelParams::log_domain(7, Real(0.4)), 1000, 55);
    REQUIRE(flat.mean == viaparams.mean);

    const MCEstimate hflat = mc_estimate(7, 3, Real(0.4), 1000, 55);
    const MCEstimate hparams = mc_estimate(HyperModelParams(7, 3, Real(0.4)), 1000, 55);
    REQUIRE(hflat.mean == hparams.mean);
}
