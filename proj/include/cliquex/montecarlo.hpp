// montecarlo.hpp - seeded Monte Carlo estimation of E[X_{n,p}] and E[X^(r)]
//
// Reproducibility contract: identical (parameters, trials, master_seed) give a
// bit-identical estimate whatever the thread count. Trial i draws its own seed
// from the splittable schedule, and the census totals are reduced as exact
// integers (sum and sum of squares), so the reduction order cannot matter.
#pragma once

#include <atomic>
#include <cstdint>
#include <exception>

#include "cliquex/cliques.hpp"
#include "cliquex/errors.hpp"
#include "cliquex/expectation.hpp"
#include "cliquex/graph.hpp"
#include "cliquex/hypergraph.hpp"
#include "cliquex/real.hpp"
#include "cliquex/sampling.hpp"

namespace cliquex {

struct MCEstimate {
    Real mean;
    Real std_error; // sample standard deviation / sqrt(trials); 0 when trials = 1
    long long trials = 0;
    std::uint64_t master_seed = 0;
};

namespace detail {

inline Real u128_to_real(unsigned __int128 v, prec_t prec) {
    const Real two64 = pow(Real(2L, prec), 64L);
    return Real(static_cast<unsigned long>(v >> 64), prec) * two64 +
           Real(static_cast<unsigned long>(v), prec);
}

// Runs all trials and folds the exact integer moments into an MCEstimate.
// Exceptions raised inside a trial (census cap, allocation) are captured and
// rethrown after the loop; they must not escape an OpenMP parallel region.
template <typename CountOneTrial>
MCEstimate mc_run(long long trials, std::uint64_t master_seed, CountOneTrial&& count) {
    if (trials < 1) throw DomainError("at least one trial is required");
    std::uint64_t s1 = 0;
    unsigned __int128 s2 = 0;
    std::exception_ptr err = nullptr;
    std::atomic<bool> failed{false};

#ifdef _OPENMP
#pragma omp parallel
    {
        std::uint64_t l1 = 0;
        unsigned __int128 l2 = 0;
#pragma omp for schedule(static) nowait
        for (long long i = 0; i < trials; ++i) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                const std::uint64_t c = static_cast<std::uint64_t>(
                    count(trial_seed(master_seed, static_cast<std::uint64_t>(i))));
                l1 += c;
                l2 += static_cast<unsigned __int128>(c) * c;
            } catch (...) {
#pragma omp critical(cliquex_mc_err)
                {
                    if (!err) err = std::current_exception();
                }
                failed.store(true, std::memory_order_relaxed);
            }
        }
#pragma omp critical(cliquex_mc_reduce)
        {
            s1 += l1;
            s2 += l2;
        }
    }
#else
    for (long long i = 0; i < trials; ++i) {
        try {
            const std::uint64_t c = static_cast<std::uint64_t>(
                count(trial_seed(master_seed, static_cast<std::uint64_t>(i))));
            s1 += c;
            s2 += static_cast<unsigned __int128>(c) * c;
        } catch (...) {
            err = std::current_exception();
            failed.store(true, std::memory_order_relaxed);
            break;
        }
    }
#endif
    if (failed.load()) std::rethrow_exception(err);

    const prec_t prec = Real::default_precision();
    const Real t(trials, prec);
    const Real sum1(static_cast<unsigned long>(s1), prec);
    MCEstimate out;
    out.trials = trials;
    out.master_seed = master_seed;
    out.mean = sum1 / t;
    if (trials == 1) {
        out.std_error = Real(0L, prec);
        return out;
    }
    Real var = (u128_to_real(s2, prec) - sum1 * sum1 / t) / Real(trials - 1, prec);
    if (var < Real(0L)) var = Real(0L, prec); // exact moments; only rounding can dip below
    out.std_error = sqrt(var / t);
    return out;
}

} // namespace detail

// Graph trials. p is closed-interval [0,1] here: the endpoint fixtures are
// legitimate sampler inputs even though the analytic modules exclude them.
inline MCEstimate mc_estimate(long n, const Real& p, long long trials, std::uint64_t master_seed,
                              const CensusOptions& opts = {}) {
    if (n < 1) throw DomainError("n must be a positive integer");
    detail::inclusion_threshold(p); // reject bad p here, not inside the trial loop
    return detail::mc_run(trials, master_seed, [&](std::uint64_t seed) {
        return maximal_cliques(sample_gnp(n, p, seed), opts).total;
    });
}

inline MCEstimate mc_estimate(const ModelParams& params, long long trials,
                              std::uint64_t master_seed, const CensusOptions& opts = {}) {
    return mc_estimate(params.n, params.p, trials, master_seed, opts);
}

// Hypergraph trials; instance constraints (2 <= r <= n <= 64) apply.
inline MCEstimate mc_estimate(long n, int r, const Real& p, long long trials,
                              std::uint64_t master_seed, const CensusOptions& opts = {}) {
    if (n < 1) throw DomainError("n must be a positive integer");
    Hypergraph probe(n, r); // instance-domain validation up front
    (void)probe;
    detail::inclusion_threshold(p);
    return detail::mc_run(trials, master_seed, [&](std::uint64_t seed) {
        return maximal_hypercliques(sample_hypergraph(n, r, p, seed), opts).total;
    });
}

inline MCEstimate mc_estimate(const HyperModelParams& params, long long trials,
                              std::uint64_t master_seed, const CensusOptions& opts = {}) {
    return mc_estimate(params.n, params.r, params.p, trials, master_seed, opts);
}

} // namespace cliquex
