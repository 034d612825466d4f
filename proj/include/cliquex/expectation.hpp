// expectation.hpp - F_n(k), E[X_{n,p}] and the most popular clique size
//
// F_n(k) = C(n,k) p^C(k,2) (1-p^k)^(n-k) is the expected number of maximal
// k-cliques of G(n,p); the engine evaluates the full profile ln F_n(k) for
// k = 1..n, its log-sum-exp total, and the argmax size, plus an exact
// rational route for small n.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cliquex/errors.hpp"
#include "cliquex/numerics.hpp"
#include "cliquex/rational.hpp"
#include "cliquex/real.hpp"

namespace cliquex {

enum class PMode { rational, log_domain };

struct ModelParams {
    long n = 1;
    PMode mode = PMode::log_domain;
    Real p;                         // always usable (rational p is converted)
    std::optional<Rational> p_exact; // present in rational mode

    static ModelParams log_domain(long n, Real p) {
        validate(n, p);
        return ModelParams{n, PMode::log_domain, std::move(p), std::nullopt};
    }

    // Rational mode keeps p exact; n is capped so that downstream exact
    // arithmetic (and oracle comparisons) stay tractable.
    static ModelParams rational(long n, Rational p, long n_cap = 40) {
        if (p <= 0 || p >= 1) throw DomainError("p must lie strictly inside (0,1)");
        if (n > n_cap) throw ResourceLimitError("rational mode is capped at n <= " + std::to_string(n_cap));
        Real pr = to_real(p);
        validate(n, pr);
        return ModelParams{n, PMode::rational, std::move(pr), std::move(p)};
    }

private:
    static void validate(long n, const Real& p) {
        if (n < 1) throw DomainError("n must be a positive integer");
        if (p.is_nan() || !(p > Real(0L)) || !(p < Real(1L)))
            throw DomainError("p must lie strictly inside (0,1)");
    }
};

// ln F_n(k); propagates domain errors from the numerics kernels.
inline Real clique_term_log(long n, long k, const Real& p) {
    if (n < 1) throw DomainError("n must be a positive integer");
    if (k < 1 || k > n) throw DomainError("k must lie in [1,n]");
    if (p.is_nan() || !(p > Real(0L)) || !(p < Real(1L)))
        throw DomainError("p must lie strictly inside (0,1)");
    const Real ln_p = log(p);
    Real term = log_binomial(n, k, p.precision()) + Real(k * (k - 1) / 2, p.precision()) * ln_p;
    if (k < n) term += Real(n - k) * log1m_exp(Real(k) * ln_p);
    return term;
}

// F_n(k) as an exact rational.
inline Rational clique_term_rational(long n, long k, const Rational& p) {
    if (n < 1 || k < 1 || k > n) throw DomainError("k must lie in [1,n]");
    if (p <= 0 || p >= 1) throw DomainError("p must lie strictly inside (0,1)");
    Rational term(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
    term *= rational_pow(p, static_cast<unsigned long>(k) * (k - 1) / 2);
    term *= rational_pow(1 - rational_pow(p, static_cast<unsigned long>(k)),
                         static_cast<unsigned long>(n - k));
    return term;
}

struct ExpectationProfile {
    long n = 0;
    Real p;
    std::vector<Real> log_terms; // log_terms[k-1] = ln F_n(k)
    Real log_total;
    long argmax_k = 0;

    const Real& log_term(long k) const {
        if (k < 1 || k > n) throw DomainError("k must lie in [1,n]");
        return log_terms[static_cast<std::size_t>(k - 1)];
    }
};

struct ProfileOptions {
    long term_cap = 10'000'000; // refuse profiles larger than this many terms
};

// Index (1-based) of the largest value; ties break toward the smallest index.
inline long argmax_smallest(std::span<const Real> values) {
    if (values.empty()) throw DomainError("argmax of an empty list");
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] > values[best]) best = i;
    return static_cast<long>(best) + 1;
}

// Full profile, always materialized for k = 1..n. The binomial ladder
// ln k! is accumulated once; worst-case accumulated rounding over 1e7 terms
// stays ~1e-30 relative at the default 128-bit precision.
inline ExpectationProfile expectation_profile(const ModelParams& params,
                                              const ProfileOptions& opts = {}) {
    const long n = params.n;
    if (n > opts.term_cap) throw ResourceLimitError("profile term count exceeds configured cap");
    const prec_t prec = params.p.precision();

    const std::vector<Real> lnfact = detail::lnfact_ladder(n, prec);
    const Real ln_p = log(params.p);
    ExpectationProfile out;
    out.n = n;
    out.p = params.p;
    out.log_terms.reserve(static_cast<std::size_t>(n));
    for (long k = 1; k <= n; ++k) {
        Real term = lnfact[static_cast<std::size_t>(n)] - lnfact[static_cast<std::size_t>(k)] -
                    lnfact[static_cast<std::size_t>(n - k)];
        term += Real(k * (k - 1) / 2, prec) * ln_p;
        if (k < n) term += Real(n - k) * log1m_exp(Real(k) * ln_p);
        out.log_terms.push_back(std::move(term));
    }
    out.log_total = log_sum_exp(out.log_terms);
    out.argmax_k = argmax_smallest(std::span<const Real>(out.log_terms.data(), out.log_terms.size()));
    return out;
}

// E[X_{n,p}] = sum_k F_n(k) as an exact rational; n is capped because the
// C(k,2) exponents make the rationals grow quadratically in n.
inline Rational exact_rational_expectation(long n, const Rational& p, long n_cap = 40) {
    if (n < 1) throw DomainError("n must be a positive integer");
    if (p <= 0 || p >= 1) throw DomainError("p must lie strictly inside (0,1)");
    if (n > n_cap)
        throw ResourceLimitError("exact rational expectation is capped at n <= " + std::to_string(n_cap));
    Rational total = 0;
    for (long k = 1; k <= n; ++k) total += clique_term_rational(n, k, p);
    return total;
}

// (ln F_n(k~), ln n + ln F_n(k~)): the log-domain sandwich around ln E[X].
inline std::pair<Real, Real> sandwich_bounds(const ExpectationProfile& profile) {
    const Real& peak = profile.log_term(profile.argmax_k);
    return {peak, log(Real(profile.n, peak.precision())) + peak};
}

} // namespace cliquex
