// hypergraph.hpp - the r-uniform generalization
//
// E[X^(r)] = sum_k C(n,k) p^C(k,r) (1-p^C(k,r-1))^(n-k) with the convention
// C(a,b) = 0 for a < b, which makes the sum total over all k: vertex sets
// smaller than r-1 are never maximal (their 1-p^0 = 0 factor kills the term)
// except for the whole vertex set, which is complete vacuously. r > n is
// therefore meaningful here, unlike for sampled instances.
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "cliquex/errors.hpp"
#include "cliquex/expectation.hpp"
#include "cliquex/numerics.hpp"
#include "cliquex/rational.hpp"
#include "cliquex/real.hpp"

namespace cliquex {

struct HyperModelParams {
    long n = 1;
    int r = 2;
    Real p;

    HyperModelParams(long n_, int r_, Real p_) : n(n_), r(r_), p(std::move(p_)) {
        if (n < 1) throw DomainError("n must be a positive integer");
        if (r < 2) throw DomainError("uniformity r must be at least 2");
        if (p.is_nan() || !(p > Real(0L)) || !(p < Real(1L)))
            throw DomainError("p must lie strictly inside (0,1)");
    }
};

// ln of the k-th summand. Negative-infinity sentinel exactly when k < r-1 and
// k < n; at k = n the empty last factor is 1 whatever C(n,r-1) is.
inline Real hyper_term_log(const HyperModelParams& params, long k) {
    if (k < 1 || k > params.n) throw DomainError("k must lie in [1,n]");
    const prec_t prec = params.p.precision();
    if (k < params.r - 1 && k < params.n) return Real::neg_infinity(prec);
    const Real ln_p = log(params.p);
    Real term = log_binomial(params.n, k, prec);
    term += mul_bigint(ln_p, binomial(static_cast<unsigned long>(k),
                                      static_cast<unsigned long>(params.r)));
    if (k < params.n)
        term += Real(params.n - k) *
                log1m_exp(mul_bigint(ln_p, binomial(static_cast<unsigned long>(k),
                                                    static_cast<unsigned long>(params.r - 1))));
    return term;
}

// ln E[X^(r)]. Shares the log-factorial ladder with expectation_profile, so at
// r = 2 the two sums are computed identically term for term.
inline Real hyper_expectation_log(const HyperModelParams& params, const ProfileOptions& opts = {}) {
    const long n = params.n;
    if (n > opts.term_cap) throw ResourceLimitError("hypergraph term count exceeds configured cap");
    const prec_t prec = params.p.precision();
    const Real ln_p = log(params.p);
    const std::vector<Real> lnfact = detail::lnfact_ladder(n, prec);

    std::vector<Real> terms;
    terms.reserve(static_cast<std::size_t>(n));
    for (long k = 1; k <= n; ++k) {
        if (k < params.r - 1 && k < n) {
            terms.push_back(Real::neg_infinity(prec));
            continue;
        }
        Real term = lnfact[static_cast<std::size_t>(n)] - lnfact[static_cast<std::size_t>(k)] -
                    lnfact[static_cast<std::size_t>(n - k)];
        term += mul_bigint(ln_p, binomial(static_cast<unsigned long>(k),
                                          static_cast<unsigned long>(params.r)));
        if (k < n)
            term += Real(n - k) *
                    log1m_exp(mul_bigint(ln_p, binomial(static_cast<unsigned long>(k),
                                                        static_cast<unsigned long>(params.r - 1))));
        terms.push_back(std::move(term));
    }
    return log_sum_exp(terms);
}

// (ln n/(-ln p))^(1/(r-1)) * ((1-1/r!) ln n - ln ln n/(r-1) + C) with the
// caller supplying the O(1) stand-in C. A conjectured form, never asserted.
inline Real conjecture_exponent(const HyperModelParams& params, const Real& c_const) {
    if (params.n < 3) throw DomainError("conjecture_exponent requires n >= 3");
    const prec_t prec = std::max(params.p.precision(), c_const.precision());
    const Real ln_n = log(Real(params.n, prec));
    const Real base = ln_n / -log(params.p);
    BigInt rfact;
    mpz_fac_ui(rfact.backend().data(), static_cast<unsigned long>(params.r));
    const Real coeff = to_real(Rational(rfact - 1, rfact), prec); // 1 - 1/r!
    const Real inner = coeff * ln_n - log(ln_n) / static_cast<long>(params.r - 1) + c_const;
    return pow(base, 1L / Real(params.r - 1, prec)) * inner;
}

// The summand at k = floor(ln n/(-ln p)), a lower bound for E[X^(r)]. The
// ratio is nudged up by one part in 2^(prec-8) before flooring: exact-integer
// ratios (n a power of 1/p) must not floor one below.
inline Real conjecture_lower_term_log(const HyperModelParams& params) {
    Real ratio = log(Real(params.n, params.p.precision())) / -log(params.p);
    ratio += abs(ratio) * pow(Real(2L, ratio.precision()),
                              -(static_cast<long>(ratio.precision()) - 8));
    const long k = floor(ratio).to_long();
    if (k < 1) throw DomainError("conjecture lower-bound term needs floor(ln n/(-ln p)) >= 1");
    return hyper_term_log(params, k);
}

} // namespace cliquex
