// asymptotics.hpp - the proof-side functions: f_n and its envelopes g, a, b, h,
// the Lambert-W stationary point, the theorem residual and the Markov threshold
#pragma once

#include "cliquex/errors.hpp"
#include "cliquex/numerics.hpp"
#include "cliquex/real.hpp"

namespace cliquex {

// n is carried as a Real: tests exercise constructed non-integer n (e.g.
// n = e^{3/2} makes the stationary point land exactly on 1).
struct AsymptoticParams {
    Real n;
    Real p;
    Real c; // 1/(-ln p)

    AsymptoticParams(long n_, Real p_) : AsymptoticParams(Real(n_, p_.precision()), std::move(p_)) {}
    AsymptoticParams(Real n_, Real p_) : n(std::move(n_)), p(std::move(p_)) {
        if (n.is_nan() || n < Real(1L)) throw DomainError("n must be at least 1");
        if (p.is_nan() || !(p > Real(0L)) || !(p < Real(1L)))
            throw DomainError("p must lie strictly inside (0,1)");
        c = Real(-1L) / log(p);
    }
};

struct EnvelopeEval {
    Real x;
    Real f; // ln F_n(x), binomial continued via log-gamma
    Real g; // upper envelope, f <= g on (0,n)
    Real a; // x ln n + x(x-1)/2 ln p
    Real b; // -x ln x - (n-x) ln(1 - x/n); g = a + b
    Real h; // x ln n - x ln x + x(x-1)/2 ln p
};

// f_n(x) = ln C(n,x) + x(x-1)/2 ln p + (n-x) ln(1-p^x) on (0, n].
inline Real f_continuous(const AsymptoticParams& params, const Real& x) {
    if (x.is_nan() || !(x > Real(0L)) || x > params.n)
        throw DomainError("f_continuous requires 0 < x <= n");
    const Real ln_p = log(params.p);
    Real value = log_binomial(params.n, x) + x * (x - 1) / 2L * ln_p;
    if (x < params.n) value += (params.n - x) * log1m_exp(x * ln_p);
    return value;
}

// All five proof functions at one interior point x in (0,n).
inline EnvelopeEval envelope(const AsymptoticParams& params, const Real& x) {
    if (x.is_nan() || !(x > Real(0L)) || !(x < params.n))
        throw DomainError("envelope requires 0 < x < n");
    const Real ln_p = log(params.p);
    const Real ln_n = log(params.n);
    const Real x_ln_x = x * log(x);
    const Real tail = (params.n - x) * log1p(-(x / params.n));
    const Real quad = x * (x - 1) / 2L * ln_p;

    EnvelopeEval e;
    e.x = x;
    e.f = f_continuous(params, x);
    e.a = x * ln_n + quad;
    e.b = -x_ln_x - tail;
    e.h = x * ln_n - x_ln_x + quad;
    e.g = x * ln_n - x_ln_x - tail + quad;
    return e;
}

// h'(x) = ln n - ln x - 1 + x ln p - ln(p)/2.
inline Real h_prime(const AsymptoticParams& params, const Real& x) {
    if (x.is_nan() || !(x > Real(0L))) throw DomainError("h_prime requires x > 0");
    const Real ln_p = log(params.p);
    return log(params.n) - log(x) - 1L + x * ln_p - ln_p / 2L;
}

// Stationary point of h: x~ = W((-n ln p) / (e sqrt(p))) / (-ln p).
inline Real h_stationary_point(const AsymptoticParams& params) {
    if (params.n < Real(2L)) throw DomainError("h_stationary_point requires n >= 2");
    const Real ln_p = log(params.p);
    const Real arg = (-(params.n * ln_p)) / (exp(Real(1L, params.p.precision())) * sqrt(params.p));
    return lambert_w0(arg) / -ln_p;
}

// Residual of the headline asymptotic: with L = ln E[X_{n,p}],
// rho(n,p) = (-2 ln p) L / ln n - ln n + 2 ln ln n, asserted O(1).
inline Real theorem_residual(const AsymptoticParams& params, const Real& log_total) {
    if (params.n < Real(3L)) throw DomainError("theorem_residual requires n >= 3");
    const Real ln_n = log(params.n);
    return (Real(-2L) * log(params.p)) * log_total / ln_n - ln_n + 2L * log(ln_n);
}

// ln of the Markov bound n^{ln n / (-2 ln p)}: (ln n)^2 / (-2 ln p).
inline Real markov_threshold_log(const AsymptoticParams& params) {
    if (params.n < Real(2L)) throw DomainError("markov_threshold_log requires n >= 2");
    const Real ln_n = log(params.n);
    return ln_n * ln_n / (Real(-2L) * log(params.p));
}

} // namespace cliquex
