// numerics.hpp - scalar kernels: log-binomial, log(1-e^y), log-sum-exp, Lambert W
#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "cliquex/errors.hpp"
#include "cliquex/real.hpp"

namespace cliquex {

// ln C(n,k) continued to real arguments through log-gamma. The two gamma terms
// of the denominator are added before subtracting so that (n,k) and (n,n-k)
// produce bitwise-identical results.
inline Real log_binomial(const Real& n, const Real& k) {
    if (k.is_nan() || n.is_nan() || k < Real(0L) || k > n)
        throw DomainError("log_binomial requires 0 <= k <= n");
    return lngamma(n + 1) - (lngamma(k + 1) + lngamma(n - k + 1));
}

inline Real log_binomial(long n, long k, prec_t prec = Real::default_precision()) {
    return log_binomial(Real(n, prec), Real(k, prec));
}

// ln(1 - e^y) for y <= 0, stable in both regimes (Maechler's split at -ln 2).
// y == 0 is the log of an exactly-zero quantity and yields the -inf sentinel.
inline Real log1m_exp(const Real& y) {
    if (y.is_nan() || y > Real(0L)) throw DomainError("log1m_exp requires y <= 0");
    if (y.is_zero()) return Real::neg_infinity(y.precision());
    if (y.is_neg_infinity()) return Real(0L, y.precision());
    static const double kLn2 = 0.6931471805599453;
    if (y > Real(-kLn2, y.precision()))
        return log(-expm1(y));
    return log1p(-exp(y));
}

namespace detail {

// Cumulative log-factorial ladder: out[i] = ln i! for i = 0..n. One log and
// one add per step, far cheaper than per-term log-gamma for large profiles.
inline std::vector<Real> lnfact_ladder(long n, prec_t prec) {
    std::vector<Real> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    out.emplace_back(0L, prec);
    for (long i = 1; i <= n; ++i) out.push_back(out.back() + log(Real(i, prec)));
    return out;
}

} // namespace detail

// ln sum exp(v_i) by max-shift. Terms are accumulated in descending order of
// value, so the result is invariant under permutation of the input; terms more
// than (precision + 16) bits below the maximum cannot affect the rounded sum
// and are dropped.
inline Real log_sum_exp(std::span<const Real> values) {
    if (values.empty()) throw DomainError("log_sum_exp of an empty list");
    prec_t prec = Real::default_precision();
    const Real* mx = &values[0];
    for (const Real& v : values) {
        prec = std::max(prec, v.precision());
        if (v.is_nan()) throw DomainError("log_sum_exp over NaN");
        if (v > *mx) mx = &v;
    }
    if (mx->is_neg_infinity()) return Real::neg_infinity(prec);

    std::vector<const Real*> order;
    order.reserve(values.size());
    for (const Real& v : values) order.push_back(&v);
    std::sort(order.begin(), order.end(),
              [](const Real* a, const Real* b) { return *b < *a; });

    const Real cutoff = *mx - Real(static_cast<long>(prec) + 16) * Real(0.6931471805599453, prec);
    Real sum(0L, prec);
    for (const Real* v : order) {
        if (*v < cutoff) break;
        sum += exp(v->at_precision(prec) - *mx);
    }
    return *mx + log(sum);
}

inline Real log_sum_exp(const std::vector<Real>& values) {
    return log_sum_exp(std::span<const Real>(values.data(), values.size()));
}

// Principal-branch Lambert W: the w >= -1 solution of w e^w = x for x >= -1/e.
// Guarded Halley iteration inside the bracket [-1, hi]; any step leaving the
// bracket is replaced by a bisection step, so convergence is unconditional.
inline Real lambert_w0(const Real& x) {
    const prec_t prec = std::max(x.precision(), Real::default_precision());
    const prec_t work = prec + 32;
    const Real xv = x.at_precision(work);
    const Real neg_inv_e = -exp(Real(-1L, work));
    if (x.is_nan() || xv < neg_inv_e) throw DomainError("lambert_w0 requires x >= -1/e");

    const Real one(1L, work);
    auto phi = [&](const Real& w) { return w * exp(w) - xv; };

    Real lo(-1L, work);
    const bool large = xv > exp(one);
    Real hi = large ? log(xv) + 1 : Real(2L, work); // strictly above the root either way
    Real w = large ? log(xv) - log(log(xv)) : xv * exp(one);
    if (!(w > lo && w < hi)) w = (lo + hi) / 2L;

    const Real tol = pow(Real(2L, work), -static_cast<long>(prec) - 8);
    const int max_iter = 500;
    for (int it = 0; it < max_iter; ++it) {
        Real f = phi(w);
        if (f.is_zero()) return w.at_precision(prec);
        if (f > Real(0L)) hi = w; else lo = w;

        // Halley: w' = w - f / (f' - f f'' / (2 f')), with f' = e^w (1+w).
        Real ew = exp(w);
        Real fp = ew * (w + 1);
        Real next;
        bool ok = !fp.is_zero();
        if (ok) {
            Real denom = fp - f * (ew * (w + 2)) / (2 * fp);
            ok = !denom.is_zero() && denom.is_finite();
            if (ok) next = w - f / denom;
        }
        if (!ok || !(next > lo && next < hi)) next = (lo + hi) / 2L;

        Real step = abs(next - w);
        w = next;
        if (step <= tol * max(abs(w), one)) return w.at_precision(prec);
    }
    throw ConvergenceError("lambert_w0 did not converge");
}

} // namespace cliquex
