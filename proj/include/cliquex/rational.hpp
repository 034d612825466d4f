// rational.hpp - exact rational arithmetic (GMP mpq) plus Real interop
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

#include "cliquex/errors.hpp"
#include "cliquex/real.hpp"

namespace cliquex {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// q^e for nonnegative integer e, exact.
inline Rational rational_pow(const Rational& q, unsigned long e) {
    BigInt num, den;
    mpz_pow_ui(num.backend().data(), numerator(q).backend().data(), e);
    mpz_pow_ui(den.backend().data(), denominator(q).backend().data(), e);
    return Rational(num, den);
}

// Exact binomial coefficient.
inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt b;
    if (k > n) return b; // 0, the C(a,b)=0 convention for b > a
    mpz_bin_uiui(b.backend().data(), n, k);
    return b;
}

// Accepts "a/b" and plain decimals ("0.375" -> 3/8); both are exact rationals.
inline Rational parse_rational(const std::string& s) {
    auto bad = [&] { return DomainError("unparseable rational literal: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto digits_only = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::size_t slash = s.find('/');
    if (slash != std::string::npos) {
        std::string a = s.substr(0, slash), b = s.substr(slash + 1);
        if (!digits_only(a) || !digits_only(b)) throw bad();
        Rational den{BigInt(b)};
        if (den == 0) throw bad();
        return Rational(BigInt(a)) / den; // division canonicalizes
    }
    std::size_t dot = s.find('.');
    if (dot == std::string::npos) {
        if (!digits_only(s)) throw bad();
        return Rational(BigInt(s));
    }
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!digits_only(whole) || !digits_only(frac)) throw bad();
    BigInt scale;
    mpz_ui_pow_ui(scale.backend().data(), 10, frac.size());
    return Rational(BigInt(whole) * scale + BigInt(frac)) / Rational(scale);
}

// Canonical "a/b" text, plain "a" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Real to_real(const Rational& q, prec_t prec = Real::default_precision()) {
    Real r(0L, prec);
    mpfr_set_q(r.raw(), q.backend().data(), MPFR_RNDN);
    return r;
}

inline Real to_real(const BigInt& z, prec_t prec = Real::default_precision()) {
    Real r(0L, prec);
    mpfr_set_z(r.raw(), z.backend().data(), MPFR_RNDN);
    return r;
}

// a * z in a single rounding, for exact integer factors too wide for long.
inline Real mul_bigint(const Real& a, const BigInt& z) {
    Real r(0L, a.precision());
    mpfr_mul_z(r.raw(), a.raw(), z.backend().data(), MPFR_RNDN);
    return r;
}

} // namespace cliquex
