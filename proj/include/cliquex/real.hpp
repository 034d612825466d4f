// real.hpp - value-semantic arbitrary-precision reals over MPFR
//
// Every logarithmic quantity in the library is carried as a Real. The default
// working precision is 128 mantissa bits: per-size log-terms span roughly
// +-1e7 at n = 1e6 and double precision cannot resolve the log log n scale
// corrections on top of that. Negative infinity is a legitimate value (the
// logarithm of an exactly-zero term), never an error.
#pragma once

#include <mpfr.h>

#include <atomic>
#include <cstdio>
#include <string>
#include <utility>

#include "cliquex/errors.hpp"

namespace cliquex {

using prec_t = mpfr_prec_t;

namespace detail {
inline std::atomic<long>& default_prec_slot() {
    static std::atomic<long> bits{128};
    return bits;
}
} // namespace detail

class Real {
public:
    static prec_t default_precision() {
        return static_cast<prec_t>(detail::default_prec_slot().load(std::memory_order_relaxed));
    }

    // Floor of 53 bits: below double precision the log-domain profiles are meaningless.
    static void set_default_precision(prec_t bits) {
        if (bits < 53) throw DomainError("precision must be at least 53 bits");
        detail::default_prec_slot().store(static_cast<long>(bits), std::memory_order_relaxed);
    }

    Real() : Real(0L) {}
    Real(long v, prec_t prec = default_precision()) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, v, MPFR_RNDN);
    }
    Real(int v, prec_t prec = default_precision()) : Real(static_cast<long>(v), prec) {}
    Real(unsigned long v, prec_t prec = default_precision()) {
        mpfr_init2(v_, prec);
        mpfr_set_ui(v_, v, MPFR_RNDN);
    }
    Real(long long v, prec_t prec = default_precision()) {
        mpfr_init2(v_, prec);
        mpfr_set_sj(v_, static_cast<intmax_t>(v), MPFR_RNDN);
    }
    Real(double v, prec_t prec = default_precision()) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, v, MPFR_RNDN);
    }

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real neg_infinity(prec_t prec = default_precision()) {
        Real r = uninitialized(prec);
        mpfr_set_inf(r.v_, -1);
        return r;
    }

    // Parses plain/scientific decimals plus the specials "-inf", "inf", "nan".
    static Real from_string(const std::string& s, prec_t prec = default_precision()) {
        Real r = uninitialized(prec);
        if (s == "-inf") { mpfr_set_inf(r.v_, -1); return r; }
        if (s == "inf") { mpfr_set_inf(r.v_, 1); return r; }
        if (s == "nan") { mpfr_set_nan(r.v_); return r; }
        if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw DomainError("unparseable real literal: '" + s + "'");
        return r;
    }

    prec_t precision() const { return mpfr_get_prec(v_); }

    // Value rounded to a different precision (the value object itself is immutable).
    Real at_precision(prec_t prec) const {
        Real r = uninitialized(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool is_neg_infinity() const { return mpfr_inf_p(v_) && mpfr_sgn(v_) < 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Round-trip decimal rendering: the digit count is the minimal one MPFR
    // guarantees to re-read to the identical value at this precision; trailing
    // zeros are trimmed (removing them cannot change the re-read value).
    std::string str() const {
        if (is_nan()) return "nan";
        if (is_inf()) return sign() < 0 ? "-inf" : "inf";
        if (is_zero()) return sign() < 0 ? "-0" : "0";
        mpfr_exp_t e;
        char* raw = mpfr_get_str(nullptr, &e, 10, 0, v_, MPFR_RNDN);
        std::string digits(raw);
        mpfr_free_str(raw);
        std::string sign_part;
        if (!digits.empty() && digits[0] == '-') {
            sign_part = "-";
            digits.erase(0, 1);
        }
        std::size_t last = digits.find_last_not_of('0');
        digits.erase(last == std::string::npos ? 1 : last + 1);
        std::string out = sign_part + digits.substr(0, 1);
        if (digits.size() > 1) out += "." + digits.substr(1);
        char expbuf[32];
        std::snprintf(expbuf, sizeof(expbuf), "e%+03ld", static_cast<long>(e) - 1);
        return out + expbuf;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    friend void swap(Real& a, Real& b) noexcept { mpfr_swap(a.v_, b.v_); }

    // --- arithmetic ------------------------------------------------------

    Real operator-() const {
        Real r = uninitialized(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, const Real& b) {
        Real r = uninitialized(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r = uninitialized(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r = uninitialized(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r = uninitialized(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, long b) {
        Real r = uninitialized(a.precision());
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator-(const Real& a, long b) {
        Real r = uninitialized(a.precision());
        mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator-(long a, const Real& b) {
        Real r = uninitialized(b.precision());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, long b) {
        Real r = uninitialized(a.precision());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b) {
        Real r = uninitialized(a.precision());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator/(long a, const Real& b) {
        Real r = uninitialized(b.precision());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) {
        widen(o.precision());
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator-=(const Real& o) {
        widen(o.precision());
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(const Real& o) {
        widen(o.precision());
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    // --- comparisons (NaN compares false, as for doubles) ----------------

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_lessgreater_p(a.v_, b.v_) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    // --- elementary functions --------------------------------------------

    friend Real log(const Real& x) { return unary(x, mpfr_log); }
    friend Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
    friend Real exp(const Real& x) { return unary(x, mpfr_exp); }
    friend Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
    friend Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
    friend Real abs(const Real& x) { return unary(x, mpfr_abs); }
    friend Real floor(const Real& x) {
        Real r = uninitialized(x.precision());
        mpfr_floor(r.v_, x.v_); // rounding is the operation itself
        return r;
    }
    friend Real lngamma(const Real& x) { return unary(x, mpfr_lngamma); }

    friend Real pow(const Real& x, const Real& y) {
        Real r = uninitialized(join(x, y));
        mpfr_pow(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend Real pow(const Real& x, long y) {
        Real r = uninitialized(x.precision());
        mpfr_pow_si(r.v_, x.v_, y, MPFR_RNDN);
        return r;
    }

    friend Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
    friend Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

private:
    static Real uninitialized(prec_t prec) { return Real(uninit_tag{}, prec); }
    struct uninit_tag {};
    Real(uninit_tag, prec_t prec) { mpfr_init2(v_, prec); }

    static prec_t join(const Real& a, const Real& b) {
        return a.precision() > b.precision() ? a.precision() : b.precision();
    }
    void widen(prec_t prec) {
        if (prec > precision()) {
            Real wide = uninitialized(prec);
            mpfr_set(wide.v_, v_, MPFR_RNDN);
            mpfr_swap(v_, wide.v_);
        }
    }

    template <typename F>
    static Real unary(const Real& x, F f) {
        Real r = uninitialized(x.precision());
        f(r.v_, x.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

inline std::ostream& operator<<(std::ostream& os, const Real& x);

} // namespace cliquex

#include <ostream>

namespace cliquex {
inline std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(); }
} // namespace cliquex
