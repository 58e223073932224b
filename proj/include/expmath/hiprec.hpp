#ifndef EXPMATH_HIPREC_HPP
#define EXPMATH_HIPREC_HPP

#include <gmp.h>
#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

#include "expmath/errors.hpp"

namespace expmath {

// Decimal-digit-denominated precision control.  Every numeric operation in
// the toolkit runs at working_digits = target_digits + guard_digits, with
// round-to-nearest throughout; results are then trusted to target_digits.
class PrecisionContext {
public:
    // guard < 0 selects the default guard: max(10, ceil(target/5)).
    explicit PrecisionContext(int target_digits, int guard_digits = -1);

    int target_digits() const { return target_; }
    int guard_digits() const { return guard_; }
    int working_digits() const { return target_ + guard_; }

    // Binary precision used for mpfr variables under this context.
    mpfr_prec_t bits() const { return bits_; }

    PrecisionContext with_target(int target_digits) const {
        return PrecisionContext(target_digits);
    }
    // Same target, more guard digits (used internally for cancellation-prone
    // intermediate steps).
    PrecisionContext raised(int extra_digits) const {
        return PrecisionContext(target_, guard_ + extra_digits);
    }

private:
    int target_;
    int guard_;
    mpfr_prec_t bits_;
};

// Arbitrary-precision real value.  Wraps one mpfr_t; the precision is fixed
// at construction and all mpfr operations use MPFR_RNDN, so identical inputs
// and context yield bit-identical values.  `accuracy` tracks how many decimal
// digits are known-correct (working digits by default; quadrature results
// lower it to what their error estimate supports).
class BigReal {
public:
    BigReal() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit BigReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    explicit BigReal(const PrecisionContext& ctx) : BigReal(ctx.bits()) {
        accuracy_ = ctx.working_digits();
    }

    BigReal(const BigReal& o) : accuracy_(o.accuracy_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept : accuracy_(o.accuracy_) {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
            accuracy_ = o.accuracy_;
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) { mpfr_swap(v_, o.v_); accuracy_ = o.accuracy_; }
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal of(long v, const PrecisionContext& ctx);
    static BigReal of_ui(unsigned long v, const PrecisionContext& ctx);
    static BigReal of_double(double v, const PrecisionContext& ctx);
    // p/q at context precision.
    static BigReal of_rational(long p, long q, const PrecisionContext& ctx);
    static BigReal parse(std::string_view decimal, const PrecisionContext& ctx);

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec_bits() const { return mpfr_get_prec(v_); }

    int accuracy() const { return accuracy_; }
    void set_accuracy(int digits) { accuracy_ = digits; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // floor(log10|x|), or INT_MIN for zero.
    long exponent10() const;

    int cmp(const BigReal& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator==(const BigReal& o) const { return cmp(o) == 0; }
    bool operator<(const BigReal& o) const { return cmp(o) < 0; }
    bool operator>(const BigReal& o) const { return cmp(o) > 0; }
    bool operator<=(const BigReal& o) const { return cmp(o) <= 0; }
    bool operator>=(const BigReal& o) const { return cmp(o) >= 0; }

    // Decimal string with `digits` significant digits.  Truncates (round
    // toward zero) when `truncate` is set, which is the CLI output mode.
    std::string to_string(int digits, bool truncate = false) const;

    BigReal operator-() const;
    BigReal operator+(const BigReal& o) const;
    BigReal operator-(const BigReal& o) const;
    BigReal operator*(const BigReal& o) const;
    BigReal operator/(const BigReal& o) const;
    BigReal& operator+=(const BigReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator-=(const BigReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(const BigReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator/=(const BigReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

private:
    mpfr_t v_;
    int accuracy_ = 0;
};

// Complex value as a real/imaginary BigReal pair; only the elementary
// arithmetic the spin integrands need.
struct BigComplex {
    BigReal re;
    BigReal im;

    BigComplex() = default;
    explicit BigComplex(const PrecisionContext& ctx) : re(ctx), im(ctx) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigComplex operator/(const BigComplex& o) const;
    BigComplex conj() const { return {re, -im}; }
};

// ---- elementary functions -------------------------------------------------

enum class Elem { exp, log, sqrt, sin, cos, tan, atan, asin, sinh, cosh, tanh, pow };

BigReal exp(const BigReal& x, const PrecisionContext& ctx);
BigReal log(const BigReal& x, const PrecisionContext& ctx);   // x > 0
BigReal sqrt(const BigReal& x, const PrecisionContext& ctx);  // x >= 0
BigReal sin(const BigReal& x, const PrecisionContext& ctx);
BigReal cos(const BigReal& x, const PrecisionContext& ctx);
BigReal tan(const BigReal& x, const PrecisionContext& ctx);
BigReal atan(const BigReal& x, const PrecisionContext& ctx);
BigReal atan2(const BigReal& y, const BigReal& x, const PrecisionContext& ctx);
BigReal asin(const BigReal& x, const PrecisionContext& ctx);  // |x| <= 1
BigReal acos(const BigReal& x, const PrecisionContext& ctx);  // |x| <= 1
BigReal sinh(const BigReal& x, const PrecisionContext& ctx);
BigReal cosh(const BigReal& x, const PrecisionContext& ctx);
BigReal tanh(const BigReal& x, const PrecisionContext& ctx);
BigReal pow(const BigReal& x, const BigReal& y, const PrecisionContext& ctx);
BigReal pow_si(const BigReal& x, long n, const PrecisionContext& ctx);
BigReal abs(const BigReal& x, const PrecisionContext& ctx);

// Dispatch form of the above (the `pow` case takes the exponent in `arg2`).
BigReal elementary(Elem fn, const BigReal& x, const PrecisionContext& ctx,
                   const BigReal* arg2 = nullptr);

BigComplex exp(const BigComplex& z, const PrecisionContext& ctx);
BigComplex log(const BigComplex& z, const PrecisionContext& ctx);  // z != 0
BigComplex sqrt(const BigComplex& z, const PrecisionContext& ctx);
BigComplex sin(const BigComplex& z, const PrecisionContext& ctx);
BigComplex cos(const BigComplex& z, const PrecisionContext& ctx);
BigComplex tan(const BigComplex& z, const PrecisionContext& ctx);
BigComplex atan(const BigComplex& z, const PrecisionContext& ctx);
BigComplex asin(const BigComplex& z, const PrecisionContext& ctx);
BigComplex sinh(const BigComplex& z, const PrecisionContext& ctx);
BigComplex cosh(const BigComplex& z, const PrecisionContext& ctx);
BigComplex tanh(const BigComplex& z, const PrecisionContext& ctx);
BigComplex pow(const BigComplex& z, const BigComplex& w, const PrecisionContext& ctx);
BigComplex pow_si(const BigComplex& z, long n, const PrecisionContext& ctx);
BigComplex elementary(Elem fn, const BigComplex& z, const PrecisionContext& ctx,
                      const BigComplex* arg2 = nullptr);

BigReal pi(const PrecisionContext& ctx);

}  // namespace expmath

#endif
