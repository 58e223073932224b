#include "expmath/hiprec.hpp"

#include <cmath>
#include <climits>
#include <cstdio>
#include <cstring>

namespace expmath {

PrecisionContext::PrecisionContext(int target_digits, int guard_digits)
    : target_(target_digits), guard_(guard_digits) {
    if (target_ < 1) throw domain_error("PrecisionContext: target_digits must be >= 1");
    if (guard_ < 0) guard_ = (target_ + 4) / 5;
    if (guard_ < 10) guard_ = 10;
    // 10^d needs ceil(d*log2(10)) bits; a few extra bits keep decimal/binary
    // boundary cases away from the last digit.
    bits_ = static_cast<mpfr_prec_t>((target_ + guard_) * 3.3219280948873626 + 16);
}

BigReal BigReal::of(long v, const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigReal BigReal::of_ui(unsigned long v, const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_set_ui(r.v_, v, MPFR_RNDN);
    return r;
}

BigReal BigReal::of_double(double v, const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

BigReal BigReal::of_rational(long p, long q, const PrecisionContext& ctx) {
    if (q == 0) throw domain_error("of_rational: zero denominator");
    BigReal r(ctx);
    mpfr_set_si(r.v_, p, MPFR_RNDN);
    mpfr_div_si(r.v_, r.v_, q, MPFR_RNDN);
    return r;
}

BigReal BigReal::parse(std::string_view decimal, const PrecisionContext& ctx) {
    BigReal r(ctx);
    std::string s(decimal);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 && r.is_nan())
        throw domain_error("BigReal::parse: not a decimal number: " + s);
    return r;
}

long BigReal::exponent10() const {
    if (mpfr_zero_p(v_)) return LONG_MIN;
    // floor(e2 * log10(2)) is off by at most one near powers of ten, which is
    // fine for the guard/threshold uses this serves.
    long e2 = mpfr_get_exp(v_);
    return static_cast<long>(std::floor((double)(e2 - 1) * 0.30102999566398120));
}

std::string BigReal::to_string(int digits, bool truncate) const {
    if (digits < 1) digits = 1;
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits),
                             v_, truncate ? MPFR_RNDZ : MPFR_RNDN);
    std::string m(raw);
    mpfr_free_str(raw);
    bool neg = !m.empty() && m[0] == '-';
    std::string digs = neg ? m.substr(1) : m;
    if (mpfr_zero_p(v_)) return "0";
    std::string out = neg ? "-" : "";
    // e is the decimal exponent with an implied leading point: 0.ddd * 10^e.
    if (e > 0 && e <= digits) {
        out += digs.substr(0, static_cast<size_t>(e));
        std::string frac = digs.substr(static_cast<size_t>(e));
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    } else if (e <= 0 && e > -6) {
        out += "0.";
        out.append(static_cast<size_t>(-e), '0');
        std::string frac = digs;
        while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
        out += frac;
    } else {
        out += digs.substr(0, 1);
        std::string frac = digs.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
        out += "e" + std::to_string(e - 1);
    }
    return out;
}

BigReal BigReal::operator-() const {
    BigReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

namespace {
mpfr_prec_t join_prec(const BigReal& a, const BigReal& b) {
    return std::max(a.prec_bits(), b.prec_bits());
}
}  // namespace

BigReal BigReal::operator+(const BigReal& o) const {
    BigReal r(join_prec(*this, o));
    mpfr_add(r.raw(), v_, o.v_, MPFR_RNDN);
    return r;
}
BigReal BigReal::operator-(const BigReal& o) const {
    BigReal r(join_prec(*this, o));
    mpfr_sub(r.raw(), v_, o.v_, MPFR_RNDN);
    return r;
}
BigReal BigReal::operator*(const BigReal& o) const {
    BigReal r(join_prec(*this, o));
    mpfr_mul(r.raw(), v_, o.v_, MPFR_RNDN);
    return r;
}
BigReal BigReal::operator/(const BigReal& o) const {
    BigReal r(join_prec(*this, o));
    mpfr_div(r.raw(), v_, o.v_, MPFR_RNDN);
    return r;
}

BigComplex BigComplex::operator/(const BigComplex& o) const {
    BigReal d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

// ---- real elementary functions ---------------------------------------------

#define EXPMATH_UNARY(name, mpfr_name)                          \
    BigReal name(const BigReal& x, const PrecisionContext& ctx) { \
        BigReal r(ctx);                                          \
        mpfr_name(r.raw(), x.raw(), MPFR_RNDN);                  \
        return r;                                                \
    }

EXPMATH_UNARY(exp, mpfr_exp)
EXPMATH_UNARY(sin, mpfr_sin)
EXPMATH_UNARY(cos, mpfr_cos)
EXPMATH_UNARY(tan, mpfr_tan)
EXPMATH_UNARY(atan, mpfr_atan)
EXPMATH_UNARY(sinh, mpfr_sinh)
EXPMATH_UNARY(cosh, mpfr_cosh)
EXPMATH_UNARY(tanh, mpfr_tanh)
EXPMATH_UNARY(abs, mpfr_abs)
#undef EXPMATH_UNARY

BigReal log(const BigReal& x, const PrecisionContext& ctx) {
    if (x.sign() <= 0) throw domain_error("log: argument must be positive");
    BigReal r(ctx);
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal sqrt(const BigReal& x, const PrecisionContext& ctx) {
    if (x.sign() < 0) throw domain_error("sqrt: argument must be >= 0");
    BigReal r(ctx);
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal asin(const BigReal& x, const PrecisionContext& ctx) {
    if (mpfr_cmp_si(x.raw(), 1) > 0 || mpfr_cmp_si(x.raw(), -1) < 0)
        throw domain_error("asin: |x| must be <= 1");
    BigReal r(ctx);
    mpfr_asin(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal acos(const BigReal& x, const PrecisionContext& ctx) {
    if (mpfr_cmp_si(x.raw(), 1) > 0 || mpfr_cmp_si(x.raw(), -1) < 0)
        throw domain_error("acos: |x| must be <= 1");
    BigReal r(ctx);
    mpfr_acos(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal atan2(const BigReal& y, const BigReal& x, const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& x, const BigReal& y, const PrecisionContext& ctx) {
    // Negative base with non-integer exponent has no real branch.
    if (x.sign() < 0 && !mpfr_integer_p(y.raw()))
        throw domain_error("pow: negative base requires integer exponent");
    BigReal r(ctx);
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

BigReal pow_si(const BigReal& x, long n, const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

BigReal pi(const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

BigReal elementary(Elem fn, const BigReal& x, const PrecisionContext& ctx,
                   const BigReal* arg2) {
    switch (fn) {
        case Elem::exp: return exp(x, ctx);
        case Elem::log: return log(x, ctx);
        case Elem::sqrt: return sqrt(x, ctx);
        case Elem::sin: return sin(x, ctx);
        case Elem::cos: return cos(x, ctx);
        case Elem::tan: return tan(x, ctx);
        case Elem::atan: return atan(x, ctx);
        case Elem::asin: return asin(x, ctx);
        case Elem::sinh: return sinh(x, ctx);
        case Elem::cosh: return cosh(x, ctx);
        case Elem::tanh: return tanh(x, ctx);
        case Elem::pow:
            if (!arg2) throw domain_error("elementary(pow): missing exponent");
            return pow(x, *arg2, ctx);
    }
    throw domain_error("elementary: unknown function");
}

// ---- complex elementary functions -------------------------------------------

BigComplex exp(const BigComplex& z, const PrecisionContext& ctx) {
    BigReal ea = exp(z.re, ctx);
    return {ea * cos(z.im, ctx), ea * sin(z.im, ctx)};
}

BigComplex log(const BigComplex& z, const PrecisionContext& ctx) {
    if (z.is_zero()) throw domain_error("log: zero complex argument");
    BigReal r2 = z.re * z.re + z.im * z.im;
    BigReal half = BigReal::of_rational(1, 2, ctx);
    return {log(r2, ctx) * half, atan2(z.im, z.re, ctx)};
}

BigComplex sqrt(const BigComplex& z, const PrecisionContext& ctx) {
    if (z.is_zero()) return BigComplex(ctx);
    // Principal branch via the half-angle form; stable for all quadrants.
    BigReal r = sqrt(z.re * z.re + z.im * z.im, ctx);
    BigReal u = sqrt((r + abs(z.re, ctx)) / BigReal::of(2, ctx), ctx);
    BigReal v = z.im / (u + u);
    if (z.re.sign() >= 0) return {u, v};
    BigReal vmag = abs(z.im, ctx) / (u + u);
    BigReal usign = z.im.sign() >= 0 ? u : -u;
    return {vmag, usign};
}

BigComplex sin(const BigComplex& z, const PrecisionContext& ctx) {
    return {sin(z.re, ctx) * cosh(z.im, ctx), cos(z.re, ctx) * sinh(z.im, ctx)};
}

BigComplex cos(const BigComplex& z, const PrecisionContext& ctx) {
    return {cos(z.re, ctx) * cosh(z.im, ctx), -(sin(z.re, ctx) * sinh(z.im, ctx))};
}

BigComplex tan(const BigComplex& z, const PrecisionContext& ctx) {
    return sin(z, ctx) / cos(z, ctx);
}

BigComplex sinh(const BigComplex& z, const PrecisionContext& ctx) {
    return {sinh(z.re, ctx) * cos(z.im, ctx), cosh(z.re, ctx) * sin(z.im, ctx)};
}

BigComplex cosh(const BigComplex& z, const PrecisionContext& ctx) {
    return {cosh(z.re, ctx) * cos(z.im, ctx), sinh(z.re, ctx) * sin(z.im, ctx)};
}

BigComplex tanh(const BigComplex& z, const PrecisionContext& ctx) {
    return sinh(z, ctx) / cosh(z, ctx);
}

BigComplex atan(const BigComplex& z, const PrecisionContext& ctx) {
    // atan z = (i/2) [log(1-iz) - log(1+iz)]
    BigReal one = BigReal::of(1, ctx);
    BigComplex iz{-z.im, z.re};
    BigComplex a = log(BigComplex{one - iz.re, -iz.im}, ctx);
    BigComplex b = log(BigComplex{one + iz.re, iz.im}, ctx);
    BigComplex d = a - b;
    BigReal half = BigReal::of_rational(1, 2, ctx);
    return {-(d.im * half), d.re * half};
}

BigComplex asin(const BigComplex& z, const PrecisionContext& ctx) {
    // asin z = -i log(iz + sqrt(1-z^2))
    BigReal one = BigReal::of(1, ctx);
    BigComplex z2 = z * z;
    BigComplex s = sqrt(BigComplex{one - z2.re, -z2.im}, ctx);
    BigComplex w{s.re - z.im, s.im + z.re};
    BigComplex l = log(w, ctx);
    return {l.im, -l.re};
}

BigComplex pow(const BigComplex& z, const BigComplex& w, const PrecisionContext& ctx) {
    if (z.is_zero()) {
        if (w.is_zero()) return {BigReal::of(1, ctx), BigReal(ctx)};
        return BigComplex(ctx);
    }
    return exp(log(z, ctx) * w, ctx);
}

BigComplex pow_si(const BigComplex& z, long n, const PrecisionContext& ctx) {
    if (n == 0) return {BigReal::of(1, ctx), BigReal(ctx)};
    bool inv = n < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    BigComplex acc{BigReal::of(1, ctx), BigReal(ctx)};
    BigComplex base = z;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    if (inv) {
        BigComplex one{BigReal::of(1, ctx), BigReal(ctx)};
        return one / acc;
    }
    return acc;
}

BigComplex elementary(Elem fn, const BigComplex& z, const PrecisionContext& ctx,
                      const BigComplex* arg2) {
    switch (fn) {
        case Elem::exp: return exp(z, ctx);
        case Elem::log: return log(z, ctx);
        case Elem::sqrt: return sqrt(z, ctx);
        case Elem::sin: return sin(z, ctx);
        case Elem::cos: return cos(z, ctx);
        case Elem::tan: return tan(z, ctx);
        case Elem::atan: return atan(z, ctx);
        case Elem::asin: return asin(z, ctx);
        case Elem::sinh: return sinh(z, ctx);
        case Elem::cosh: return cosh(z, ctx);
        case Elem::tanh: return tanh(z, ctx);
        case Elem::pow:
            if (!arg2) throw domain_error("elementary(pow): missing exponent");
            return pow(z, *arg2, ctx);
    }
    throw domain_error("elementary: unknown function");
}

}  // namespace expmath
