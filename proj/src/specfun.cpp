#include "expmath/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "ratseries.hpp"

namespace expmath {

namespace {

// ---- cached B_{2k}/(2k)! table ----------------------------------------------
// Grown copy-on-write so callers can keep reading a snapshot while another
// thread extends the table.

struct QTableCache {
    std::mutex mu;
    std::map<mpfr_prec_t, std::shared_ptr<const std::vector<BigReal>>> tables;
};

QTableCache& qcache() {
    static QTableCache c;
    return c;
}

std::shared_ptr<const std::vector<BigReal>> qtable(size_t count, mpfr_prec_t bits) {
    QTableCache& c = qcache();
    std::lock_guard<std::mutex> lock(c.mu);
    std::shared_ptr<const std::vector<BigReal>>& slot = c.tables[bits];
    if (slot && slot->size() >= count) return slot;
    auto fresh = std::make_shared<std::vector<BigReal>>();
    if (slot) *fresh = *slot;
    // B_{2k}/(2k)! = (-1)^{k+1} * 2 zeta(2k) / (2pi)^{2k}
    mpfr_t two_pi_sq, pw, z;
    mpfr_init2(two_pi_sq, bits);
    mpfr_init2(pw, bits);
    mpfr_init2(z, bits);
    mpfr_const_pi(two_pi_sq, MPFR_RNDN);
    mpfr_mul_si(two_pi_sq, two_pi_sq, 2, MPFR_RNDN);
    mpfr_sqr(two_pi_sq, two_pi_sq, MPFR_RNDN);
    mpfr_set_si(pw, 1, MPFR_RNDN);
    for (size_t k = 1; k <= fresh->size(); ++k) mpfr_div(pw, pw, two_pi_sq, MPFR_RNDN);
    for (size_t k = fresh->size() + 1; k <= count; ++k) {
        mpfr_div(pw, pw, two_pi_sq, MPFR_RNDN);
        mpfr_zeta_ui(z, static_cast<unsigned long>(2 * k), MPFR_RNDN);
        BigReal q(bits);
        mpfr_mul(q.raw(), z, pw, MPFR_RNDN);
        mpfr_mul_si(q.raw(), q.raw(), (k % 2 == 1) ? 2 : -2, MPFR_RNDN);
        fresh->push_back(std::move(q));
    }
    mpfr_clears(two_pi_sq, pw, z, nullptr);
    slot = fresh;
    return slot;
}

}  // namespace

const std::vector<BigReal>& bernoulli_over_factorial(size_t count, mpfr_prec_t bits) {
    // The shared_ptr snapshots live in the cache for the process lifetime;
    // callers must not request growth while holding this reference.
    static std::mutex mu;
    static std::map<mpfr_prec_t, std::shared_ptr<const std::vector<BigReal>>> held;
    auto snap = qtable(count, bits);
    std::lock_guard<std::mutex> lock(mu);
    held[bits] = snap;
    return *snap;
}

// ---- zeta family --------------------------------------------------------------

BigReal zeta(long s, const PrecisionContext& ctx) {
    if (s < 2) throw domain_error("zeta: s must be >= 2");
    BigReal r(ctx);
    mpfr_zeta_ui(r.raw(), static_cast<unsigned long>(s), MPFR_RNDN);
    r.set_accuracy(ctx.target_digits());
    return r;
}

BigReal zeta_real(const BigReal& s, const PrecisionContext& ctx) {
    if (mpfr_cmp_si(s.raw(), 1) <= 0) throw domain_error("zeta_real: s must be > 1");
    BigReal r(ctx);
    mpfr_zeta(r.raw(), s.raw(), MPFR_RNDN);
    return r;
}

BigReal eta_real(const BigReal& s, const PrecisionContext& ctx) {
    if (s.sign() <= 0) throw domain_error("eta_real: s must be > 0");
    BigReal one = BigReal::of(1, ctx);
    BigReal t = pow(BigReal::of(2, ctx), one - s, ctx);
    return (one - t) * zeta_real(s, ctx);
}

BigReal hurwitz_zeta(long s, const BigReal& a, const PrecisionContext& ctx) {
    if (s < 2) throw domain_error("hurwitz_zeta: s must be >= 2");
    if (a.sign() <= 0) throw domain_error("hurwitz_zeta: a must be > 0");
    const int W = ctx.working_digits();
    const long N = std::max<long>(32, static_cast<long>(W * 0.46) + 8);
    const mpfr_prec_t bits = ctx.bits();
    auto q = qtable(static_cast<size_t>(N) + 64, bits);

    BigReal sum(bits), t(bits), base(bits);
    for (long j = 0; j < N; ++j) {
        mpfr_add_si(base.raw(), a.raw(), j, MPFR_RNDN);
        mpfr_pow_si(t.raw(), base.raw(), -s, MPFR_RNDN);
        mpfr_add(sum.raw(), sum.raw(), t.raw(), MPFR_RNDN);
    }
    // Euler-Maclaurin remainder about a+N:
    //   (a+N)^{1-s}/(s-1) + (a+N)^{-s}/2
    //   + sum_k B_{2k}/(2k)! (s)_{2k-1} (a+N)^{-s-2k+1}
    BigReal an(bits);
    mpfr_add_si(an.raw(), a.raw(), N, MPFR_RNDN);
    BigReal an_pow(bits);
    mpfr_pow_si(an_pow.raw(), an.raw(), 1 - s, MPFR_RNDN);
    mpfr_div_si(t.raw(), an_pow.raw(), s - 1, MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), t.raw(), MPFR_RNDN);
    BigReal an_inv(bits);
    mpfr_si_div(an_inv.raw(), 1, an.raw(), MPFR_RNDN);
    mpfr_mul(an_pow.raw(), an_pow.raw(), an_inv.raw(), MPFR_RNDN);  // (a+N)^{-s}
    mpfr_div_si(t.raw(), an_pow.raw(), 2, MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), t.raw(), MPFR_RNDN);

    BigReal an_inv2 = an_inv * an_inv;
    BigReal poch(bits), fac(bits), term(bits);
    mpfr_set_si(poch.raw(), s, MPFR_RNDN);
    mpfr_mul(fac.raw(), an_pow.raw(), an_inv.raw(), MPFR_RNDN);  // (a+N)^{-s-1}
    const long eps_exp = -static_cast<long>(bits) - 4;
    mpfr_exp_t prev_exp = mpfr_get_emax();
    for (size_t k = 1; k < q->size(); ++k) {
        mpfr_mul(term.raw(), (*q)[k - 1].raw(), poch.raw(), MPFR_RNDN);
        mpfr_mul(term.raw(), term.raw(), fac.raw(), MPFR_RNDN);
        if (mpfr_zero_p(term.raw())) break;
        mpfr_exp_t te = mpfr_get_exp(term.raw());
        if (te > prev_exp) break;  // divergent regime reached; min term passed
        mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
        if (te < mpfr_get_exp(sum.raw()) + eps_exp) break;
        prev_exp = te;
        long kk = static_cast<long>(k);
        mpfr_mul_si(t.raw(), poch.raw(), s + 2 * kk - 1, MPFR_RNDN);
        mpfr_mul_si(poch.raw(), t.raw(), s + 2 * kk, MPFR_RNDN);
        mpfr_mul(fac.raw(), fac.raw(), an_inv2.raw(), MPFR_RNDN);
    }
    BigReal out(ctx);
    mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
    out.set_accuracy(ctx.target_digits());
    return out;
}

BigReal dirichlet_l(int d, long s, const PrecisionContext& ctx) {
    if (s < 2) throw domain_error("dirichlet_l: s must be >= 2");
    int m;
    const int* chi;
    static const int chi3[] = {0, 1, -1};               // residues mod 3
    static const int chi7[] = {0, 1, 1, -1, 1, -1, -1};  // Legendre (a|7)
    if (d == -3) { m = 3; chi = chi3; }
    else if (d == -7) { m = 7; chi = chi7; }
    else throw domain_error("dirichlet_l: unsupported character index (use -3 or -7)");

    PrecisionContext work = ctx.raised(8);
    BigReal acc(work.bits());
    for (int a = 1; a < m; ++a) {
        if (chi[a] == 0) continue;
        BigReal h = hurwitz_zeta(s, BigReal::of_rational(a, m, work), work);
        if (chi[a] > 0) mpfr_add(acc.raw(), acc.raw(), h.raw(), MPFR_RNDN);
        else mpfr_sub(acc.raw(), acc.raw(), h.raw(), MPFR_RNDN);
    }
    BigReal scale = pow_si(BigReal::of(m, work), -s, work);
    BigReal out(ctx);
    mpfr_mul(out.raw(), acc.raw(), scale.raw(), MPFR_RNDN);
    out.set_accuracy(ctx.target_digits());
    return out;
}

// ---- Bessel K0 -----------------------------------------------------------------

BigReal bessel_k0(const BigReal& x, const PrecisionContext& ctx) {
    if (x.sign() <= 0) throw domain_error("bessel_k0: x must be > 0");
    // Ascending series at raised precision: the I0(x)/K0(x) size mismatch
    // costs about 2x/ln10 digits of cancellation.
    double xd = x.to_double();
    int extra = static_cast<int>(2.0 * xd / 2.302585092994046) + 12;
    PrecisionContext work = ctx.raised(extra);
    const mpfr_prec_t bits = work.bits();

    BigReal z(bits);
    mpfr_sqr(z.raw(), x.raw(), MPFR_RNDN);
    mpfr_div_si(z.raw(), z.raw(), 4, MPFR_RNDN);

    BigReal term(bits), i0(bits), s(bits), h(bits), t(bits);
    mpfr_set_si(term.raw(), 1, MPFR_RNDN);
    mpfr_set_si(i0.raw(), 1, MPFR_RNDN);
    const long eps_exp = -static_cast<long>(bits) - 4;
    for (long k = 1;; ++k) {
        mpfr_mul(term.raw(), term.raw(), z.raw(), MPFR_RNDN);
        mpfr_div_si(term.raw(), term.raw(), k, MPFR_RNDN);
        mpfr_div_si(term.raw(), term.raw(), k, MPFR_RNDN);
        mpfr_set_si(t.raw(), 1, MPFR_RNDN);
        mpfr_div_si(t.raw(), t.raw(), k, MPFR_RNDN);
        mpfr_add(h.raw(), h.raw(), t.raw(), MPFR_RNDN);
        mpfr_add(i0.raw(), i0.raw(), term.raw(), MPFR_RNDN);
        mpfr_mul(t.raw(), term.raw(), h.raw(), MPFR_RNDN);
        mpfr_add(s.raw(), s.raw(), t.raw(), MPFR_RNDN);
        if (mpfr_zero_p(term.raw()) ||
            mpfr_get_exp(term.raw()) < mpfr_get_exp(i0.raw()) + eps_exp)
            break;
        if (k > 4'000'000)
            throw nonconvergence_error("bessel_k0: series did not converge", "", 0);
    }
    BigReal lg(bits);
    mpfr_div_si(lg.raw(), x.raw(), 2, MPFR_RNDN);
    mpfr_log(lg.raw(), lg.raw(), MPFR_RNDN);
    BigReal g(bits);
    mpfr_const_euler(g.raw(), MPFR_RNDN);
    mpfr_add(lg.raw(), lg.raw(), g.raw(), MPFR_RNDN);
    mpfr_mul(lg.raw(), lg.raw(), i0.raw(), MPFR_RNDN);
    mpfr_sub(s.raw(), s.raw(), lg.raw(), MPFR_RNDN);
    BigReal out(ctx);
    mpfr_set(out.raw(), s.raw(), MPFR_RNDN);
    out.set_accuracy(ctx.target_digits());
    return out;
}

// ---- Clausen / Ti2 / polylog ----------------------------------------------------

namespace {

// Cl2 power series about 0, valid for |t| < 2pi:
//   Cl2(t) = t - t log|t| + sum_{n>=1} zeta(2n) t^{2n+1} / (n(2n+1)(2pi)^{2n})
// with zeta(2n)/(2pi)^{2n} = |B_{2n}|/(2 (2n)!).
BigReal clausen2_series(const BigReal& t, const PrecisionContext& ctx) {
    if (t.is_zero()) return BigReal(ctx);
    const mpfr_prec_t bits = ctx.bits();
    const int W = ctx.working_digits();
    double td = std::fabs(t.to_double());
    size_t K = 12;
    if (td > 0) {
        double ratio_log = 2.0 * std::log(6.283185307179586 / td);
        K = static_cast<size_t>(W * 2.302585092994046 / ratio_log) + 12;
    }
    auto q = qtable(K, bits);

    BigReal t2(bits), pw(bits), term(bits), sum(bits);
    mpfr_sqr(t2.raw(), t.raw(), MPFR_RNDN);
    mpfr_set_si(pw.raw(), 1, MPFR_RNDN);
    const long eps_exp = -static_cast<long>(bits) - 4;
    for (size_t n = 1; n <= K; ++n) {
        mpfr_mul(pw.raw(), pw.raw(), t2.raw(), MPFR_RNDN);
        mpfr_abs(term.raw(), (*q)[n - 1].raw(), MPFR_RNDN);
        mpfr_mul(term.raw(), term.raw(), pw.raw(), MPFR_RNDN);
        mpfr_div_si(term.raw(), term.raw(), 2 * static_cast<long>(n), MPFR_RNDN);
        mpfr_div_si(term.raw(), term.raw(), 2 * static_cast<long>(n) + 1, MPFR_RNDN);
        mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
        if (mpfr_zero_p(term.raw()) ||
            mpfr_get_exp(term.raw()) < mpfr_get_exp(sum.raw()) + eps_exp)
            break;
    }
    BigReal lt(bits);
    mpfr_abs(lt.raw(), t.raw(), MPFR_RNDN);
    mpfr_log(lt.raw(), lt.raw(), MPFR_RNDN);
    mpfr_si_sub(lt.raw(), 1, lt.raw(), MPFR_RNDN);
    mpfr_add(lt.raw(), lt.raw(), sum.raw(), MPFR_RNDN);
    BigReal out(ctx.bits());
    mpfr_mul(out.raw(), lt.raw(), t.raw(), MPFR_RNDN);
    return out;
}

}  // namespace

BigReal clausen2(const BigReal& theta, const PrecisionContext& ctx) {
    PrecisionContext work = ctx.raised(6);
    const mpfr_prec_t bits = work.bits();
    BigReal two_pi(bits);
    mpfr_const_pi(two_pi.raw(), MPFR_RNDN);
    mpfr_mul_si(two_pi.raw(), two_pi.raw(), 2, MPFR_RNDN);
    BigReal t(bits);
    mpfr_remainder(t.raw(), theta.raw(), two_pi.raw(), MPFR_RNDN);  // [-pi, pi]
    int sgn = t.sign();
    if (sgn == 0) return BigReal(ctx);
    mpfr_abs(t.raw(), t.raw(), MPFR_RNDN);

    BigReal pi_w(bits);
    mpfr_const_pi(pi_w.raw(), MPFR_RNDN);
    BigReal thresh(bits);
    mpfr_mul_si(thresh.raw(), pi_w.raw(), 3, MPFR_RNDN);
    mpfr_div_si(thresh.raw(), thresh.raw(), 4, MPFR_RNDN);
    BigReal result(bits);
    if (t > thresh) {
        // One duplication step keeps both series arguments below 3pi/4:
        //   Cl2(t) = Cl2(pi - t) - Cl2(2(pi - t))/2
        BigReal u = pi_w - t;
        BigReal a = clausen2_series(u, work);
        BigReal b = clausen2_series(u + u, work);
        mpfr_div_si(b.raw(), b.raw(), 2, MPFR_RNDN);
        result = a - b;
    } else {
        result = clausen2_series(t, work);
    }
    if (sgn < 0) mpfr_neg(result.raw(), result.raw(), MPFR_RNDN);
    BigReal out(ctx);
    mpfr_set(out.raw(), result.raw(), MPFR_RNDN);
    out.set_accuracy(ctx.target_digits());
    return out;
}

BigReal ti2(const BigReal& x, const PrecisionContext& ctx) {
    int sgn = x.sign();
    if (sgn == 0) return BigReal(ctx);
    if (sgn < 0) return -ti2(-x, ctx);
    if (mpfr_cmp_si(x.raw(), 1) == 0) return catalan(ctx);
    if (mpfr_cmp_si(x.raw(), 1) > 0) {
        // Ti2(x) = Ti2(1/x) + (pi/2) log x for x > 1
        PrecisionContext work = ctx.raised(4);
        BigReal inv = BigReal::of(1, work) / x;
        BigReal v = ti2(inv, work) + pi(work) * log(x, work) / BigReal::of(2, work);
        BigReal out(ctx);
        mpfr_set(out.raw(), v.raw(), MPFR_RNDN);
        out.set_accuracy(ctx.target_digits());
        return out;
    }
    const mpfr_prec_t bits = ctx.bits();
    BigReal x2(bits), term(bits), sum(bits), t(bits);
    mpfr_sqr(x2.raw(), x.raw(), MPFR_RNDN);
    mpfr_set(term.raw(), x.raw(), MPFR_RNDN);
    mpfr_set(sum.raw(), x.raw(), MPFR_RNDN);
    const long eps_exp = -static_cast<long>(bits) - 4;
    for (long n = 1;; ++n) {
        mpfr_mul(term.raw(), term.raw(), x2.raw(), MPFR_RNDN);
        long m = 2 * n + 1;
        mpfr_div_si(t.raw(), term.raw(), m * m, MPFR_RNDN);
        if (n % 2 == 1) mpfr_sub(sum.raw(), sum.raw(), t.raw(), MPFR_RNDN);
        else mpfr_add(sum.raw(), sum.raw(), t.raw(), MPFR_RNDN);
        if (mpfr_zero_p(t.raw()) ||
            mpfr_get_exp(t.raw()) < mpfr_get_exp(sum.raw()) + eps_exp)
            break;
        if (n > 20'000'000)
            throw nonconvergence_error("ti2: series did not converge", "", 0);
    }
    BigReal out(ctx);
    mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
    out.set_accuracy(ctx.target_digits());
    return out;
}

BigReal polylog(long n, const BigReal& x, const PrecisionContext& ctx) {
    if (n < 1) throw domain_error("polylog: n must be >= 1");
    if (mpfr_cmp_si(x.raw(), 1) > 0 || mpfr_cmp_si(x.raw(), -1) < 0)
        throw domain_error("polylog: |x| must be <= 1");
    if (n == 1) {
        if (mpfr_cmp_si(x.raw(), 1) == 0)
            throw domain_error("polylog: Li1 diverges at x = 1");
        return -log(BigReal::of(1, ctx) - x, ctx);
    }
    if (mpfr_cmp_si(x.raw(), 1) == 0) return zeta(n, ctx);
    if (mpfr_cmp_si(x.raw(), -1) == 0) return -eta_real(BigReal::of(n, ctx), ctx);
    const mpfr_prec_t bits = ctx.bits();
    BigReal term(bits), sum(bits), t(bits), kp(bits);
    mpfr_set(term.raw(), x.raw(), MPFR_RNDN);
    mpfr_set(sum.raw(), x.raw(), MPFR_RNDN);
    const long eps_exp = -static_cast<long>(bits) - 4;
    for (long k = 2;; ++k) {
        mpfr_mul(term.raw(), term.raw(), x.raw(), MPFR_RNDN);
        mpfr_set_si(kp.raw(), k, MPFR_RNDN);
        mpfr_pow_si(kp.raw(), kp.raw(), -n, MPFR_RNDN);
        mpfr_mul(t.raw(), term.raw(), kp.raw(), MPFR_RNDN);
        mpfr_add(sum.raw(), sum.raw(), t.raw(), MPFR_RNDN);
        if (mpfr_zero_p(t.raw()) ||
            mpfr_get_exp(t.raw()) < mpfr_get_exp(sum.raw()) + eps_exp)
            break;
        if (k > 40'000'000)
            throw nonconvergence_error("polylog: series did not converge", "", 0);
    }
    BigReal out(ctx);
    mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
    out.set_accuracy(ctx.target_digits());
    return out;
}

// ---- elliptic K / erf / gamma ---------------------------------------------------

BigReal agm(const BigReal& a0, const BigReal& b0, const PrecisionContext& ctx) {
    if (a0.sign() <= 0 || b0.sign() <= 0) throw domain_error("agm: arguments must be > 0");
    const mpfr_prec_t bits = ctx.bits();
    BigReal a(bits), b(bits), t(bits), d(bits);
    mpfr_set(a.raw(), a0.raw(), MPFR_RNDN);
    mpfr_set(b.raw(), b0.raw(), MPFR_RNDN);
    for (int it = 0; it < 512; ++it) {
        mpfr_sub(d.raw(), a.raw(), b.raw(), MPFR_RNDN);
        if (mpfr_zero_p(d.raw()) ||
            mpfr_get_exp(d.raw()) < mpfr_get_exp(a.raw()) - static_cast<long>(bits) - 2)
            break;
        mpfr_add(t.raw(), a.raw(), b.raw(), MPFR_RNDN);
        mpfr_div_si(t.raw(), t.raw(), 2, MPFR_RNDN);
        mpfr_mul(b.raw(), a.raw(), b.raw(), MPFR_RNDN);
        mpfr_sqrt(b.raw(), b.raw(), MPFR_RNDN);
        mpfr_swap(a.raw(), t.raw());
    }
    BigReal out(ctx);
    mpfr_set(out.raw(), a.raw(), MPFR_RNDN);
    return out;
}

BigReal elliptic_k(const BigReal& k, const PrecisionContext& ctx) {
    if (k.sign() < 0 || mpfr_cmp_si(k.raw(), 1) >= 0)
        throw domain_error("elliptic_k: need 0 <= k < 1");
    PrecisionContext work = ctx.raised(6);
    BigReal one = BigReal::of(1, work);
    BigReal kp = sqrt(one - k * k, work);
    BigReal m = agm(one, kp, work);
    BigReal v = pi(work) / (BigReal::of(2, work) * m);
    BigReal out(ctx);
    mpfr_set(out.raw(), v.raw(), MPFR_RNDN);
    out.set_accuracy(ctx.target_digits());
    return out;
}

BigReal erf(const BigReal& x, const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_erf(r.raw(), x.raw(), MPFR_RNDN);
    r.set_accuracy(ctx.target_digits());
    return r;
}

BigReal erfc(const BigReal& x, const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_erfc(r.raw(), x.raw(), MPFR_RNDN);
    r.set_accuracy(ctx.target_digits());
    return r;
}

BigReal catalan(const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_const_catalan(r.raw(), MPFR_RNDN);
    r.set_accuracy(ctx.target_digits());
    return r;
}

BigReal euler_gamma(const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    r.set_accuracy(ctx.target_digits());
    return r;
}

BigReal gamma_fn(Rational x, const PrecisionContext& ctx) {
    if (x.den <= 0) throw domain_error("gamma_fn: denominator must be positive");
    if (x.num % x.den == 0 && x.num / x.den <= 0)
        throw domain_error("gamma_fn: pole at non-positive integer");
    BigReal arg = BigReal::of_rational(x.num, x.den, ctx);
    BigReal r(ctx);
    mpfr_gamma(r.raw(), arg.raw(), MPFR_RNDN);
    r.set_accuracy(ctx.target_digits());
    return r;
}

// ---- generalized hypergeometric -------------------------------------------------

namespace {

using detail::RatSeries;

bool is_nonpositive_integer(const Rational& r) {
    return r.num % r.den == 0 && r.num / r.den <= 0;
}

mpq_class to_mpq(const Rational& r) { return mpq_class(r.num, r.den); }

}  // namespace

BigReal hyp_pfq(const std::vector<Rational>& a, const std::vector<Rational>& b,
                const BigReal& x, const PrecisionContext& ctx) {
    const size_t p = a.size(), q = b.size();
    if (p > q + 1) throw convergence_error("hyp_pfq: requires p <= q+1");
    for (const Rational& r : a)
        if (r.den <= 0) throw domain_error("hyp_pfq: denominators must be positive");
    for (const Rational& bj : b) {
        if (bj.den <= 0) throw domain_error("hyp_pfq: denominators must be positive");
        if (is_nonpositive_integer(bj))
            throw domain_error("hyp_pfq: lower parameter at a non-positive integer");
    }
    if (x.is_zero()) {
        BigReal one = BigReal::of(1, ctx);
        one.set_accuracy(ctx.target_digits());
        return one;
    }
    bool terminating = std::any_of(a.begin(), a.end(), is_nonpositive_integer);
    int cmp_abs = mpfr_cmpabs_ui(x.raw(), 1);
    bool at_unit = (cmp_abs == 0);
    if (cmp_abs > 0 && !terminating)
        throw convergence_error("hyp_pfq: |x| > 1 outside the convergent regime");
    mpq_class excess = 0;  // sum(b) - sum(a)
    for (const Rational& bj : b) excess += to_mpq(bj);
    for (const Rational& ai : a) excess -= to_mpq(ai);
    if (at_unit && !terminating && p == q + 1 && excess <= 0)
        throw convergence_error("hyp_pfq: divergent at |x| = 1 (sum b - sum a <= 0)");

    PrecisionContext work = ctx.raised(10);
    const mpfr_prec_t bits = work.bits();
    const bool accelerate = at_unit && !terminating && p == q + 1;
    const long N0 = 320 + 8 * ctx.target_digits();

    BigReal term(bits), sum(bits), t(bits), t_last(bits);
    mpfr_set_si(term.raw(), 1, MPFR_RNDN);
    mpfr_set_si(sum.raw(), 1, MPFR_RNDN);
    const long eps_exp = -static_cast<long>(bits) - 4;
    for (long k = 0;; ++k) {
        for (const Rational& ai : a) {
            mpfr_mul_si(term.raw(), term.raw(), ai.num + k * ai.den, MPFR_RNDN);
            mpfr_div_si(term.raw(), term.raw(), ai.den, MPFR_RNDN);
        }
        for (const Rational& bj : b) {
            mpfr_mul_si(term.raw(), term.raw(), bj.den, MPFR_RNDN);
            mpfr_div_si(term.raw(), term.raw(), bj.num + k * bj.den, MPFR_RNDN);
        }
        mpfr_mul(term.raw(), term.raw(), x.raw(), MPFR_RNDN);
        mpfr_div_si(term.raw(), term.raw(), k + 1, MPFR_RNDN);
        mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
        if (mpfr_zero_p(term.raw())) break;
        if (accelerate) {
            if (k + 1 == N0) { mpfr_set(t_last.raw(), term.raw(), MPFR_RNDN); break; }
        } else {
            if (mpfr_get_exp(term.raw()) <
                eps_exp + std::max(mpfr_get_exp(sum.raw()), mpfr_exp_t(1)))
                break;
            if (k > 80'000'000)
                throw nonconvergence_error("hyp_pfq: series did not converge",
                                           sum.to_string(ctx.target_digits()), 0);
        }
    }

    if (accelerate && !mpfr_zero_p(t_last.raw())) {
        // Tail acceleration at |x| = 1.  Writing t_k = x^k u(k), the ratio
        // u(k+1)/u(k) = Q(k) is rational in k, so u has an exact asymptotic
        // expansion u(k) = C k^{-ph} (1 + e_1/k + e_2/k^2 + ...) whose
        // coefficients follow from log Q order by order.  The tail is then a
        // finite combination of zeta/eta partial-sum tails.
        const size_t M = 26 + static_cast<size_t>(ctx.target_digits() / 4);
        RatSeries Qs = RatSeries::one(M + 2);
        for (const Rational& ai : a) Qs = Qs.mul(RatSeries::linear(to_mpq(ai), M + 2));
        RatSeries den = RatSeries::linear(1, M + 2);
        for (const Rational& bj : b) den = den.mul(RatSeries::linear(to_mpq(bj), M + 2));
        RatSeries L = Qs.mul(den.inverse()).log();
        mpq_class ph = -L.c[1];  // decay exponent, equals 1 + sum(b) - sum(a)

        RatSeries log1p(M + 2);
        for (size_t i = 1; i < M + 2; ++i) {
            log1p.c[i] = mpq_class(1, static_cast<long>(i));
            if (i % 2 == 0) log1p.c[i] = -log1p.c[i];
        }
        RatSeries rhs = L.add(log1p.scale(ph));
        std::vector<mpq_class> dcoef(M + 1);
        std::vector<RatSeries> gi;  // (1+eps)^{-i} - 1
        gi.reserve(M + 1);
        for (size_t i = 0; i <= M; ++i) {
            RatSeries g = detail::binom_pow(-static_cast<long>(i), M + 2);
            g.c[0] = 0;
            gi.push_back(g);
        }
        RatSeries acc(M + 2);
        for (size_t m = 2; m <= M + 1; ++m) {
            mpq_class residual = rhs.c[m] - acc.c[m];
            mpq_class d = residual / mpq_class(-static_cast<long>(m - 1));
            dcoef[m - 1] = d;
            for (size_t j = 2; m - 1 + j < M + 2; ++j)
                acc.c[m - 1 + j] += d * gi[m - 1].c[j];
        }
        RatSeries dser(M + 2);
        for (size_t i = 1; i <= M; ++i) dser.c[i] = dcoef[i];
        RatSeries v = dser.exp();

        const bool alternating = (x.sign() < 0);
        BigReal phb(bits);
        mpfr_set_q(phb.raw(), ph.get_mpq_t(), MPFR_RNDN);
        // v(1/N0) and C = u(N0) N0^ph / v(1/N0)
        BigReal invN = BigReal::of(1, work) / BigReal::of(N0, work);
        BigReal vnum(bits), pwr(bits);
        mpfr_set_si(pwr.raw(), 1, MPFR_RNDN);
        for (size_t i = 0; i < M + 2; ++i) {
            mpfr_set_q(t.raw(), v.c[i].get_mpq_t(), MPFR_RNDN);
            mpfr_mul(t.raw(), t.raw(), pwr.raw(), MPFR_RNDN);
            mpfr_add(vnum.raw(), vnum.raw(), t.raw(), MPFR_RNDN);
            mpfr_mul(pwr.raw(), pwr.raw(), invN.raw(), MPFR_RNDN);
        }
        BigReal C(bits);
        mpfr_set_si(C.raw(), N0, MPFR_RNDN);
        mpfr_pow(C.raw(), C.raw(), phb.raw(), MPFR_RNDN);
        mpfr_mul(C.raw(), C.raw(), t_last.raw(), MPFR_RNDN);
        mpfr_div(C.raw(), C.raw(), vnum.raw(), MPFR_RNDN);
        if (alternating && (N0 % 2 == 1)) mpfr_neg(C.raw(), C.raw(), MPFR_RNDN);

        // Partial sums sum_{k<=N0} x^k k^{-(ph+i)} for all i in one sweep.
        std::vector<BigReal> partial(M + 2, BigReal(bits));
        BigReal kp(bits), kinv(bits), acc_t(bits);
        for (long k = 1; k <= N0; ++k) {
            mpfr_set_si(kp.raw(), k, MPFR_RNDN);
            mpfr_neg(acc_t.raw(), phb.raw(), MPFR_RNDN);
            mpfr_pow(kp.raw(), kp.raw(), acc_t.raw(), MPFR_RNDN);  // k^{-ph}
            mpfr_set_si(kinv.raw(), k, MPFR_RNDN);
            mpfr_si_div(kinv.raw(), 1, kinv.raw(), MPFR_RNDN);
            bool neg = alternating && (k % 2 == 1);
            for (size_t i = 0; i < M + 2; ++i) {
                if (neg) mpfr_sub(partial[i].raw(), partial[i].raw(), kp.raw(), MPFR_RNDN);
                else mpfr_add(partial[i].raw(), partial[i].raw(), kp.raw(), MPFR_RNDN);
                mpfr_mul(kp.raw(), kp.raw(), kinv.raw(), MPFR_RNDN);
            }
        }
        BigReal tail(bits), s_arg(bits);
        for (size_t i = 0; i < M + 2; ++i) {
            if (v.c[i] == 0) continue;
            mpfr_add_si(s_arg.raw(), phb.raw(), static_cast<long>(i), MPFR_RNDN);
            BigReal s_copy(bits);
            mpfr_set(s_copy.raw(), s_arg.raw(), MPFR_RNDN);
            BigReal full = alternating ? -eta_real(s_copy, work) : zeta_real(s_copy, work);
            BigReal ptail = full - partial[i];
            mpfr_set_q(t.raw(), v.c[i].get_mpq_t(), MPFR_RNDN);
            mpfr_mul(t.raw(), t.raw(), ptail.raw(), MPFR_RNDN);
            mpfr_add(tail.raw(), tail.raw(), t.raw(), MPFR_RNDN);
        }
        mpfr_mul(tail.raw(), tail.raw(), C.raw(), MPFR_RNDN);
        mpfr_add(sum.raw(), sum.raw(), tail.raw(), MPFR_RNDN);
    }

    BigReal out(ctx);
    mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
    out.set_accuracy(ctx.target_digits());
    return out;
}

}  // namespace expmath
