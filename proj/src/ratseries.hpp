#ifndef EXPMATH_SRC_RATSERIES_HPP
#define EXPMATH_SRC_RATSERIES_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace expmath::detail {

// Truncated formal power series in eps = 1/k with exact rational
// coefficients.  Supports the asymptotic-expansion algebra used by the
// series-tail accelerations (pFq at |x| = 1 and the Euler sum tails).
struct RatSeries {
    // c[i] multiplies eps^i.
    std::vector<mpq_class> c;

    explicit RatSeries(size_t order) : c(order) {}

    size_t order() const { return c.size(); }

    static RatSeries one(size_t order) {
        RatSeries s(order);
        s.c[0] = 1;
        return s;
    }
    // 1 + a*eps
    static RatSeries linear(const mpq_class& a, size_t order) {
        RatSeries s(order);
        s.c[0] = 1;
        if (order > 1) s.c[1] = a;
        return s;
    }

    RatSeries mul(const RatSeries& o) const {
        RatSeries r(order());
        for (size_t i = 0; i < order(); ++i) {
            if (c[i] == 0) continue;
            for (size_t j = 0; i + j < order(); ++j) {
                if (o.c[j] == 0) continue;
                r.c[i + j] += c[i] * o.c[j];
            }
        }
        return r;
    }

    RatSeries add(const RatSeries& o) const {
        RatSeries r(order());
        for (size_t i = 0; i < order(); ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }

    RatSeries sub(const RatSeries& o) const {
        RatSeries r(order());
        for (size_t i = 0; i < order(); ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }

    RatSeries scale(const mpq_class& f) const {
        RatSeries r(order());
        for (size_t i = 0; i < order(); ++i) r.c[i] = c[i] * f;
        return r;
    }

    // Reciprocal; requires c[0] != 0.
    RatSeries inverse() const {
        RatSeries r(order());
        r.c[0] = 1 / c[0];
        for (size_t n = 1; n < order(); ++n) {
            mpq_class acc = 0;
            for (size_t j = 1; j <= n; ++j) acc += c[j] * r.c[n - j];
            r.c[n] = -acc / c[0];
        }
        return r;
    }

    // log of a series with constant term 1, via integration of S'/S.
    RatSeries log() const {
        RatSeries inv = inverse();
        RatSeries deriv(order());  // S' shifted: coefficient of eps^i is (i+1) c[i+1]
        for (size_t i = 0; i + 1 < order(); ++i)
            deriv.c[i] = c[i + 1] * mpq_class(static_cast<long>(i + 1));
        RatSeries prod = deriv.mul(inv);
        RatSeries r(order());
        for (size_t i = 1; i < order(); ++i)
            r.c[i] = prod.c[i - 1] / mpq_class(static_cast<long>(i));
        return r;
    }

    // exp of a series with zero constant term.
    RatSeries exp() const {
        RatSeries r(order());
        r.c[0] = 1;
        // r' = c' * r, solved coefficient by coefficient.
        for (size_t n = 1; n < order(); ++n) {
            mpq_class acc = 0;
            for (size_t j = 1; j <= n; ++j)
                acc += c[j] * mpq_class(static_cast<long>(j)) * r.c[n - j];
            r.c[n] = acc / mpq_class(static_cast<long>(n));
        }
        return r;
    }
};

// Expansion of (1+eps)^m (integer m, possibly negative) to the given order.
inline RatSeries binom_pow(long m, size_t order) {
    RatSeries r(order);
    mpq_class term = 1;
    r.c[0] = 1;
    for (size_t i = 1; i < order; ++i) {
        term *= mpq_class(m - static_cast<long>(i) + 1);
        term /= mpq_class(static_cast<long>(i));
        r.c[i] = term;
    }
    return r;
}

// Exact Bernoulli numbers B_0..B_n (B_1 = -1/2) via the defining recurrence.
std::vector<mpq_class> bernoulli_exact(size_t n);

}  // namespace expmath::detail

#endif
