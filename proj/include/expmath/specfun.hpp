#ifndef EXPMATH_SPECFUN_HPP
#define EXPMATH_SPECFUN_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "expmath/hiprec.hpp"

namespace expmath {

// Riemann zeta at integer s >= 2.
BigReal zeta(long s, const PrecisionContext& ctx);
// Riemann zeta at real s > 1 (used by series tail corrections).
BigReal zeta_real(const BigReal& s, const PrecisionContext& ctx);
// Dirichlet eta at real s > 0: (1 - 2^(1-s)) zeta(s).
BigReal eta_real(const BigReal& s, const PrecisionContext& ctx);
// Hurwitz zeta, integer s >= 2, a > 0, via Euler-Maclaurin.
BigReal hurwitz_zeta(long s, const BigReal& a, const PrecisionContext& ctx);
// Primitive Dirichlet L-series for discriminants -3 and -7, integer s >= 2.
BigReal dirichlet_l(int d, long s, const PrecisionContext& ctx);

// Modified Bessel function K0, x > 0.  Ascending series; for large x the
// I0/K0 cancellation is absorbed by raising the working precision.
BigReal bessel_k0(const BigReal& x, const PrecisionContext& ctx);

// Clausen function Cl2(theta) = sum sin(n theta)/n^2, any real theta.
BigReal clausen2(const BigReal& theta, const PrecisionContext& ctx);
// Lewin's inverse-tangent integral Ti2; |x| > 1 via the inversion formula.
BigReal ti2(const BigReal& x, const PrecisionContext& ctx);
// Polylogarithm Li_n(x), n >= 1, |x| <= 1 (excluding the divergent n=1, x=1).
BigReal polylog(long n, const BigReal& x, const PrecisionContext& ctx);
// Complete elliptic integral of the first kind, 0 <= k < 1, via AGM.
BigReal elliptic_k(const BigReal& k, const PrecisionContext& ctx);
BigReal agm(const BigReal& a, const BigReal& b, const PrecisionContext& ctx);
BigReal erf(const BigReal& x, const PrecisionContext& ctx);
BigReal erfc(const BigReal& x, const PrecisionContext& ctx);

// Generalized hypergeometric pFq with rational parameters, p <= q+1.
// Convergent for |x| < 1, and at |x| = 1 when sum(b) - sum(a) > 0 (tail
// summed by an exact asymptotic-expansion acceleration).
struct Rational {
    long num;
    long den;
};
BigReal hyp_pfq(const std::vector<Rational>& a, const std::vector<Rational>& b,
                const BigReal& x, const PrecisionContext& ctx);

BigReal catalan(const PrecisionContext& ctx);
BigReal euler_gamma(const PrecisionContext& ctx);
// Gamma(p/q); poles at non-positive integers raise domain_error.
BigReal gamma_fn(Rational x, const PrecisionContext& ctx);

// Numeric table of B_{2k}/(2k)! for Euler-Maclaurin corrections, k = 1..count.
// Cached per binary precision.
const std::vector<BigReal>& bernoulli_over_factorial(size_t count, mpfr_prec_t bits);

// ---- constant dictionary ----------------------------------------------------

// Named constants for the recognition workflow.  Entries are evaluator
// functions; values are cached per (name, precision).
class ConstantDictionary {
public:
    using Evaluator = std::function<BigReal(const PrecisionContext&)>;

    // The default dictionary: 1, pi powers, log powers, zeta values,
    // Li4(1/2), Catalan, Euler gamma, the L-series values, surds, and the
    // Cl2/Ti2 combinations appearing in the box-integral tables.
    static const ConstantDictionary& standard();

    void add(const std::string& name, const std::string& description, Evaluator ev);
    bool contains(const std::string& name) const;
    BigReal eval(const std::string& name, const PrecisionContext& ctx) const;
    std::vector<std::string> names() const;
    const std::string& description(const std::string& name) const;

private:
    struct Entry {
        std::string description;
        Evaluator evaluator;
    };
    std::map<std::string, Entry> entries_;
};

}  // namespace expmath

#endif
