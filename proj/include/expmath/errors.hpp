#ifndef EXPMATH_ERRORS_HPP
#define EXPMATH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace expmath {

// Domain violations (log of a non-positive real, K0 at x <= 0, ...).
// Raised instead of returning NaN-like values.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A quadrature or series failed to reach the requested accuracy before the
// level cap.  Carries the best estimate so callers can still inspect it.
class nonconvergence_error : public std::runtime_error {
public:
    nonconvergence_error(const std::string& what, std::string best_estimate,
                         int achieved_digits)
        : std::runtime_error(what),
          best_estimate_(std::move(best_estimate)),
          achieved_digits_(achieved_digits) {}

    const std::string& best_estimate() const { return best_estimate_; }
    int achieved_digits() const { return achieved_digits_; }

private:
    std::string best_estimate_;
    int achieved_digits_;
};

// Evaluation budget exhausted before convergence.
class budget_error : public nonconvergence_error {
public:
    using nonconvergence_error::nonconvergence_error;
};

// Series/parameter combination outside the convergent regime of pFq.
class convergence_error : public domain_error {
public:
    using domain_error::domain_error;
};

// PSLQ could not decide at the available precision (distinct from a
// certified "no relation up to this norm" answer).
class inconclusive_error : public std::runtime_error {
public:
    explicit inconclusive_error(const std::string& what) : std::runtime_error(what) {}
};

// Unknown corpus entry / dictionary constant.
class lookup_error : public std::runtime_error {
public:
    explicit lookup_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace expmath

#endif
