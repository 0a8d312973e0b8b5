// Gamma-function family used by every closed form in the library:
// log-gamma, complete gamma, regularized and unregularized incomplete
// gammas, and the alternating power-series expansion of the lower
// incomplete gamma.

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

namespace polymix {

// Thrown when an infinite-series or iterative evaluation fails to reach
// the requested tolerance within its budget. The CLI maps this to a
// dedicated exit code, distinct from domain errors.
class non_convergence_error : public std::runtime_error {
  public:
    explicit non_convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Truncation policy for infinite-series evaluations.
struct SeriesControl {
    double tol = 1e-12;           // relative tolerance, in (0, 1)
    std::size_t max_terms = 10000;  // >= 1

    SeriesControl() = default;
    SeriesControl(double tol_, std::size_t max_terms_);
};

void validate(const SeriesControl& ctl);

// ln Gamma(a), a > 0. Relative error a few ulp over [1e-6, 1e6].
double log_gamma(double a);

// Gamma(a), a > 0. Overflows to +inf past a ~ 171.6.
double gamma_fn(double a);

// Regularized incomplete gammas P(a, z) = gamma(a, z) / Gamma(a) and
// Q(a, z) = 1 - P(a, z). Series for z < a + 1, continued fraction
// otherwise.
double reg_lower_gamma(double a, double z);
double reg_upper_gamma(double a, double z);

// Unregularized gamma(a, z) = int_0^z t^(a-1) e^(-t) dt and its
// complement Gamma(a, z) = Gamma(a) - gamma(a, z).
double lower_incomplete_gamma(double a, double z);
double upper_incomplete_gamma(double a, double z);

// gamma(a, z) summed by the alternating expansion
//   sum_k (-1)^k z^(a+k) / (k! (a+k)).
// Truncates when the next term falls below ctl.tol * |partial sum|;
// throws non_convergence_error at ctl.max_terms (expected for large z,
// where the alternating terms suffer cancellation).
double lower_incomplete_gamma_series(double a, double z, const SeriesControl& ctl = {});

// log(sum_i exp(logs[i])) with max-shift; -inf entries are skipped.
double log_sum_exp(std::span<const double> logs);

}  // namespace polymix
