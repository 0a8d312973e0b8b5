// Stress-strength reliability R = P(Y < X) for independent family
// members X (strength) and Y (stress). Two routes: adaptive quadrature
// of int pdf_X(x) cdf_Y(x) dx (production), and the double-sum with an
// alternating inner series in the stress rate (validation). The inner
// series converges only when the stress tail is lighter than the
// strength tail; outside that region the evaluator uses the complement
// identity R = 1 - P(X < Y) or, on the knife edge between the two, an
// alternating-series acceleration.

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "polymix/family.hpp"
#include "polymix/specfun.hpp"

namespace polymix {

struct SeriesReliability {
    double value;
    std::size_t terms;  // total inner-series terms consumed
};

struct StressStrengthResult {
    std::optional<double> r_series;  // absent when the series did not converge
    std::string series_error;        // populated when r_series is absent
    std::size_t terms_used = 0;
    double r_quadrature = 0.0;
    std::optional<double> discrepancy;  // |r_series - r_quadrature| when both present
};

// Adaptive quadrature of int_0^inf pdf_X cdf_Y, absolute error <= tol.
// tol must lie in (0, 1e-3].
double reliability_quadrature(const Family& strength, const Family& stress, double tol = 1e-9);

// The double sum over polynomial terms with the alternating inner
// series, each inner sum accumulated in log-magnitude/sign-split form
// with compensated summation. Throws non_convergence_error when no
// orientation of the series can certify ctl.tol.
SeriesReliability reliability_series(const Family& strength, const Family& stress,
                                     const SeriesControl& ctl = {});

// Runs both routes and reports them side by side; a diverging series is
// recorded in the result, never suppressed.
StressStrengthResult reliability_both(const Family& strength, const Family& stress,
                                      const SeriesControl& ctl = {}, double quad_tol = 1e-9);

namespace detail {

// Literal term-by-term transcription of the double sum, keeping the
// beta*^(u+k) factor and the beta*^(-u) prefactor uncancelled. Only
// usable where the plain sum converges comfortably; the tests compare it
// against the cancellation-reduced production form at small parameters.
double reliability_series_uncancelled(const Family& strength, const Family& stress,
                                      std::size_t k_terms);

}  // namespace detail

}  // namespace polymix
