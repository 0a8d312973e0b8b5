// Independent verification engine: adaptive quadrature plus report
// generation. Closed forms elsewhere in the library are cross-checked
// against these routines by the test suites and the `check` command.

#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "polymix/family.hpp"
#include "polymix/specfun.hpp"

namespace polymix {

struct QuadratureControl {
    double abs_tol = 1e-10;
    int max_depth = 60;
    double tail_mass_tol = 1e-12;
};

void validate(const QuadratureControl& ctl);

namespace detail {

// Adaptive Simpson with the classic rule-pair error estimate. Pure
// bisection tree: the result does not depend on evaluation order.
template <typename F>
double simpson_adapt(F& g, double a, double fa, double b, double fb, double m, double fm,
                     double whole, double tol, int depth, int max_depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = g(lm);
    const double frm = g(rm);
    const double h = b - a;
    const double left = (h / 12.0) * (fa + 4.0 * flm + fm);
    const double right = (h / 12.0) * (fm + 4.0 * frm + fb);
    const double err = (left + right - whole) / 15.0;
    if (std::abs(err) <= tol) {
        return left + right + err;
    }
    if (depth >= max_depth) {
        throw non_convergence_error("integrate: subdivision depth exhausted");
    }
    return simpson_adapt(g, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1, max_depth) +
           simpson_adapt(g, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace detail

template <typename F>
double integrate(F&& g, double lo, double hi, const QuadratureControl& ctl = {}) {
    validate(ctl);
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::domain_error("integrate: interval must be finite with lo <= hi");
    }
    if (lo == hi) return 0.0;
    // Seed the bisection tree with a uniform partition so narrowly
    // concentrated integrands cannot slip between the initial probes.
    constexpr int kPanels = 16;
    const double width = (hi - lo) / kPanels;
    double total = 0.0;
    for (int p = 0; p < kPanels; ++p) {
        const double a = lo + p * width;
        const double b = p == kPanels - 1 ? hi : a + width;
        const double m = 0.5 * (a + b);
        const double fa = g(a);
        const double fb = g(b);
        const double fm = g(m);
        const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        total += detail::simpson_adapt(g, a, fa, b, fb, m, fm, whole, ctl.abs_tol / kPanels, 0,
                                       ctl.max_depth);
    }
    return total;
}

// Integrates pdf(x) * w(x) over [0, upper]. For d < 1 the density has a
// non-polynomial kink at 0, so the integral is evaluated in the
// transformed variable y = beta x^d where the integrand vanishes
// smoothly at the origin.
template <typename W>
double integrate_pdf_against(const Family& f, W&& w, double upper, const QuadratureControl& ctl = {}) {
    const double d = f.params().d;
    const double beta = f.params().beta;
    if (d >= 1.0) {
        auto g = [&](double x) { return f.pdf(x) * w(x); };
        return integrate(g, 0.0, upper, ctl);
    }
    const double y_upper = beta * std::pow(upper, d);
    auto g = [&](double y) {
        if (y <= 0.0) return 0.0;
        const double x = std::pow(y / beta, 1.0 / d);
        return f.pdf(x) * w(x) * x / (d * y);
    };
    return integrate(g, 0.0, y_upper, ctl);
}

// Smallest convenient x_max with survival(x_max) < mass_tol, located by
// doubling then bisection on the survival function.
double tail_cutoff(const Family& f, double mass_tol);

struct OracleReport {
    std::string quantity;   // normalization | moment(r) | cdf(x)
    double closed_form;
    double oracle_value;    // NaN when the oracle itself failed
    double abs_diff;
    double tolerance;
    bool passed;
};

// Quadrature cross-checks for normalization, moments r = 1..4 and the
// cdf at five grid points. Integration failures become failed reports.
std::vector<OracleReport> check_family(const Family& f, const QuadratureControl& ctl = {});

}  // namespace polymix
