#include "polymix/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace polymix {

void validate(const QuadratureControl& ctl) {
    if (!(ctl.abs_tol > 0.0) || !(ctl.tail_mass_tol > 0.0)) {
        throw std::invalid_argument("QuadratureControl: tolerances must be positive");
    }
    if (ctl.max_depth < 10) {
        throw std::invalid_argument("QuadratureControl: max_depth must be >= 10");
    }
}

double tail_cutoff(const Family& f, double mass_tol) {
    if (!(mass_tol > 0.0) || !(mass_tol < 1e-3)) {
        throw std::domain_error("tail_cutoff: mass_tol must lie in (0, 1e-3)");
    }
    // Start at the scale of the lightest component and double until the
    // survival mass drops below the target.
    double hi = std::pow(1.0 / f.params().beta, 1.0 / f.params().d);
    double lo = 0.0;
    for (int i = 0; i < 400 && f.survival(hi) >= mass_tol; ++i) {
        lo = hi;
        hi *= 2.0;
    }
    // Bisect back so the cutoff is not wastefully far out.
    for (int i = 0; i < 60 && (hi - lo) > 0.01 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f.survival(mid) < mass_tol) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

std::vector<OracleReport> check_family(const Family& f, const QuadratureControl& ctl) {
    validate(ctl);
    std::vector<OracleReport> reports;
    const double upper = tail_cutoff(f, ctl.tail_mass_tol);

    auto run = [&](const std::string& quantity, double closed, double tolerance, auto&& weight,
                   double to) {
        OracleReport rep;
        rep.quantity = quantity;
        rep.closed_form = closed;
        rep.tolerance = tolerance;
        QuadratureControl qc = ctl;
        // Keep the quadrature target above the roundoff floor of the
        // integral's own magnitude.
        qc.abs_tol = std::max(std::min(ctl.abs_tol, 0.05 * tolerance), 1e-14 * std::abs(closed));
        try {
            rep.oracle_value = integrate_pdf_against(f, weight, to, qc);
            rep.abs_diff = std::abs(rep.closed_form - rep.oracle_value);
            rep.passed = rep.abs_diff <= tolerance;
        } catch (const non_convergence_error&) {
            rep.oracle_value = std::numeric_limits<double>::quiet_NaN();
            rep.abs_diff = std::numeric_limits<double>::quiet_NaN();
            rep.passed = false;
        }
        reports.push_back(rep);
    };

    run("normalization", 1.0, 1e-8, [](double) { return 1.0; }, upper);
    for (int r = 1; r <= 4; ++r) {
        const double closed = f.raw_moment(static_cast<double>(r));
        const double tolerance = 1e-7 * closed;
        // The x^r weight inflates the truncated tail, so push the cutoff
        // far enough out that the discarded mass stays negligible.
        const double mass =
            std::max(std::min(ctl.tail_mass_tol, 2e-11 * std::max(1.0, closed) /
                                                     std::max(1.0, std::pow(upper, r))),
                     1e-120);
        const double upper_r = tail_cutoff(f, mass);
        run("moment(" + std::to_string(r) + ")", closed, tolerance,
            [r](double x) { return std::pow(x, static_cast<double>(r)); }, upper_r);
    }
    for (double frac : {0.05, 0.15, 0.35, 0.60, 0.85}) {
        const double x = frac * upper;
        char label[64];
        std::snprintf(label, sizeof(label), "cdf(%.6g)", x);
        run(label, f.cdf(x), 1e-8, [](double) { return 1.0; }, x);
    }
    return reports;
}

}  // namespace polymix
