#include "polymix/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polymix {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min() / kEps;

void require_gamma_args(double a, double z, const char* who) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw std::domain_error(std::string(who) + ": shape a must be positive and finite");
    }
    if (!(z >= 0.0) || !std::isfinite(z)) {
        throw std::domain_error(std::string(who) + ": argument z must be nonnegative and finite");
    }
}

// P(a, z) by the convergent series, valid for z < a + 1.
// Returns the regularized value.
double gser(double a, double z) {
    if (z == 0.0) return 0.0;
    double ap = a;
    double sum = 1.0 / a;
    double term = sum;
    for (int n = 0; n < 10000; ++n) {
        ap += 1.0;
        term *= z / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) {
            return sum * std::exp(-z + a * std::log(z) - std::lgamma(a));
        }
    }
    throw non_convergence_error("reg_lower_gamma: series failed to converge");
}

// Q(a, z) by the modified Lentz continued fraction, valid for z >= a + 1.
double gcf(double a, double z) {
    double b = z + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 10000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) {
            return std::exp(-z + a * std::log(z) - std::lgamma(a)) * h;
        }
    }
    throw non_convergence_error("reg_upper_gamma: continued fraction failed to converge");
}

}  // namespace

SeriesControl::SeriesControl(double tol_, std::size_t max_terms_) : tol(tol_), max_terms(max_terms_) {
    polymix::validate(*this);
}

void validate(const SeriesControl& ctl) {
    if (!(ctl.tol > 0.0) || !(ctl.tol < 1.0)) {
        throw std::invalid_argument("SeriesControl: tol must lie in (0, 1)");
    }
    if (ctl.max_terms < 1) {
        throw std::invalid_argument("SeriesControl: max_terms must be >= 1");
    }
}

double log_gamma(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw std::domain_error("log_gamma: argument must be positive and finite");
    }
    return std::lgamma(a);
}

double gamma_fn(double a) {
    return std::exp(log_gamma(a));
}

double reg_lower_gamma(double a, double z) {
    require_gamma_args(a, z, "reg_lower_gamma");
    return z < a + 1.0 ? gser(a, z) : 1.0 - gcf(a, z);
}

double reg_upper_gamma(double a, double z) {
    require_gamma_args(a, z, "reg_upper_gamma");
    return z < a + 1.0 ? 1.0 - gser(a, z) : gcf(a, z);
}

double lower_incomplete_gamma(double a, double z) {
    require_gamma_args(a, z, "lower_incomplete_gamma");
    if (z == 0.0) return 0.0;
    if (z < a + 1.0) {
        // gser's sum equals gamma(a,z) * z^-a * e^z; undo the scaling
        // without the round trip through lgamma.
        double ap = a;
        double sum = 1.0 / a;
        double term = sum;
        for (int n = 0; n < 10000; ++n) {
            ap += 1.0;
            term *= z / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * kEps) {
                return sum * std::exp(-z + a * std::log(z));
            }
        }
        throw non_convergence_error("lower_incomplete_gamma: series failed to converge");
    }
    // In the continued-fraction regime the lower part dominates, so the
    // subtraction loses at most one bit.
    return std::exp(std::lgamma(a)) * (1.0 - gcf(a, z));
}

double upper_incomplete_gamma(double a, double z) {
    require_gamma_args(a, z, "upper_incomplete_gamma");
    return std::exp(std::lgamma(a)) * reg_upper_gamma(a, z);
}

double lower_incomplete_gamma_series(double a, double z, const SeriesControl& ctl) {
    require_gamma_args(a, z, "lower_incomplete_gamma_series");
    validate(ctl);
    if (z == 0.0) return 0.0;

    // term_k = (-1)^k z^(a+k) / (k! (a+k)); ratio of successive
    // magnitudes is z (a+k) / ((k+1)(a+k+1)).
    double term = std::pow(z, a) / a;
    double sum = term;
    double comp = 0.0;  // Kahan compensation
    for (std::size_t k = 1; k < ctl.max_terms; ++k) {
        term *= -z * (a + static_cast<double>(k) - 1.0) /
                (static_cast<double>(k) * (a + static_cast<double>(k)));
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (!std::isfinite(term)) {
            throw non_convergence_error("lower_incomplete_gamma_series: terms overflowed before convergence");
        }
        if (std::abs(term) <= ctl.tol * std::abs(sum)) {
            return sum;
        }
    }
    throw non_convergence_error("lower_incomplete_gamma_series: max_terms reached before tolerance");
}

double log_sum_exp(std::span<const double> logs) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : logs) m = std::max(m, x);
    if (!std::isfinite(m)) return m;
    double s = 0.0;
    for (double x : logs) {
        if (std::isfinite(x)) s += std::exp(x - m);
    }
    return m + std::log(s);
}

}  // namespace polymix
