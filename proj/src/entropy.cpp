#include "polymix/entropy.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "polymix/oracle.hpp"

namespace polymix {

namespace {

void require_order(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha) || std::abs(alpha - 1.0) <= 1e-9) {
        throw std::domain_error("tsallis: order alpha must be positive, finite and != 1");
    }
}

// Upper bound on int_X^inf f^alpha dx once the polynomial part is
// dominated by half the exponential decay.
double tail_bound(const Family& f, double alpha, double x) {
    const FamilyParams& p = f.params();
    const double z = 0.5 * alpha * p.beta * std::pow(x, p.d);
    if (!std::isfinite(z)) return 0.0;
    // log sum theta_i x^i via log_pdf = log c + log poly - beta x^d.
    const double log_poly = f.log_pdf(x) - f.log_normalizer() + p.beta * std::pow(x, p.d);
    if (!(alpha * log_poly <= z)) {
        return std::numeric_limits<double>::infinity();  // poly not yet dominated; move out
    }
    const double a = 1.0 / p.d;
    const double q = reg_upper_gamma(a, z);
    if (q == 0.0) return 0.0;
    const double log_bound = alpha * f.log_normalizer() - std::log(p.d) -
                             a * std::log(0.5 * alpha * p.beta) + std::lgamma(a) + std::log(q);
    return std::exp(log_bound);
}

}  // namespace

double tsallis_integer(const Family& f, int alpha, int alpha_cap) {
    if (alpha < 2 || alpha > alpha_cap) {
        throw std::domain_error("tsallis_integer: alpha must be an integer in [2, " +
                                std::to_string(alpha_cap) + "]");
    }
    const FamilyParams& p = f.params();

    // alpha-fold self-convolution of theta: conv_s = sum over index
    // tuples with i_1 + ... + i_alpha = s of theta_{i_1} ... theta_{i_alpha}.
    std::vector<double> conv = p.theta;
    for (int round = 1; round < alpha; ++round) {
        std::vector<double> next(conv.size() + p.theta.size() - 1, 0.0);
        for (std::size_t i = 0; i < conv.size(); ++i) {
            if (conv[i] == 0.0) continue;
            for (std::size_t j = 0; j < p.theta.size(); ++j) {
                next[i + j] += conv[i] * p.theta[j];
            }
        }
        conv = std::move(next);
    }
    for (double v : conv) {
        if (!std::isfinite(v)) {
            throw std::overflow_error("tsallis_integer: coefficient convolution overflowed");
        }
    }

    const double log_ab = std::log(static_cast<double>(alpha) * p.beta);
    std::vector<double> logs;
    logs.reserve(conv.size());
    for (std::size_t s = 0; s < conv.size(); ++s) {
        if (conv[s] == 0.0) continue;
        const double a = (static_cast<double>(s) + 1.0) / p.d;
        logs.push_back(std::log(conv[s]) + std::lgamma(a) - a * log_ab);
    }
    const double integral = std::exp(static_cast<double>(alpha) * f.log_normalizer() -
                                     std::log(p.d) + log_sum_exp(logs));
    return (1.0 - integral) / (static_cast<double>(alpha) - 1.0);
}

double tsallis_quadrature(const Family& f, double alpha, double tol) {
    require_order(alpha);
    if (!(tol > 0.0) || !(tol <= 1e-3)) {
        throw std::domain_error("tsallis_quadrature: tol must lie in (0, 1e-3]");
    }
    const FamilyParams& p = f.params();
    const double target = tol * std::abs(alpha - 1.0);

    // Integrate in y = alpha beta x^d, which normalizes the decay to
    // e^-y whatever alpha is and keeps the interval short. The integrand
    // is assembled in log form because pdf^alpha underflows double range
    // long before f^alpha itself is negligible when alpha is small.
    const double ab = alpha * p.beta;
    const double log_pref = -std::log(p.d) - std::log(ab) / p.d;
    auto integrand_y = [&](double y) {
        if (y <= 0.0) return 0.0;
        const double x = std::pow(y / ab, 1.0 / p.d);
        const double lp = f.log_pdf(x);
        if (!std::isfinite(lp)) return 0.0;
        return std::exp(alpha * lp + log_pref + (1.0 / p.d - 1.0) * std::log(y));
    };

    // Tail cutoff by doubling in x against the analytic bound.
    double x_up = tail_cutoff(f, 1e-6);
    for (int i = 0; i < 300 && tail_bound(f, alpha, x_up) >= 0.1 * target; ++i) {
        x_up *= 1.4;
    }
    const double y_up = ab * std::pow(x_up, p.d);

    // Near y = 0 the integrand behaves like y^((k alpha + 1)/d - 1) with
    // k the leading polynomial power; unless that exponent is a
    // nonnegative integer, integrate the first stretch in y = u^m to
    // lift it to a smooth power.
    int lead = 0;
    while (p.theta[static_cast<std::size_t>(lead)] == 0.0) ++lead;
    const double rise = (static_cast<double>(lead) * alpha + 1.0) / p.d;  // e0 + 1
    const bool clean = p.d == 1.0 && std::floor(alpha) == alpha &&
                       std::abs(rise - std::round(rise)) < 1e-12;

    auto run = [&](double abs_tol) {
        QuadratureControl qc;
        qc.abs_tol = abs_tol;
        double integral = 0.0;
        double lo = 0.0;
        if (!clean) {
            const double y1 = std::min(1.0, 0.5 * y_up);
            const int m = std::min(64, std::max(2, static_cast<int>(std::ceil(5.0 / rise))));
            const double mm = static_cast<double>(m);
            auto mapped = [&](double u) {
                if (u <= 0.0) return 0.0;
                return integrand_y(std::pow(u, mm)) * mm * std::pow(u, mm - 1.0);
            };
            integral += integrate(mapped, 0.0, std::pow(y1, 1.0 / mm), qc);
            lo = y1;
        }
        integral += integrate(integrand_y, lo, y_up, qc);
        return integral;
    };

    // Coarse pass to learn the integral's magnitude, then refine with a
    // tolerance clamped above its roundoff floor.
    const double coarse = run(std::max(1e-6, 0.45 * target));
    const double integral = run(std::max(0.45 * target, 1e-13 * std::abs(coarse)));
    return (1.0 - integral) / (alpha - 1.0);
}

double tsallis(const Family& f, double alpha, double tol) {
    require_order(alpha);
    if (alpha >= 2.0 && alpha <= 8.0 && std::floor(alpha) == alpha) {
        return tsallis_integer(f, static_cast<int>(alpha));
    }
    return tsallis_quadrature(f, alpha, tol);
}

}  // namespace polymix
