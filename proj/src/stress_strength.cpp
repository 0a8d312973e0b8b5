#include "polymix/stress_strength.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "polymix/oracle.hpp"

namespace polymix {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// log |term_k| of the inner alternating series for one (i, j) pair:
//   term_k = (-1)^k beta*^k Gamma(s + k q) / (k! (u + k) beta^(s + k q))
// where s = (i + j + 2) / d, u = (j + 1) / d*, q = d* / d.
struct InnerTerms {
    double s, u, q, log_beta_star, log_beta;

    double log_mag(std::size_t k) const {
        const double kk = static_cast<double>(k);
        const double g = s + kk * q;
        return kk * log_beta_star + std::lgamma(g) - std::lgamma(kk + 1.0) - std::log(u + kk) -
               g * log_beta;
    }
};

struct InnerSum {
    double value;        // inner sum, true scale
    double round_error;  // estimated rounding error; truncation is already
                         // held below ctl.tol * |value| by the stop rule
    std::size_t terms;
};

// Plain truncated summation with a dynamically rescaled sign-split
// accumulator. Throws when the terms outgrow double range, hit the term
// budget, or cancel past the point where the tolerance is certifiable.
InnerSum sum_truncated(const InnerTerms& t, const SeriesControl& ctl) {
    double shift = t.log_mag(0);
    if (shift > 600.0) {
        throw non_convergence_error("reliability_series: inner terms exceed double range");
    }
    double pos = 0.0, pos_c = 0.0;
    double neg = 0.0, neg_c = 0.0;
    auto add = [](double& sum, double& comp, double x) {
        const double y = x - comp;
        const double tt = sum + y;
        comp = (tt - sum) - y;
        sum = tt;
    };
    double prev_log = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < ctl.max_terms; ++k) {
        const double lk = t.log_mag(k);
        if (lk > 600.0) {
            throw non_convergence_error("reliability_series: inner terms exceed double range");
        }
        if (lk > shift) {
            const double scale = std::exp(shift - lk);
            pos *= scale;
            pos_c *= scale;
            neg *= scale;
            neg_c *= scale;
            shift = lk;
        }
        const double a = std::exp(lk - shift);
        if (k % 2 == 0) {
            add(pos, pos_c, a);
        } else {
            add(neg, neg_c, a);
        }
        const double partial = pos - neg;
        if (k >= 2 && lk < prev_log && a <= ctl.tol * std::abs(partial)) {
            if (std::abs(partial) < 1e-13 * (pos + neg)) {
                throw non_convergence_error(
                    "reliability_series: alternating cancellation exhausted double precision");
            }
            const double err = 4.0 * kEps * (pos + neg) * std::exp(shift);
            return InnerSum{partial * std::exp(shift), err, k + 1};
        }
        prev_log = lk;
    }
    throw non_convergence_error("reliability_series: inner terms stopped decreasing after max_terms");
}

// Alternating-series acceleration (Cohen, Rodriguez Villegas, Zagier):
// sums sum_k (-1)^k a_k from n leading terms with geometric error decay,
// which also evaluates the Abel limit on the convergence boundary. Used
// only when both plain orientations sit on the knife edge q = 1,
// beta* ~= beta.
double cvz_sum(const std::vector<double>& a, std::size_t n) {
    double d = std::pow(3.0 + std::sqrt(8.0), static_cast<double>(n));
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        c = b - c;
        s += c * a[k];
        const double kk = static_cast<double>(k);
        const double nn = static_cast<double>(n);
        b *= (kk + nn) * (kk - nn) / ((kk + 0.5) * (kk + 1.0));
    }
    return s / d;
}

InnerSum sum_accelerated(const InnerTerms& t, const SeriesControl& ctl) {
    constexpr std::size_t kTerms = 96;
    const std::size_t n = std::min(kTerms, ctl.max_terms);
    std::vector<double> logs(n);
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        logs[k] = t.log_mag(k);
        m = std::max(m, logs[k]);
    }
    if (m > 600.0) {
        throw non_convergence_error("reliability_series: inner terms exceed double range");
    }
    std::vector<double> a(n);
    for (std::size_t k = 0; k < n; ++k) a[k] = std::exp(logs[k] - m);
    const double full = cvz_sum(a, n);
    const double check = cvz_sum(a, n >= 8 ? n - 8 : n);
    const double err = (std::abs(full - check) + 16.0 * kEps) * std::exp(m);
    return InnerSum{full * std::exp(m), err, n};
}

struct OrientedSeries {
    double value;
    double abs_error;
    std::size_t terms;
};

enum class InnerMethod { Truncated, Accelerated };

// Evaluates R for the (strength, stress) orientation as written:
//   R = c tau / d * sum_ij theta_i theta*_j * inner(i, j).
OrientedSeries evaluate_oriented(const Family& strength, const Family& stress,
                                 const SeriesControl& ctl, InnerMethod method) {
    const FamilyParams& sp = strength.params();
    const FamilyParams& tp = stress.params();
    const double log_pre = strength.log_normalizer() - stress.log_denominator() - std::log(sp.d);
    const double q = tp.d / sp.d;

    double total = 0.0, total_c = 0.0;
    double err_total = 0.0;
    std::size_t terms = 0;
    for (std::size_t i = 0; i < sp.theta.size(); ++i) {
        if (sp.theta[i] == 0.0) continue;
        for (std::size_t j = 0; j < tp.theta.size(); ++j) {
            if (tp.theta[j] == 0.0) continue;
            InnerTerms t;
            t.s = (static_cast<double>(i) + static_cast<double>(j) + 2.0) / sp.d;
            t.u = (static_cast<double>(j) + 1.0) / tp.d;
            t.q = q;
            t.log_beta_star = std::log(tp.beta);
            t.log_beta = std::log(sp.beta);
            const InnerSum inner =
                method == InnerMethod::Truncated ? sum_truncated(t, ctl) : sum_accelerated(t, ctl);
            const double weight = std::exp(log_pre + std::log(sp.theta[i]) + std::log(tp.theta[j]));
            const double x = weight * inner.value - total_c;
            const double y = total + x;
            total_c = (y - total) - x;
            total = y;
            err_total += weight * inner.round_error;
            terms += inner.terms;
        }
    }
    return OrientedSeries{total, err_total, terms};
}

}  // namespace

double reliability_quadrature(const Family& strength, const Family& stress, double tol) {
    if (!(tol > 0.0) || !(tol <= 1e-3)) {
        throw std::domain_error("reliability_quadrature: tol must lie in (0, 1e-3]");
    }
    const double mass = 0.1 * tol;
    const double upper = std::max(tail_cutoff(strength, mass), tail_cutoff(stress, mass));
    QuadratureControl qc;
    qc.abs_tol = 0.8 * tol;
    return integrate_pdf_against(
        strength, [&stress](double x) { return stress.cdf(x); }, upper, qc);
}

SeriesReliability reliability_series(const Family& strength, const Family& stress,
                                     const SeriesControl& ctl) {
    validate(ctl);
    const double q = stress.params().d / strength.params().d;
    const double ratio = stress.params().beta / std::pow(strength.params().beta, q);

    auto accept = [&](const OrientedSeries& s, bool complemented) {
        const double value = complemented ? 1.0 - s.value : s.value;
        if (s.abs_error > 4.0 * ctl.tol * std::max(std::abs(value), 1e-3)) {
            throw non_convergence_error(
                "reliability_series: accumulated rounding exceeds the requested tolerance");
        }
        return SeriesReliability{value, s.terms};
    };

    // Orientation choice: the inner terms scale like ratio^k k^((q-1)k),
    // so the written orientation only converges at a practical rate when
    // q < 1 or (q = 1 and beta* < beta). Swapping strength and stress
    // flips the regime via R = 1 - P(X < Y).
    const bool direct_plausible = q < 1.0 || (q == 1.0 && ratio < 0.995);
    const bool swapped_plausible = q > 1.0 || (q == 1.0 && ratio > 1.0 / 0.995);

    std::string first_error;
    if (direct_plausible || (!swapped_plausible && q != 1.0)) {
        try {
            return accept(evaluate_oriented(strength, stress, ctl, InnerMethod::Truncated), false);
        } catch (const non_convergence_error& e) {
            first_error = e.what();
        }
    }
    if (swapped_plausible || !first_error.empty()) {
        try {
            return accept(evaluate_oriented(stress, strength, ctl, InnerMethod::Truncated), true);
        } catch (const non_convergence_error& e) {
            if (first_error.empty()) first_error = e.what();
        }
    }
    if (q == 1.0) {
        // Knife edge beta* ~= beta: both plain orientations stall with
        // term ratio ~ 1; the accelerated summation evaluates the limit.
        return accept(evaluate_oriented(strength, stress, ctl, InnerMethod::Accelerated), false);
    }
    throw non_convergence_error(first_error.empty()
                                    ? "reliability_series: no orientation converges"
                                    : first_error);
}

StressStrengthResult reliability_both(const Family& strength, const Family& stress,
                                      const SeriesControl& ctl, double quad_tol) {
    StressStrengthResult res;
    res.r_quadrature = reliability_quadrature(strength, stress, quad_tol);
    try {
        const SeriesReliability s = reliability_series(strength, stress, ctl);
        res.r_series = s.value;
        res.terms_used = s.terms;
        res.discrepancy = std::abs(s.value - res.r_quadrature);
    } catch (const non_convergence_error& e) {
        res.series_error = e.what();
    }
    return res;
}

namespace detail {

double reliability_series_uncancelled(const Family& strength, const Family& stress,
                                      std::size_t k_terms) {
    const FamilyParams& sp = strength.params();
    const FamilyParams& tp = stress.params();
    const double c = strength.normalizer();
    const double tau = std::exp(-stress.log_denominator());
    double total = 0.0;
    for (std::size_t i = 0; i < sp.theta.size(); ++i) {
        for (std::size_t j = 0; j < tp.theta.size(); ++j) {
            if (sp.theta[i] == 0.0 || tp.theta[j] == 0.0) continue;
            const double u = (static_cast<double>(j) + 1.0) / tp.d;
            const double pre = std::pow(tp.beta, -u);
            double inner = 0.0;
            for (std::size_t k = 0; k < k_terms; ++k) {
                const double kk = static_cast<double>(k);
                const double b = (static_cast<double>(i) + static_cast<double>(j) + kk * tp.d + 2.0) /
                                 sp.d;
                const double sign = k % 2 == 0 ? 1.0 : -1.0;
                inner += sign * std::pow(tp.beta, u + kk) * std::tgamma(b) /
                         (std::tgamma(kk + 1.0) * (u + kk) * std::pow(sp.beta, b));
            }
            total += sp.theta[i] * tp.theta[j] * pre * inner;
        }
    }
    return c * tau / sp.d * total;
}

}  // namespace detail

}  // namespace polymix
