#include "polymix/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polymix/oracle.hpp"
#include "polymix/rng.hpp"

namespace polymix {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_x(double x, const char* who) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw std::domain_error(std::string(who) + ": x must be nonnegative and finite");
    }
}
}  // namespace

void validate(const FamilyParams& params) {
    if (params.theta.empty()) {
        throw std::invalid_argument("FamilyParams: theta must hold at least one coefficient");
    }
    bool any_positive = false;
    for (std::size_t i = 0; i < params.theta.size(); ++i) {
        const double t = params.theta[i];
        if (!std::isfinite(t) || t < 0.0) {
            throw std::invalid_argument("FamilyParams: theta[" + std::to_string(i) +
                                        "] must be finite and nonnegative");
        }
        if (t > 0.0) any_positive = true;
    }
    if (!any_positive) {
        throw std::invalid_argument("FamilyParams: at least one theta coefficient must be positive");
    }
    if (!(params.beta > 0.0) || !std::isfinite(params.beta)) {
        throw std::invalid_argument("FamilyParams: beta must be positive and finite");
    }
    if (!(params.d > 0.0) || !std::isfinite(params.d)) {
        throw std::invalid_argument("FamilyParams: d must be positive and finite");
    }
}

Family::Family(FamilyParams params) : params_(std::move(params)) {
    polymix::validate(params_);
    const double d = params_.d;
    const double log_beta = std::log(params_.beta);

    const std::size_t n = params_.theta.size();
    log_num_term_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (params_.theta[i] == 0.0) {
            log_num_term_[i] = kNegInf;
            continue;
        }
        const double a = (static_cast<double>(i) + 1.0) / d;
        log_num_term_[i] = std::log(params_.theta[i]) - a * log_beta + std::lgamma(a);
    }
    log_denominator_ = log_sum_exp(log_num_term_);
    log_c_ = std::log(d) - log_denominator_;

    mp_.resize(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mp_[i] = params_.theta[i] == 0.0 ? 0.0 : std::exp(log_num_term_[i] - log_denominator_);
        total += mp_[i];
    }
    for (double& w : mp_) w /= total;

    double cum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (mp_[i] == 0.0) continue;
        cum += mp_[i];
        sample_comp_.push_back(static_cast<std::uint32_t>(i));
        sample_cum_.push_back(cum);
    }
    sample_cum_.back() = 1.0;
}

Family make_family(FamilyParams params) {
    return Family(std::move(params));
}

double Family::normalizer() const {
    return std::exp(log_c_);
}

double Family::log_poly(double x) const {
    // log sum_i theta_i x^i, evaluated by max-shifted summation so large
    // x and high degree cannot overflow.
    const double log_x = std::log(x);
    double m = kNegInf;
    for (std::size_t i = 0; i < params_.theta.size(); ++i) {
        if (params_.theta[i] == 0.0) continue;
        m = std::max(m, std::log(params_.theta[i]) + static_cast<double>(i) * log_x);
    }
    double s = 0.0;
    for (std::size_t i = 0; i < params_.theta.size(); ++i) {
        if (params_.theta[i] == 0.0) continue;
        s += std::exp(std::log(params_.theta[i]) + static_cast<double>(i) * log_x - m);
    }
    return m + std::log(s);
}

double Family::pdf(double x) const {
    require_x(x, "pdf");
    if (x == 0.0) {
        // Continuity limit: only the constant term survives.
        return params_.theta[0] == 0.0 ? 0.0 : std::exp(log_c_) * params_.theta[0];
    }
    return std::exp(log_pdf(x));
}

double Family::log_pdf(double x) const {
    require_x(x, "log_pdf");
    if (x == 0.0) {
        return params_.theta[0] == 0.0 ? kNegInf : log_c_ + std::log(params_.theta[0]);
    }
    const double expo = params_.beta * std::pow(x, params_.d);
    if (!std::isfinite(expo)) return kNegInf;
    return log_c_ + log_poly(x) - expo;
}

double Family::cdf(double x) const {
    require_x(x, "cdf");
    if (x == 0.0) return 0.0;
    const double z = params_.beta * std::pow(x, params_.d);
    if (!std::isfinite(z)) return 1.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < mp_.size(); ++i) {
        if (mp_[i] == 0.0) continue;
        const double a = (static_cast<double>(i) + 1.0) / params_.d;
        acc += mp_[i] * reg_lower_gamma(a, z);
    }
    return std::clamp(acc, 0.0, 1.0);
}

double Family::survival(double x) const {
    require_x(x, "survival");
    if (x == 0.0) return 1.0;
    const double z = params_.beta * std::pow(x, params_.d);
    if (!std::isfinite(z)) return 0.0;
    // Summed from the upper incomplete gammas directly so the deep tail
    // keeps relative accuracy instead of cancelling against 1.
    double acc = 0.0;
    for (std::size_t i = 0; i < mp_.size(); ++i) {
        if (mp_[i] == 0.0) continue;
        const double a = (static_cast<double>(i) + 1.0) / params_.d;
        acc += mp_[i] * reg_upper_gamma(a, z);
    }
    return std::clamp(acc, 0.0, 1.0);
}

double Family::hazard(double x) const {
    require_x(x, "hazard");
    const double s = survival(x);
    if (s <= 0.0) {
        throw non_convergence_error("hazard: survival underflowed to zero this deep in the tail");
    }
    return pdf(x) / s;
}

double Family::raw_moment(double r) const {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw std::domain_error("raw_moment: order r must be nonnegative and finite");
    }
    const double d = params_.d;
    const double log_beta = std::log(params_.beta);
    std::vector<double> terms(params_.theta.size(), kNegInf);
    for (std::size_t i = 0; i < params_.theta.size(); ++i) {
        if (params_.theta[i] == 0.0) continue;
        const double a = (static_cast<double>(i) + r + 1.0) / d;
        terms[i] = std::log(params_.theta[i]) - a * log_beta + std::lgamma(a);
    }
    return std::exp(log_sum_exp(terms) - log_denominator_);
}

SummaryStats Family::summary_stats() const {
    const double m1 = raw_moment(1.0);
    const double m2 = raw_moment(2.0);
    const double m3 = raw_moment(3.0);
    const double m4 = raw_moment(4.0);
    const double var = m2 - m1 * m1;
    const double mu3 = m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1;
    const double mu4 = m4 - 4.0 * m1 * m3 + 6.0 * m1 * m1 * m2 - 3.0 * m1 * m1 * m1 * m1;
    return SummaryStats{
        m1,
        var,
        mu3 / std::pow(var, 1.5),
        mu4 / (var * var) - 3.0,
    };
}

CfResult Family::cf_series(double t, const SeriesControl& ctl) const {
    polymix::validate(ctl);
    if (t == 0.0) return CfResult{{1.0, 0.0}, false, 1};

    const double log_abs_t = std::log(std::abs(t));
    const std::complex<double> rot{0.0, t > 0.0 ? 1.0 : -1.0};

    // term_r = (it)^r E(X^r) / r!, tracked as a log magnitude and a unit
    // phase so intermediate moments cannot overflow.
    std::complex<double> sum{1.0, 0.0};  // r = 0 term
    std::complex<double> unit{1.0, 0.0};
    double prev_log_mag = 0.0;
    for (std::size_t r = 1; r < ctl.max_terms; ++r) {
        const double rr = static_cast<double>(r);
        const double log_mag =
            rr * log_abs_t - std::lgamma(rr + 1.0) + std::log(raw_moment(rr));
        unit *= rot;
        sum += std::exp(log_mag) * unit;
        // Once terms reach ~1e13 the alternating cancellation has already
        // cost more precision than the tolerance allows.
        if (log_mag > 30.0) {
            throw non_convergence_error("cf_series: term magnitudes diverge for this t");
        }
        if (log_mag < prev_log_mag && std::exp(log_mag) <= ctl.tol * std::abs(sum)) {
            return CfResult{sum, false, r + 1};
        }
        prev_log_mag = log_mag;
    }
    throw non_convergence_error("cf_series: max_terms reached before tolerance");
}

std::complex<double> Family::cf_quadrature(double t, double abs_tol) const {
    if (!(abs_tol > 0.0)) {
        throw std::domain_error("cf_quadrature: abs_tol must be positive");
    }
    QuadratureControl qc;
    qc.abs_tol = 0.5 * abs_tol;
    // Truncation error is bounded by the survival mass beyond the cutoff.
    const double upper = tail_cutoff(*this, std::min(0.1 * abs_tol, 1e-4));
    const double re = integrate_pdf_against(*this, [t](double x) { return std::cos(t * x); }, upper, qc);
    const double im = integrate_pdf_against(*this, [t](double x) { return std::sin(t * x); }, upper, qc);
    return {re, im};
}

CfResult Family::cf(double t, const SeriesControl& ctl) const {
    try {
        CfResult res = cf_series(t, ctl);
        if (std::abs(res.value) <= 1.0 + 1e-9) return res;
    } catch (const non_convergence_error&) {
    }
    return CfResult{cf_quadrature(t, 1e-10), true, 0};
}

MixtureView Family::mixture_view() const {
    MixtureView view;
    for (std::size_t i = 0; i < params_.theta.size(); ++i) {
        if (params_.theta[i] == 0.0) continue;
        view.components.push_back(GammaComponent{
            static_cast<int>(i),
            (static_cast<double>(i) + 1.0) / params_.d,
            params_.beta,
            params_.d,
        });
        view.weights.push_back(mp_[i]);
    }
    return view;
}

double component_pdf(const GammaComponent& comp, double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw std::domain_error("component_pdf: x must be nonnegative and finite");
    }
    if (x == 0.0) {
        return comp.index == 0 ? comp.power * std::pow(comp.rate, comp.shape) /
                                     std::exp(std::lgamma(comp.shape))
                               : 0.0;
    }
    const double log_pdf = std::log(comp.power) + comp.shape * std::log(comp.rate) -
                           std::lgamma(comp.shape) + static_cast<double>(comp.index) * std::log(x) -
                           comp.rate * std::pow(x, comp.power);
    return std::exp(log_pdf);
}

Draw Family::draw_one(std::uint64_t seed, std::uint64_t index) const {
    rng::Stream stream(seed, index);
    const double u = stream.uniform01();
    std::uint32_t comp = sample_comp_.back();
    for (std::size_t k = 0; k < sample_cum_.size(); ++k) {
        if (u <= sample_cum_[k]) {
            comp = sample_comp_[k];
            break;
        }
    }
    const double shape = (static_cast<double>(comp) + 1.0) / params_.d;
    const double g = stream.gamma(shape) / params_.beta;
    const double value = params_.d == 1.0 ? g : std::pow(g, 1.0 / params_.d);
    return Draw{value, comp};
}

std::vector<Draw> Family::sample_draws(std::size_t n, std::uint64_t seed) const {
    if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
    std::vector<Draw> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = draw_one(seed, i);
    return out;
}

std::vector<double> Family::sample(std::size_t n, std::uint64_t seed) const {
    if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = draw_one(seed, i).value;
    return out;
}

}  // namespace polymix
