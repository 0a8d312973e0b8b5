// The polynomial-coefficient exponential-power family
//
//   f(x) = c * (theta_0 + theta_1 x + ... + theta_p x^p) * exp(-beta x^d),  x >= 0
//
// which is a finite mixture of generalized-gamma components: the i-th
// nonzero term, normalized, is the density of G^(1/d) with
// G ~ Gamma(shape (i+1)/d, rate beta). Construction computes the
// normalizing constant and the mixing proportions in log space; all
// evaluators (pdf, cdf, survival, hazard, moments, characteristic
// function) are closed forms on top of the gamma layer, and sampling
// draws exactly from the mixture decomposition.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "polymix/specfun.hpp"

namespace polymix {

// Raw parameter tuple. theta holds the p+1 polynomial coefficients
// theta_0..theta_p; all must be nonnegative and finite with at least one
// positive (the mixture reading requires it), beta > 0, d > 0.
struct FamilyParams {
    std::vector<double> theta;
    double beta = 1.0;
    double d = 1.0;

    int degree() const { return static_cast<int>(theta.size()) - 1; }
};

// Throws std::invalid_argument naming the violated constraint.
void validate(const FamilyParams& params);

// One normalized term of the polynomial: density proportional to
// x^index * exp(-rate * x^power), i.e. GGa(power, rate, index + 1).
struct GammaComponent {
    int index;
    double shape;  // (index + 1) / power
    double rate;
    double power;
};

// Normalized component density at x.
double component_pdf(const GammaComponent& comp, double x);

// Explicit mixture decomposition: one component per nonzero theta_i,
// weights are the mixing proportions of those components (sum to 1).
struct MixtureView {
    std::vector<GammaComponent> components;
    std::vector<double> weights;
};

struct SummaryStats {
    double mean;
    double variance;
    double skewness;
    double excess_kurtosis;
};

struct Draw {
    double value;
    std::uint32_t component;  // polynomial term index i that was drawn
};

struct CfResult {
    std::complex<double> value;
    bool via_quadrature = false;  // true when the moment series diverged
    std::size_t terms = 0;        // series terms consumed (0 for pure quadrature)
};

class Family {
  public:
    explicit Family(FamilyParams params);

    const FamilyParams& params() const { return params_; }
    double log_normalizer() const { return log_c_; }
    double normalizer() const;
    // log of sum_j theta_j beta^(-(j+1)/d) Gamma((j+1)/d), the shared
    // denominator of the closed forms.
    double log_denominator() const { return log_denominator_; }
    const std::vector<double>& mixing_proportions() const { return mp_; }

    double pdf(double x) const;
    double log_pdf(double x) const;  // -inf where the density vanishes
    double cdf(double x) const;
    double survival(double x) const;
    // f(x) / S(x); throws non_convergence_error when S underflows to 0.
    double hazard(double x) const;

    // E(X^r) for real r >= 0, evaluated in log space.
    double raw_moment(double r) const;
    SummaryStats summary_stats() const;

    // Characteristic function E(exp(itX)). cf() evaluates the moment
    // series sum_r (it)^r E(X^r) / r! and falls back to numerical
    // integration when the series diverges (d < 1, or |t| >= beta when
    // d = 1); the fallback is flagged in the result. cf_series throws
    // non_convergence_error instead of falling back.
    CfResult cf(double t, const SeriesControl& ctl = {}) const;
    CfResult cf_series(double t, const SeriesControl& ctl = {}) const;
    std::complex<double> cf_quadrature(double t, double abs_tol = 1e-10) const;

    MixtureView mixture_view() const;

    // Exact sampling: component index ~ mixing proportions, then
    // Gamma((i+1)/d, beta)^(1/d). Deterministic for a given seed and
    // independent of evaluation order (per-index random streams).
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;
    std::vector<Draw> sample_draws(std::size_t n, std::uint64_t seed) const;
    Draw draw_one(std::uint64_t seed, std::uint64_t index) const;

  private:
    FamilyParams params_;
    double log_c_;
    double log_denominator_;
    std::vector<double> mp_;
    std::vector<double> log_num_term_;  // log theta_i - ((i+1)/d) log beta + lgamma((i+1)/d)
    std::vector<std::uint32_t> sample_comp_;  // nonzero component indices
    std::vector<double> sample_cum_;          // matching cumulative weights; last entry is 1.0

    double log_poly(double x) const;  // log sum theta_i x^i
};

Family make_family(FamilyParams params);

}  // namespace polymix
