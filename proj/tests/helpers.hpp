// Shared test utilities: independent oracles kept deliberately separate
// from the library code paths they check.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "polymix/family.hpp"

namespace testutil {

inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool close_abs(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
}

// One-sample Kolmogorov-Smirnov statistic against an analytic cdf.
template <typename Cdf>
double ks_statistic(std::vector<double> sample, Cdf&& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, std::max((static_cast<double>(i) + 1.0) / n - f,
                                 f - static_cast<double>(i) / n));
    }
    return d;
}

// Asymptotic Kolmogorov tail Q(lambda) = 2 sum (-1)^(k-1) exp(-2 k^2 lambda^2).
inline double kolmogorov_tail(double lambda) {
    double s = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = 2.0 * std::exp(-2.0 * static_cast<double>(k) * static_cast<double>(k) *
                                           lambda * lambda);
        s += (k % 2 == 1 ? term : -term);
        if (term < 1e-16) break;
    }
    return std::min(1.0, s);
}

// Critical D for the one-sample KS test at the given significance.
inline double ks_critical(std::size_t n, double significance) {
    double lo = 0.1, hi = 5.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (kolmogorov_tail(mid) > significance) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi) / std::sqrt(static_cast<double>(n));
}

// Brute-force index-tuple sum for int f^alpha of a degree-p family:
// c^alpha / d * sum over all (p+1)^alpha tuples of
// theta_i1...theta_ialpha Gamma((i1+...+ialpha+1)/d) / (alpha beta)^(...).
// Exponential cost; test oracle only.
inline double tsallis_integral_enumerated(const polymix::Family& f, int alpha) {
    const polymix::FamilyParams& p = f.params();
    const std::size_t m = p.theta.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(alpha), 0);
    double total = 0.0;
    for (;;) {
        double coeff = 1.0;
        std::size_t s = 0;
        for (std::size_t t : idx) {
            coeff *= p.theta[t];
            s += t;
        }
        if (coeff != 0.0) {
            const double a = (static_cast<double>(s) + 1.0) / p.d;
            total += coeff * std::exp(std::lgamma(a) -
                                      a * std::log(static_cast<double>(alpha) * p.beta));
        }
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == m) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos == idx.size()) break;
    }
    return std::exp(static_cast<double>(alpha) * f.log_normalizer()) / p.d * total;
}

}  // namespace testutil
