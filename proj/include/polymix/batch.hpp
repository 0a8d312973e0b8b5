// Bulk kernels over a shared immutable Family: grid evaluation, mixture
// sampling and Monte Carlo stress-strength estimation. Each kernel has
// an OpenMP-parallel entry point and a serial reference twin; the two
// are bit-identical by construction (per-index work, per-index random
// streams, integer reductions), which the tests assert and the bench
// tool times.

#pragma once

#include <cstdint>
#include <span>

#include "polymix/family.hpp"

namespace polymix::batch {

enum class Quantity { Pdf, Cdf, Survival, Hazard };

// out[i] = quantity(f, xs[i]); xs and out must have equal length.
void eval(const Family& f, Quantity q, std::span<const double> xs, std::span<double> out);
void eval_serial(const Family& f, Quantity q, std::span<const double> xs, std::span<double> out);

// out[i] = i-th draw for this seed; optional components span (same
// length as out, or empty) receives the mixture component indices.
void sample_into(const Family& f, std::uint64_t seed, std::span<double> out,
                 std::span<std::uint32_t> components = {});
void sample_into_serial(const Family& f, std::uint64_t seed, std::span<double> out,
                        std::span<std::uint32_t> components = {});

// Fraction of n independent pairs (X_i, Y_i) with Y_i < X_i; the Monte
// Carlo oracle for P(Y < X). Exact integer reduction, so thread count
// does not change the result.
double mc_reliability(const Family& strength, const Family& stress, std::size_t n,
                      std::uint64_t seed);
double mc_reliability_serial(const Family& strength, const Family& stress, std::size_t n,
                             std::uint64_t seed);

}  // namespace polymix::batch
