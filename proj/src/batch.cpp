#include "polymix/batch.hpp"

#include <cstdint>
#include <exception>
#include <stdexcept>

namespace polymix::batch {

namespace {

double eval_one(const Family& f, Quantity q, double x) {
    switch (q) {
        case Quantity::Pdf:
            return f.pdf(x);
        case Quantity::Cdf:
            return f.cdf(x);
        case Quantity::Survival:
            return f.survival(x);
        case Quantity::Hazard:
            return f.hazard(x);
    }
    throw std::logic_error("batch::eval: unknown quantity");
}

void require_spans(std::size_t xs, std::size_t out) {
    if (xs != out) {
        throw std::invalid_argument("batch::eval: xs and out must have equal length");
    }
}

// OpenMP does not propagate exceptions out of a parallel region; stash
// the first one and rethrow after the join.
class ErrorLatch {
  public:
    void capture() {
#pragma omp critical(polymix_batch_error)
        {
            if (!error_) error_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (error_) std::rethrow_exception(error_);
    }

  private:
    std::exception_ptr error_;
};

}  // namespace

void eval(const Family& f, Quantity q, std::span<const double> xs, std::span<double> out) {
    require_spans(xs.size(), out.size());
    ErrorLatch latch;
    const std::int64_t n = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = eval_one(f, q, xs[static_cast<std::size_t>(i)]);
        } catch (...) {
            latch.capture();
        }
    }
    latch.rethrow();
}

void eval_serial(const Family& f, Quantity q, std::span<const double> xs, std::span<double> out) {
    require_spans(xs.size(), out.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out[i] = eval_one(f, q, xs[i]);
    }
}

void sample_into(const Family& f, std::uint64_t seed, std::span<double> out,
                 std::span<std::uint32_t> components) {
    if (!components.empty() && components.size() != out.size()) {
        throw std::invalid_argument("batch::sample_into: components span length mismatch");
    }
    const std::int64_t n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const Draw d = f.draw_one(seed, static_cast<std::uint64_t>(i));
        out[static_cast<std::size_t>(i)] = d.value;
        if (!components.empty()) components[static_cast<std::size_t>(i)] = d.component;
    }
}

void sample_into_serial(const Family& f, std::uint64_t seed, std::span<double> out,
                        std::span<std::uint32_t> components) {
    if (!components.empty() && components.size() != out.size()) {
        throw std::invalid_argument("batch::sample_into: components span length mismatch");
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Draw d = f.draw_one(seed, i);
        out[i] = d.value;
        if (!components.empty()) components[i] = d.component;
    }
}

double mc_reliability(const Family& strength, const Family& stress, std::size_t n,
                      std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("mc_reliability: n must be >= 1");
    std::int64_t wins = 0;
    const std::int64_t nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) reduction(+ : wins)
    for (std::int64_t i = 0; i < nn; ++i) {
        const std::uint64_t k = static_cast<std::uint64_t>(i);
        const double x = strength.draw_one(seed, 2 * k).value;
        const double y = stress.draw_one(seed, 2 * k + 1).value;
        if (y < x) ++wins;
    }
    return static_cast<double>(wins) / static_cast<double>(n);
}

double mc_reliability_serial(const Family& strength, const Family& stress, std::size_t n,
                             std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("mc_reliability: n must be >= 1");
    std::int64_t wins = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = strength.draw_one(seed, 2 * i).value;
        const double y = stress.draw_one(seed, 2 * i + 1).value;
        if (y < x) ++wins;
    }
    return static_cast<double>(wins) / static_cast<double>(n);
}

}  // namespace polymix::batch
