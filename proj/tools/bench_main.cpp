// Times the OpenMP kernels against their serial references and checks
// that the outputs are identical. Usage: polymix_bench [n]

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "polymix/batch.hpp"
#include "polymix/catalog.hpp"

using namespace polymix;

namespace {

template <typename F>
double best_of(int reps, F&& run) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const double t0 = omp_get_wtime();
        run();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void report(const char* kernel, double serial_s, double parallel_s, bool identical) {
    std::printf("%-16s %10.1f ms %10.1f ms   %.2fx   outputs %s\n", kernel, serial_s * 1e3,
                parallel_s * 1e3, serial_s / parallel_s, identical ? "identical" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n = 2000000;
    if (argc > 1) n = static_cast<std::size_t>(std::strtoull(argv[1], nullptr, 10));

    const Family f = build_named("lindley", std::vector<double>{1.0});
    const Family stress = build_named("exponential", std::vector<double>{2.0});

    std::printf("threads: %d, n = %zu\n", omp_get_max_threads(), n);
    std::printf("%-16s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = 20.0 * static_cast<double>(i) / static_cast<double>(n);
    }
    std::vector<double> a(n), b(n);
    const double t_es = best_of(3, [&] { batch::eval_serial(f, batch::Quantity::Cdf, xs, a); });
    const double t_ep = best_of(3, [&] { batch::eval(f, batch::Quantity::Cdf, xs, b); });
    report("cdf grid", t_es, t_ep, a == b);

    const double t_ss = best_of(3, [&] { batch::sample_into_serial(f, 42, a); });
    const double t_sp = best_of(3, [&] { batch::sample_into(f, 42, b); });
    report("sampling", t_ss, t_sp, a == b);

    double r1 = 0.0, r2 = 0.0;
    const double t_ms = best_of(3, [&] { r1 = batch::mc_reliability_serial(f, stress, n, 7); });
    const double t_mp = best_of(3, [&] { r2 = batch::mc_reliability(f, stress, n, 7); });
    report("mc reliability", t_ms, t_mp, r1 == r2);

    return 0;
}
