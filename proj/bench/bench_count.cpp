// Compares the counting kernel against the serial reference enumeration and
// reports the speedup of the OpenMP path over one thread.
//
//   bench_count [x_kernel] [x_naive]
//
// defaults: x_kernel = 1e6, x_naive = 2e4.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gshape/arithstat.hpp"
#include "naive_count.hpp"

using namespace gshape;

namespace {

template <typename F>
double time_s(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const double x_kernel = argc > 1 ? std::atof(argv[1]) : 1e6;
    const double x_naive = argc > 2 ? std::atof(argv[2]) : 2e4;
    const Rectangle r = make_rectangle(1.0, 2.0, 1.0, 2.0);
#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
#else
    const int max_threads = 1;
#endif

    std::printf("region [1,2]x[1,2]\n");
    std::printf("%-34s %12s %12s %10s\n", "path", "total", "carefree", "seconds");

    reference::NaiveCounts naive;
    const double t_naive = time_s([&] { naive = reference::count_triples_naive(r, x_naive); });
    std::printf("%-34s %12lld %12lld %10.3f\n", "serial reference (x_naive)",
                static_cast<long long>(naive.total), static_cast<long long>(naive.carefree),
                t_naive);

    CountResult k1;
    const double t_k1 =
        time_s([&] { k1 = count_triples(r, x_naive, CountMode::carefree, 1); });
    std::printf("%-34s %12lld %12lld %10.3f\n", "kernel, 1 thread (x_naive)",
                static_cast<long long>(k1.total), static_cast<long long>(k1.carefree), t_k1);
    if (k1.total != naive.total || k1.carefree != naive.carefree) {
        std::printf("MISMATCH against the serial reference\n");
        return 1;
    }

    CountResult big1, bigN;
    const double t_big1 =
        time_s([&] { big1 = count_triples(r, x_kernel, CountMode::carefree, 1); });
    std::printf("%-34s %12lld %12lld %10.3f\n", "kernel, 1 thread (x_kernel)",
                static_cast<long long>(big1.total), static_cast<long long>(big1.carefree),
                t_big1);
    const double t_bigN =
        time_s([&] { bigN = count_triples(r, x_kernel, CountMode::carefree, max_threads); });
    std::printf("%-34s %12lld %12lld %10.3f\n", "kernel, max threads (x_kernel)",
                static_cast<long long>(bigN.total), static_cast<long long>(bigN.carefree),
                t_bigN);
    if (big1.total != bigN.total || big1.carefree != bigN.carefree) {
        std::printf("MISMATCH between thread counts\n");
        return 1;
    }
    std::printf("threads: %d, parallel speedup: %.2fx\n", max_threads,
                t_bigN > 0 ? t_big1 / t_bigN : 0.0);
    return 0;
}
