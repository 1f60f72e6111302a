// Serial reference kernel vs OpenMP kernel on full enumeration scans.
//
// usage: bench_kernels [n_max] [repeats]
// Prints one CSV row per (algorithm, n, backend) and checks that both
// backends return identical cost vectors.

#include "bsl/kernels.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

template <class F>
double best_seconds(int repeats, F&& f)
{
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv)
{
    const std::size_t n_max = argc > 1 ? std::stoul(argv[1]) : 12;
    const int repeats = argc > 2 ? std::stoi(argv[2]) : 3;
    const bsl::ProblemParams params(bsl::Rational(5, 2));
    const bsl::AlgorithmSpec specs[] = {bsl::AlgorithmSpec::greedy(), bsl::AlgorithmSpec::ldc(),
                                        bsl::AlgorithmSpec::bal(), bsl::AlgorithmSpec::opt()};

    std::cout << "# threads=" << omp_get_max_threads() << " d=" << params.d().str() << '\n';
    std::cout << "alg,n,sequences,serial_s,parallel_s,speedup\n";
    int mismatches = 0;
    for (const auto& spec : specs) {
        for (std::size_t n = n_max > 2 ? n_max - 2 : 1; n <= n_max; ++n) {
            std::vector<bsl::Rational> serial, parallel;
            const double ts = best_seconds(repeats, [&] { serial = bsl::kernels::serial::sequence_costs(spec, params, n); });
            const double tp =
                best_seconds(repeats, [&] { parallel = bsl::kernels::parallel::sequence_costs(spec, params, n, 0); });
            if (serial != parallel) ++mismatches;
            std::cout << spec.label() << ',' << n << ',' << serial.size() << ',' << ts << ',' << tp << ','
                      << (tp > 0 ? ts / tp : 0.0) << '\n';
        }
    }
    if (mismatches != 0) {
        std::cerr << mismatches << " backend mismatches\n";
        return EXIT_FAILURE;
    }
    return EXIT_SUCCESS;
}
