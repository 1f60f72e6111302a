#pragma once

// Exhaustive cost scans. Two backends produce identical vectors:
//   serial   - one independent run per input, the reference used in tests;
//   parallel - OpenMP over prefix subtrees, sharing the engine state of
//              common prefixes.
// Results are indexed by lexicographic rank, so reductions over them are
// independent of the worker count.

#include "bsl/algorithms.hpp"
#include "bsl/enumeration.hpp"

#include <vector>

namespace bsl::kernels {

enum class Backend { serial, parallel };

struct ScanOptions {
    Backend backend = Backend::parallel;
    int jobs = 0;  // 0: OpenMP default
};

/// Cost of `spec` on every length-n sequence, entry i for sequence_at(n, i).
std::vector<Rational> sequence_costs(const AlgorithmSpec& spec, const ProblemParams& params, std::size_t n,
                                     const EnumerationBudget& budget, const ScanOptions& options = {});

/// Cost of `spec` on every distinct arrangement of m, entry i for
/// permutation_at(m, i).
std::vector<Rational> permutation_costs(const AlgorithmSpec& spec, const ProblemParams& params,
                                        const RequestMultiset& m, const EnumerationBudget& budget,
                                        const ScanOptions& options = {});

namespace serial {
std::vector<Rational> sequence_costs(const AlgorithmSpec& spec, const ProblemParams& params, std::size_t n);
std::vector<Rational> permutation_costs(const AlgorithmSpec& spec, const ProblemParams& params,
                                        const RequestMultiset& m);
}  // namespace serial

namespace parallel {
std::vector<Rational> sequence_costs(const AlgorithmSpec& spec, const ProblemParams& params, std::size_t n,
                                     int jobs);
std::vector<Rational> permutation_costs(const AlgorithmSpec& spec, const ProblemParams& params,
                                        const RequestMultiset& m, int jobs);
}  // namespace parallel

}  // namespace bsl::kernels
