#include "bsl/kernels.hpp"

namespace bsl::kernels {

namespace serial {

std::vector<Rational> sequence_costs(const AlgorithmSpec& spec, const ProblemParams& params, std::size_t n)
{
    const auto count = sequence_count(n);
    std::vector<Rational> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(cost_of(spec, params, sequence_at(n, i)));
    return out;
}

std::vector<Rational> permutation_costs(const AlgorithmSpec& spec, const ProblemParams& params,
                                        const RequestMultiset& m)
{
    EnumerationBudget unlimited;
    unlimited.max_permutations = UINT64_MAX;
    PermutationStream stream(m, unlimited);
    std::vector<Rational> out;
    out.reserve(stream.count());
    RequestSequence s;
    while (stream.next(s)) out.push_back(cost_of(spec, params, s));
    return out;
}

}  // namespace serial

std::vector<Rational> sequence_costs(const AlgorithmSpec& spec, const ProblemParams& params, std::size_t n,
                                     const EnumerationBudget& budget, const ScanOptions& options)
{
    require_sequence_budget(n, budget);
    if (options.backend == Backend::serial) return serial::sequence_costs(spec, params, n);
    return parallel::sequence_costs(spec, params, n, options.jobs);
}

std::vector<Rational> permutation_costs(const AlgorithmSpec& spec, const ProblemParams& params,
                                        const RequestMultiset& m, const EnumerationBudget& budget,
                                        const ScanOptions& options)
{
    require_permutation_budget(m, budget);
    if (options.backend == Backend::serial) return serial::permutation_costs(spec, params, m);
    return parallel::permutation_costs(spec, params, m, options.jobs);
}

}  // namespace bsl::kernels
