#pragma once

#include "bsl/core.hpp"

#include <cstdint>
#include <random>

namespace bsl {

/// Caps on exhaustive scans. Exceeding one throws BudgetError; nothing is
/// truncated silently.
struct EnumerationBudget {
    std::uint64_t max_sequences = 1'594'323;  // 3^13
    std::uint64_t max_permutations = 1'000'000;
    std::uint64_t rng_seed = 42;
};

/// 3^n, saturating at UINT64_MAX.
std::uint64_t sequence_count(std::size_t n);

/// n! / (n_A! n_B! n_C!), saturating at UINT64_MAX.
std::uint64_t multinomial(const RequestMultiset& m);

void require_sequence_budget(std::size_t n, const EnumerationBudget& budget);
void require_permutation_budget(const RequestMultiset& m, const EnumerationBudget& budget);

/// The index-th length-n sequence in lexicographic order (A < B < C).
RequestSequence sequence_at(std::size_t n, std::uint64_t index);

/// The index-th distinct arrangement of m in lexicographic order.
RequestSequence permutation_at(const RequestMultiset& m, std::uint64_t index);

/// All 3^n sequences of length n, lexicographic. Restartable.
class SequenceStream {
public:
    SequenceStream(std::size_t n, const EnumerationBudget& budget);

    /// Writes the next sequence into `out`; false once exhausted.
    bool next(RequestSequence& out);
    void reset();
    [[nodiscard]] std::uint64_t count() const { return count_; }

private:
    std::size_t n_;
    std::uint64_t count_;
    std::uint64_t emitted_ = 0;
    RequestSequence current_;
};

/// Every distinct arrangement of a multiset exactly once, lexicographic.
class PermutationStream {
public:
    PermutationStream(const RequestMultiset& m, const EnumerationBudget& budget);

    bool next(RequestSequence& out);
    void reset();
    [[nodiscard]] std::uint64_t count() const { return count_; }

private:
    RequestMultiset m_;
    std::uint64_t count_;
    std::uint64_t emitted_ = 0;
    RequestSequence current_;
};

/// Convenience wrappers that materialise the streams.
std::vector<RequestSequence> all_sequences(std::size_t n, const EnumerationBudget& budget = {});
std::vector<RequestSequence> distinct_permutations(const RequestMultiset& m, const EnumerationBudget& budget = {});

/// Uniform random arrangement: Fisher-Yates over the sorted expansion,
/// driven by std::mt19937_64 seeded with `seed`. Bounded draws use
/// rejection sampling on the raw 64-bit output so the result does not depend
/// on the standard library's distribution implementation.
RequestSequence sample_permutation(const RequestMultiset& m, std::uint64_t seed);
RequestSequence sample_permutation(const RequestMultiset& m, std::mt19937_64& rng);

/// Maximal blocks of identical consecutive requests.
std::size_t count_runs(const RequestSequence& seq);

}  // namespace bsl
