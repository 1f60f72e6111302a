#pragma once

// Worst permutations of a fixed multiset of requests.
//
// Three independent routes:
//   brute_force      exact maximum over every distinct arrangement;
//   exact_dp         memoised maximum over (remaining multiset, engine state);
//   cruel_adversary  always request the point without a server, then append
//                    the residue in a fixed order.
// For a-LDC the cruel adversary yields blocks (BA)^k BC with k = floor(d/a),
// and its cost is bracketed by p(2k + 2d) and p(2k + 2d) + 2k + d.

#include "bsl/algorithms.hpp"
#include "bsl/enumeration.hpp"
#include "bsl/kernels.hpp"

#include <memory>
#include <string_view>

namespace bsl {

enum class WorstMethod { brute_force, exact_dp, cruel_adversary };

std::string_view to_string(WorstMethod m);

struct WorstOrderResult {
    Rational cost;
    RequestSequence witness;
    WorstMethod method = WorstMethod::brute_force;
};

struct CanonicalWorstOrdering {
    RequestSequence sequence;
    /// Completed blocks, i.e. C requests issued by the adversary.
    std::int64_t p = 0;
    /// Residue appended after the adversary ran out of the uncovered point.
    RequestSequence tail;
    Rational cost;
};

struct CanonicalPrediction {
    std::int64_t p = 0;
    Rational lower;
    Rational upper;
};

inline constexpr std::uint64_t default_dp_states = 4'000'000;

/// Exact maximum over all distinct arrangements. The witness is the
/// lexicographically least maximiser.
WorstOrderResult brute_force_worst(const AlgorithmSpec& spec, const ProblemParams& params, const RequestMultiset& m,
                                   const EnumerationBudget& budget = {}, const kernels::ScanOptions& options = {});

/// Exact maximum by dynamic programming over (remaining counts, state).
/// Witness is the lexicographically least maximiser. Throws BudgetError if
/// the memo would exceed `max_states` entries.
WorstOrderResult exact_dp_worst(const AlgorithmSpec& spec, const ProblemParams& params, const RequestMultiset& m,
                                std::uint64_t max_states = default_dp_states);

/// Reusable form of exact_dp_worst: the memo depends only on the engine
/// state and the remaining counts, so it is shared across multisets.
class ExactWorstOrder {
public:
    ExactWorstOrder(const AlgorithmSpec& spec, const ProblemParams& params,
                    std::uint64_t max_states = default_dp_states);
    ~ExactWorstOrder();
    ExactWorstOrder(ExactWorstOrder&&) noexcept;
    ExactWorstOrder& operator=(ExactWorstOrder&&) noexcept;

    WorstOrderResult solve(const RequestMultiset& m);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Cruel adversary against an online algorithm (Opt is rejected). When
/// several points are uncovered (non-lazy algorithms) the first of B, A, C
/// with remaining supply is requested. The residue is: B/A alternating while
/// both remain, then the remaining A's or B's, then the C's.
CanonicalWorstOrdering cruel_adversary_sequence(const AlgorithmSpec& spec, const ProblemParams& params,
                                                const RequestMultiset& m);

/// The first `length` requests of the cruel adversary with unlimited supply.
RequestSequence cruel_adversary_prefix(const AlgorithmSpec& spec, const ProblemParams& params, std::size_t length);

/// Closed-form block count and cost bracket for a-LDC.
CanonicalPrediction predicted_canonical_cost(const RequestMultiset& m, const Rational& d, const Rational& a);

/// Algorithms whose cruel-adversary sequence is a worst ordering (greedy,
/// ldc, a-ldc, bal, dummy).
bool has_canonical_worst_ordering(const AlgorithmSpec& spec);

/// Best exact route that fits the budgets: brute force, then exact DP, then
/// the cruel adversary for algorithms with a canonical worst ordering.
WorstOrderResult worst_order(const AlgorithmSpec& spec, const ProblemParams& params, const RequestMultiset& m,
                             const EnumerationBudget& budget = {}, std::uint64_t max_states = default_dp_states,
                             const kernels::ScanOptions& options = {});

}  // namespace bsl
