#pragma once

// Quality measures for online algorithms, evaluated exactly at finite size:
// competitive ratio, Max/Max ratio, random order ratio, bijective and
// average analysis, and relative worst order analysis.
//
// Limits (lim sup, infimum over additive constants) are not computable, so
// ratio measures are reported at finite n or over a finite family index p
// and relative worst order verdicts are empirical trend estimates.

#include "bsl/worst_order.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace bsl {

struct MeasureOptions {
    EnumerationBudget budget;
    std::uint64_t max_dp_states = default_dp_states;
    kernels::ScanOptions scan;
};

// ---------------------------------------------------------------------------
// Competitive ratio

struct CompetitiveResult {
    Rational ratio;
    RequestSequence argmax;
    Rational alg_cost;
    Rational opt_cost;
};

/// Exact max of alg(I) / opt(I) over 1 <= |I| <= n_max with opt(I) > 0.
/// Ties prefer larger opt(I), then shorter, then lexicographically smaller.
CompetitiveResult empirical_competitive(const AlgorithmSpec& spec, const ProblemParams& params, std::size_t n_max,
                                        const MeasureOptions& options = {});

// ---------------------------------------------------------------------------
// Max/Max

struct MaxMaxResult {
    std::size_t n = 0;
    Rational max_cost;      ///< max over |I| = n
    Rational m_value;       ///< max_cost / n
    Rational opt_max_cost;  ///< Opt's max over |I| = n
    Rational ratio_vs_opt;  ///< m_value / (opt_max_cost / n)
    RequestSequence witness;
};

/// Throws std::invalid_argument for n = 0.
MaxMaxResult maxmax(const AlgorithmSpec& spec, const ProblemParams& params, std::size_t n,
                    const MeasureOptions& options = {});

// ---------------------------------------------------------------------------
// Random order

enum class RandomOrderMode { ratio_of_expectations, expectation_of_ratio };

std::string_view to_string(RandomOrderMode mode);
RandomOrderMode parse_random_order_mode(std::string_view text);

struct RandomOrderResult {
    RandomOrderMode mode = RandomOrderMode::ratio_of_expectations;
    Rational value;
    Rational expected_alg;
    Rational expected_opt;
    /// True when averaged over every distinct arrangement; false for a
    /// seeded Monte Carlo estimate (the sample mean, still exact arithmetic).
    bool exact = true;
    std::uint64_t arrangements = 0;  ///< arrangements averaged (exact) or samples drawn
    std::optional<std::uint64_t> seed;
};

inline constexpr std::uint64_t default_random_order_samples = 20'000;

/// Averages over distinct arrangements of I's multiset when that count fits
/// the permutation budget, otherwise samples with budget.rng_seed.
RandomOrderResult random_order_ratio(const AlgorithmSpec& spec, const ProblemParams& params,
                                     const RequestSequence& input, RandomOrderMode mode,
                                     const MeasureOptions& options = {},
                                     std::uint64_t samples = default_random_order_samples);

// ---------------------------------------------------------------------------
// Bijective and average analysis

enum class Verdict { a_better, b_better, equivalent, incomparable };

std::string_view to_string(Verdict v);

struct BijectiveComparison {
    std::size_t n = 0;
    Verdict verdict = Verdict::equivalent;
    /// For a_better / b_better: the better side is strictly cheaper somewhere.
    bool strict = false;
    std::vector<Rational> sorted_a;
    std::vector<Rational> sorted_b;
    /// (rank of an A-sequence, rank of its B-partner): k-th cheapest to k-th cheapest.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairing;
};

/// Sorted-dominance verdict: a bijection with A(I) <= B(f(I)) exists iff the
/// k-th smallest A cost is <= the k-th smallest B cost for all k.
BijectiveComparison bijective_compare(const AlgorithmSpec& spec_a, const AlgorithmSpec& spec_b,
                                      const ProblemParams& params, std::size_t n, const MeasureOptions& options = {});

/// Same verdict from two precomputed cost vectors over I_n.
BijectiveComparison bijective_from_costs(const std::vector<Rational>& costs_a, const std::vector<Rational>& costs_b,
                                         std::size_t n);

struct AverageComparison {
    std::size_t n = 0;
    Rational sum_a;
    Rational sum_b;
    Verdict verdict = Verdict::equivalent;
};

AverageComparison average_compare(const AlgorithmSpec& spec_a, const AlgorithmSpec& spec_b,
                                  const ProblemParams& params, std::size_t n, const MeasureOptions& options = {});

// ---------------------------------------------------------------------------
// Relative worst order

struct RwoPair {
    Rational worst_a;
    Rational worst_b;
    std::optional<Rational> ratio_ab;  ///< worst_a / worst_b, empty if worst_b = 0
    std::optional<Rational> ratio_ba;
    WorstMethod method_a = WorstMethod::brute_force;
    WorstMethod method_b = WorstMethod::brute_force;
};

RwoPair rwo_pair_on_multiset(const AlgorithmSpec& spec_a, const AlgorithmSpec& spec_b, const ProblemParams& params,
                             const RequestMultiset& m, const MeasureOptions& options = {});

/// Multisets indexed by p.
///   canonical: the requests the cruel adversary issues against the
///              numerator algorithm, up to its p-th C (or 2p requests for an
///              algorithm that never uncovers C);
///   pattern:   pattern^p for both directions.
struct Family {
    enum class Kind { canonical, pattern } kind = Kind::canonical;
    RequestSequence pattern;

    static Family canonical() { return {}; }
    static Family of_pattern(RequestSequence p) { return {Kind::pattern, std::move(p)}; }
    static Family parse(std::string_view text);
    [[nodiscard]] std::string str() const;
};

RequestMultiset family_multiset(const Family& family, const AlgorithmSpec& owner, const ProblemParams& params,
                                std::int64_t p);

enum class RwoVerdict {
    comparable_a_favor,
    comparable_b_favor,
    weakly_comparable_a_favor,
    weakly_comparable_b_favor,
    incomparable,
    equivalent
};

std::string_view to_string(RwoVerdict v);

struct RelatednessPoint {
    std::int64_t p = 0;
    RequestMultiset multiset;
    Rational worst_num;  ///< numerator algorithm of this direction
    Rational worst_den;
    std::optional<Rational> ratio;
    WorstMethod method_num = WorstMethod::brute_force;
    WorstMethod method_den = WorstMethod::brute_force;
};

struct RelatednessEstimate {
    std::vector<RelatednessPoint> series_ab;  ///< worst_A / worst_B on A's family
    std::vector<RelatednessPoint> series_ba;  ///< worst_B / worst_A on B's family
    /// max over every evaluated multiset of (worst_X - slack) / worst_Y;
    /// empty when unbounded.
    std::optional<Rational> c_u_ab;
    std::optional<Rational> c_u_ba;
    bool unbounded_ab = false;
    bool unbounded_ba = false;
    Rational slack;
    RwoVerdict verdict = RwoVerdict::incomparable;
};

/// Default additive slack: 3d.
Rational default_rwo_slack(const ProblemParams& params);

RelatednessEstimate rwo_relatedness(const AlgorithmSpec& spec_a, const AlgorithmSpec& spec_b,
                                    const ProblemParams& params, const Family& family,
                                    const std::vector<std::int64_t>& p_values, std::optional<Rational> slack = {},
                                    const MeasureOptions& options = {});

}  // namespace bsl
