#include "bsl/worst_order.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace bsl {

std::string_view to_string(WorstMethod m)
{
    switch (m) {
    case WorstMethod::brute_force: return "brute_force";
    case WorstMethod::exact_dp: return "exact_dp";
    case WorstMethod::cruel_adversary: return "cruel_adversary";
    }
    return "?";
}

WorstOrderResult brute_force_worst(const AlgorithmSpec& spec, const ProblemParams& params, const RequestMultiset& m,
                                   const EnumerationBudget& budget, const kernels::ScanOptions& options)
{
    auto costs = kernels::permutation_costs(spec, params, m, budget, options);
    std::size_t best = 0;
    for (std::size_t i = 1; i < costs.size(); ++i)
        if (costs[i] > costs[best]) best = i;
    return {costs[best], permutation_at(m, best), WorstMethod::brute_force};
}

namespace {

struct MemoKey {
    StateKey state;
    std::int64_t n_a;
    std::int64_t n_b;
    std::int64_t n_c;
    friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const noexcept
    {
        std::uint64_t h = 1469598103934665603ULL;
        auto mix = [&h](std::int64_t v) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        };
        for (auto v : k.state) mix(v);
        mix(k.n_a);
        mix(k.n_b);
        mix(k.n_c);
        return static_cast<std::size_t>(h);
    }
};

class WorstOrderDp {
public:
    explicit WorstOrderDp(std::uint64_t max_states) : max_states_(max_states) {}

    // Largest cost still obtainable from `eval` using exactly the points in `rest`.
    Rational value(const Evaluator& eval, const RequestMultiset& rest)
    {
        if (rest.size() == 0) return 0;
        MemoKey key{eval.key(), rest.n_a, rest.n_b, rest.n_c};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::optional<Rational> best;
        for (Point p : all_points) {
            if (rest.count(p) == 0) continue;
            Evaluator next = eval;
            next.feed(p);
            RequestMultiset child = rest;
            --child.count(p);
            Rational v = next.total() - eval.total() + value(next, child);
            if (!best || v > *best) best = v;
        }
        if (memo_.size() >= max_states_)
            throw BudgetError("worst-order DP exceeds " + std::to_string(max_states_) + " states");
        memo_.emplace(key, *best);
        return *best;
    }

private:
    std::uint64_t max_states_;
    std::unordered_map<MemoKey, Rational, MemoKeyHash> memo_;
};

}  // namespace

struct ExactWorstOrder::Impl {
    Impl(const AlgorithmSpec& spec, const ProblemParams& params, std::uint64_t max_states)
        : spec(spec), params(params), max_states(max_states), dp(max_states)
    {
        Evaluator probe(spec, params);  // validates spec against params
    }

    AlgorithmSpec spec;
    ProblemParams params;
    std::uint64_t max_states;
    WorstOrderDp dp;
};

ExactWorstOrder::ExactWorstOrder(const AlgorithmSpec& spec, const ProblemParams& params, std::uint64_t max_states)
    : impl_(std::make_unique<Impl>(spec, params, max_states))
{
}

ExactWorstOrder::~ExactWorstOrder() = default;
ExactWorstOrder::ExactWorstOrder(ExactWorstOrder&&) noexcept = default;
ExactWorstOrder& ExactWorstOrder::operator=(ExactWorstOrder&&) noexcept = default;

WorstOrderResult ExactWorstOrder::solve(const RequestMultiset& m)
{
    if (m.n_a < 0 || m.n_b < 0 || m.n_c < 0) throw std::invalid_argument("negative multiset count");
    // Every sub-multiset is a distinct memo key; reject hopeless cases early.
    const double combos = static_cast<double>(m.n_a + 1) * static_cast<double>(m.n_b + 1)
        * static_cast<double>(m.n_c + 1);
    if (combos > static_cast<double>(impl_->max_states))
        throw BudgetError("worst-order DP needs at least " + std::to_string(static_cast<std::uint64_t>(combos))
                          + " states, exceeding " + std::to_string(impl_->max_states));

    auto& dp = impl_->dp;
    Evaluator eval(impl_->spec, impl_->params);
    RequestMultiset rest = m;
    const Rational total = dp.value(eval, rest);

    // Walk down choosing the first point (A < B < C) that keeps the optimum.
    WorstOrderResult result{total, {}, WorstMethod::exact_dp};
    Rational remaining = total;
    while (rest.size() > 0) {
        for (Point p : all_points) {
            if (rest.count(p) == 0) continue;
            Evaluator next = eval;
            next.feed(p);
            RequestMultiset child = rest;
            --child.count(p);
            Rational inc = next.total() - eval.total();
            if (inc + dp.value(next, child) == remaining) {
                remaining -= inc;
                result.witness.requests.push_back(p);
                eval = std::move(next);
                rest = child;
                break;
            }
        }
    }
    return result;
}

WorstOrderResult exact_dp_worst(const AlgorithmSpec& spec, const ProblemParams& params, const RequestMultiset& m,
                                std::uint64_t max_states)
{
    return ExactWorstOrder(spec, params, max_states).solve(m);
}

namespace {

std::optional<Point> cruel_pick(const AlgorithmState& state, const RequestMultiset* supply)
{
    for (Point p : {Point::B, Point::A, Point::C})
        if (!state.covers(p) && (supply == nullptr || supply->count(p) > 0)) return p;
    return std::nullopt;
}

}  // namespace

CanonicalWorstOrdering cruel_adversary_sequence(const AlgorithmSpec& spec, const ProblemParams& params,
                                                const RequestMultiset& m)
{
    if (!spec.is_online()) throw std::invalid_argument("the cruel adversary needs an online algorithm");
    if (m.n_a < 0 || m.n_b < 0 || m.n_c < 0) throw std::invalid_argument("negative multiset count");
    AlgorithmState state(spec, params);
    RequestMultiset rest = m;
    CanonicalWorstOrdering out;

    while (auto pick = cruel_pick(state, &rest)) {
        out.cost += state.apply(*pick).distance;
        out.sequence.requests.push_back(*pick);
        --rest.count(*pick);
        if (*pick == Point::C) ++out.p;
    }

    auto emit_tail = [&](Point p) {
        out.cost += state.apply(p).distance;
        out.sequence.requests.push_back(p);
        out.tail.requests.push_back(p);
        --rest.count(p);
    };
    Point next = Point::B;
    while (rest.n_a > 0 && rest.n_b > 0) {
        emit_tail(next);
        next = next == Point::B ? Point::A : Point::B;
    }
    while (rest.n_a > 0) emit_tail(Point::A);
    while (rest.n_b > 0) emit_tail(Point::B);
    while (rest.n_c > 0) emit_tail(Point::C);
    return out;
}

RequestSequence cruel_adversary_prefix(const AlgorithmSpec& spec, const ProblemParams& params, std::size_t length)
{
    if (!spec.is_online()) throw std::invalid_argument("the cruel adversary needs an online algorithm");
    AlgorithmState state(spec, params);
    RequestSequence out;
    out.requests.reserve(length);
    while (out.size() < length) {
        auto pick = cruel_pick(state, nullptr);
        if (!pick) throw std::logic_error("algorithm covers every point");
        state.apply(*pick);
        out.requests.push_back(*pick);
    }
    return out;
}

CanonicalPrediction predicted_canonical_cost(const RequestMultiset& m, const Rational& d, const Rational& a)
{
    if (a <= Rational(0) || a > d) throw std::invalid_argument("speed a must satisfy 0 < a <= d");
    const std::int64_t k = (d / a).floor();
    CanonicalPrediction out;
    out.p = std::min({m.n_a / k, m.n_b / (k + 1), m.n_c});
    out.lower = Rational(out.p) * (Rational(2 * k) + Rational(2) * d);
    out.upper = out.lower + Rational(2 * k) + d;
    return out;
}

bool has_canonical_worst_ordering(const AlgorithmSpec& spec) { return spec.is_online() && spec.is_lazy(); }

WorstOrderResult worst_order(const AlgorithmSpec& spec, const ProblemParams& params, const RequestMultiset& m,
                             const EnumerationBudget& budget, std::uint64_t max_states,
                             const kernels::ScanOptions& options)
{
    if (multinomial(m) <= budget.max_permutations) return brute_force_worst(spec, params, m, budget, options);
    try {
        return exact_dp_worst(spec, params, m, max_states);
    }
    catch (const BudgetError&) {
        if (!has_canonical_worst_ordering(spec)) throw;
    }
    auto canonical = cruel_adversary_sequence(spec, params, m);
    return {canonical.cost, canonical.sequence, WorstMethod::cruel_adversary};
}

}  // namespace bsl
