#include "bsl/measures.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace bsl {

namespace {

std::vector<Rational> scan_sequences(const AlgorithmSpec& spec, const ProblemParams& params, std::size_t n,
                                     const MeasureOptions& options)
{
    return kernels::sequence_costs(spec, params, n, options.budget, options.scan);
}

Rational sum(const std::vector<Rational>& v) { return std::accumulate(v.begin(), v.end(), Rational(0)); }

std::size_t first_max(const std::vector<Rational>& v)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[best]) best = i;
    return best;
}

}  // namespace

// ---------------------------------------------------------------------------

CompetitiveResult empirical_competitive(const AlgorithmSpec& spec, const ProblemParams& params, std::size_t n_max,
                                        const MeasureOptions& options)
{
    if (n_max == 0) throw std::invalid_argument("competitive scan needs n_max >= 1");
    require_sequence_budget(n_max, options.budget);
    std::optional<CompetitiveResult> best;
    for (std::size_t n = 1; n <= n_max; ++n) {
        auto alg = scan_sequences(spec, params, n, options);
        auto opt = scan_sequences(AlgorithmSpec::opt(), params, n, options);
        for (std::size_t i = 0; i < alg.size(); ++i) {
            if (opt[i] == Rational(0)) continue;
            Rational ratio = alg[i] / opt[i];
            // Scanning by length then rank makes "shorter, then lexicographic" implicit.
            if (!best || ratio > best->ratio || (ratio == best->ratio && opt[i] > best->opt_cost))
                best = CompetitiveResult{ratio, sequence_at(n, i), alg[i], opt[i]};
        }
    }
    return *best;
}

MaxMaxResult maxmax(const AlgorithmSpec& spec, const ProblemParams& params, std::size_t n,
                    const MeasureOptions& options)
{
    if (n == 0) throw std::invalid_argument("Max/Max ratio is undefined for n = 0");
    auto alg = scan_sequences(spec, params, n, options);
    auto opt = scan_sequences(AlgorithmSpec::opt(), params, n, options);
    MaxMaxResult r;
    r.n = n;
    std::size_t at = first_max(alg);
    r.max_cost = alg[at];
    r.witness = sequence_at(n, at);
    r.m_value = r.max_cost / Rational(static_cast<std::int64_t>(n));
    r.opt_max_cost = opt[first_max(opt)];
    r.ratio_vs_opt = r.max_cost / r.opt_max_cost;
    return r;
}

// ---------------------------------------------------------------------------

std::string_view to_string(RandomOrderMode mode)
{
    return mode == RandomOrderMode::ratio_of_expectations ? "ratio_of_expectations" : "expectation_of_ratio";
}

RandomOrderMode parse_random_order_mode(std::string_view text)
{
    if (text == "ratio_of_expectations" || text == "ratio-of-expectations") return RandomOrderMode::ratio_of_expectations;
    if (text == "expectation_of_ratio" || text == "expectation-of-ratio") return RandomOrderMode::expectation_of_ratio;
    throw std::invalid_argument("unknown random-order mode '" + std::string(text) + "'");
}

RandomOrderResult random_order_ratio(const AlgorithmSpec& spec, const ProblemParams& params,
                                     const RequestSequence& input, RandomOrderMode mode,
                                     const MeasureOptions& options, std::uint64_t samples)
{
    const RequestMultiset m = input.signature();
    RandomOrderResult r;
    r.mode = mode;
    Rational sum_alg;
    Rational sum_opt;
    Rational sum_ratio;
    bool zero_opt = false;
    auto accumulate = [&](const Rational& a, const Rational& o) {
        sum_alg += a;
        sum_opt += o;
        if (o == Rational(0))
            zero_opt = true;
        else
            sum_ratio += a / o;
    };

    if (multinomial(m) <= options.budget.max_permutations) {
        auto alg = kernels::permutation_costs(spec, params, m, options.budget, options.scan);
        auto opt = kernels::permutation_costs(AlgorithmSpec::opt(), params, m, options.budget, options.scan);
        for (std::size_t i = 0; i < alg.size(); ++i) accumulate(alg[i], opt[i]);
        r.exact = true;
        r.arrangements = alg.size();
    }
    else {
        if (samples == 0) throw std::invalid_argument("random-order sampling needs at least one sample");
        std::mt19937_64 rng(options.budget.rng_seed);
        for (std::uint64_t s = 0; s < samples; ++s) {
            auto seq = sample_permutation(m, rng);
            accumulate(cost_of(spec, params, seq), opt_cost(params, seq).total);
        }
        r.exact = false;
        r.arrangements = samples;
        r.seed = options.budget.rng_seed;
    }

    const Rational count(static_cast<std::int64_t>(r.arrangements));
    r.expected_alg = sum_alg / count;
    r.expected_opt = sum_opt / count;
    if (r.expected_opt == Rational(0)) throw std::domain_error("Opt is zero on every arrangement (no B requests)");
    if (mode == RandomOrderMode::ratio_of_expectations) {
        r.value = r.expected_alg / r.expected_opt;
    }
    else {
        // Opt is zero exactly when there is no B, which holds for all
        // arrangements or none.
        if (zero_opt) throw std::logic_error("Opt vanished on some arrangements only");
        r.value = sum_ratio / count;
    }
    return r;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::a_better: return "A_better";
    case Verdict::b_better: return "B_better";
    case Verdict::equivalent: return "equivalent";
    case Verdict::incomparable: return "incomparable";
    }
    return "?";
}

BijectiveComparison bijective_from_costs(const std::vector<Rational>& costs_a, const std::vector<Rational>& costs_b,
                                         std::size_t n)
{
    if (costs_a.size() != costs_b.size()) throw std::invalid_argument("cost vectors differ in length");
    auto order = [](const std::vector<Rational>& costs) {
        std::vector<std::uint64_t> idx(costs.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](auto x, auto y) { return costs[x] < costs[y]; });
        return idx;
    };
    auto ia = order(costs_a);
    auto ib = order(costs_b);

    BijectiveComparison r;
    r.n = n;
    bool a_le = true, b_le = true, a_lt = false, b_lt = false;
    r.sorted_a.reserve(ia.size());
    r.sorted_b.reserve(ib.size());
    r.pairing.reserve(ia.size());
    for (std::size_t k = 0; k < ia.size(); ++k) {
        const auto& a = costs_a[ia[k]];
        const auto& b = costs_b[ib[k]];
        r.sorted_a.push_back(a);
        r.sorted_b.push_back(b);
        r.pairing.emplace_back(ia[k], ib[k]);
        if (a > b) a_le = false;
        if (b > a) b_le = false;
        if (a < b) a_lt = true;
        if (b < a) b_lt = true;
    }
    if (a_le && b_le)
        r.verdict = Verdict::equivalent;
    else if (a_le)
        r.verdict = Verdict::a_better, r.strict = a_lt;
    else if (b_le)
        r.verdict = Verdict::b_better, r.strict = b_lt;
    else
        r.verdict = Verdict::incomparable;
    return r;
}

BijectiveComparison bijective_compare(const AlgorithmSpec& spec_a, const AlgorithmSpec& spec_b,
                                      const ProblemParams& params, std::size_t n, const MeasureOptions& options)
{
    return bijective_from_costs(scan_sequences(spec_a, params, n, options), scan_sequences(spec_b, params, n, options),
                                n);
}

AverageComparison average_compare(const AlgorithmSpec& spec_a, const AlgorithmSpec& spec_b,
                                  const ProblemParams& params, std::size_t n, const MeasureOptions& options)
{
    AverageComparison r;
    r.n = n;
    r.sum_a = sum(scan_sequences(spec_a, params, n, options));
    r.sum_b = sum(scan_sequences(spec_b, params, n, options));
    if (r.sum_a == r.sum_b)
        r.verdict = Verdict::equivalent;
    else
        r.verdict = r.sum_a < r.sum_b ? Verdict::a_better : Verdict::b_better;
    return r;
}

// ---------------------------------------------------------------------------
// Relative worst order

namespace {

// Worst-order costs for one algorithm, sharing one DP memo across calls.
class WorstOracle {
public:
    WorstOracle(const AlgorithmSpec& spec, const ProblemParams& params, const MeasureOptions& options)
        : spec_(spec), params_(params), options_(options), dp_(spec, params, options.max_dp_states)
    {
    }

    WorstOrderResult operator()(const RequestMultiset& m)
    {
        if (multinomial(m) <= options_.budget.max_permutations)
            return brute_force_worst(spec_, params_, m, options_.budget, options_.scan);
        const double combos = static_cast<double>(m.n_a + 1) * static_cast<double>(m.n_b + 1)
            * static_cast<double>(m.n_c + 1);
        if (combos < dp_overflow_at_) {
            try {
                return dp_.solve(m);
            }
            catch (const BudgetError&) {
                if (!has_canonical_worst_ordering(spec_)) throw;
                // Skip the DP for multisets at least this large from now on.
                dp_overflow_at_ = std::min(dp_overflow_at_, combos);
            }
        }
        auto canonical = cruel_adversary_sequence(spec_, params_, m);
        return {canonical.cost, canonical.sequence, WorstMethod::cruel_adversary};
    }

private:
    AlgorithmSpec spec_;
    ProblemParams params_;
    MeasureOptions options_;
    ExactWorstOrder dp_;
    double dp_overflow_at_ = std::numeric_limits<double>::infinity();
};

std::optional<Rational> ratio_or_empty(const Rational& num, const Rational& den)
{
    if (den == Rational(0)) return std::nullopt;
    return num / den;
}

}  // namespace

RwoPair rwo_pair_on_multiset(const AlgorithmSpec& spec_a, const AlgorithmSpec& spec_b, const ProblemParams& params,
                             const RequestMultiset& m, const MeasureOptions& options)
{
    auto wa = WorstOracle(spec_a, params, options)(m);
    auto wb = WorstOracle(spec_b, params, options)(m);
    return {wa.cost, wb.cost, ratio_or_empty(wa.cost, wb.cost), ratio_or_empty(wb.cost, wa.cost), wa.method,
            wb.method};
}

Family Family::parse(std::string_view text)
{
    if (text == "canonical") return canonical();
    constexpr std::string_view prefix = "pattern:";
    if (text.substr(0, prefix.size()) == prefix) {
        auto seq = parse_sequence(text.substr(prefix.size()));
        if (seq.empty()) throw std::invalid_argument("family pattern must be nonempty");
        return of_pattern(std::move(seq));
    }
    throw std::invalid_argument("unknown family '" + std::string(text) + "' (canonical or pattern:<seq>)");
}

std::string Family::str() const { return kind == Kind::canonical ? "canonical" : "pattern:" + pattern.str(); }

RequestMultiset family_multiset(const Family& family, const AlgorithmSpec& owner, const ProblemParams& params,
                                std::int64_t p)
{
    if (p < 0) throw std::invalid_argument("family index p must be >= 0");
    RequestMultiset m;
    if (family.kind == Family::Kind::pattern) {
        auto sig = family.pattern.signature();
        return {sig.n_a * p, sig.n_b * p, sig.n_c * p};
    }
    constexpr std::size_t probe = 64;
    auto head = cruel_adversary_prefix(owner, params, probe);
    if (head.signature().n_c == 0) {
        // The owner never gives up C: take the first 2p adversarial requests.
        return cruel_adversary_prefix(owner, params, static_cast<std::size_t>(2 * p)).signature();
    }
    AlgorithmState state(owner, params);
    while (m.n_c < p) {
        if (static_cast<std::size_t>(m.size()) >= default_sequence_cap)
            throw BudgetError("canonical family prefix exceeds the sequence cap");
        Point pick = Point::B;
        for (Point q : {Point::B, Point::A, Point::C})
            if (!state.covers(q)) {
                pick = q;
                break;
            }
        state.apply(pick);
        ++m.count(pick);
    }
    return m;
}

std::string_view to_string(RwoVerdict v)
{
    switch (v) {
    case RwoVerdict::comparable_a_favor: return "comparable_A_favor";
    case RwoVerdict::comparable_b_favor: return "comparable_B_favor";
    case RwoVerdict::weakly_comparable_a_favor: return "weakly_comparable_A_favor";
    case RwoVerdict::weakly_comparable_b_favor: return "weakly_comparable_B_favor";
    case RwoVerdict::incomparable: return "incomparable";
    case RwoVerdict::equivalent: return "equivalent";
    }
    return "?";
}

Rational default_rwo_slack(const ProblemParams& params) { return Rational(3) * params.d(); }

namespace {

// Linear-or-faster growth of a ratio series: the value at the largest p is
// at least 1.5 times the value at the point nearest p_max / 2.
bool looks_unbounded(const std::vector<RelatednessPoint>& series)
{
    if (series.size() < 2) return false;
    const auto& last = series.back();
    if (!last.ratio || *last.ratio <= Rational(1)) return false;
    const Rational half = Rational(last.p, 2);
    const RelatednessPoint* mid = nullptr;
    for (const auto& pt : series) {
        if (pt.p >= last.p || !pt.ratio) continue;
        if (!mid || abs(Rational(pt.p) - half) < abs(Rational(mid->p) - half)) mid = &pt;
    }
    if (mid == nullptr || Rational(mid->p) * Rational(3, 2) > Rational(last.p)) return false;
    return *last.ratio >= Rational(3, 2) * *mid->ratio;
}

}  // namespace

RelatednessEstimate rwo_relatedness(const AlgorithmSpec& spec_a, const AlgorithmSpec& spec_b,
                                    const ProblemParams& params, const Family& family,
                                    const std::vector<std::int64_t>& p_values, std::optional<Rational> slack,
                                    const MeasureOptions& options)
{
    if (p_values.empty()) throw std::invalid_argument("rwo needs at least one family index p");
    RelatednessEstimate est;
    est.slack = slack.value_or(default_rwo_slack(params));

    WorstOracle oracle_a(spec_a, params, options);
    WorstOracle oracle_b(spec_b, params, options);
    auto evaluate = [](std::int64_t p, const RequestMultiset& m, WorstOracle& num, WorstOracle& den) {
        RelatednessPoint pt;
        pt.p = p;
        pt.multiset = m;
        auto wn = num(m);
        auto wd = den(m);
        pt.worst_num = wn.cost;
        pt.worst_den = wd.cost;
        pt.method_num = wn.method;
        pt.method_den = wd.method;
        pt.ratio = ratio_or_empty(wn.cost, wd.cost);
        return pt;
    };

    std::vector<std::int64_t> ps = p_values;
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    for (auto p : ps) {
        est.series_ab.push_back(evaluate(p, family_multiset(family, spec_a, params, p), oracle_a, oracle_b));
        est.series_ba.push_back(evaluate(p, family_multiset(family, spec_b, params, p), oracle_b, oracle_a));
    }

    // Slack-adjusted c_u over every evaluated multiset, in both directions.
    auto sup = [&](bool a_over_b, bool& unbounded) {
        std::optional<Rational> best;
        auto visit = [&](const Rational& num, const Rational& den) {
            Rational excess = num - est.slack;
            if (den == Rational(0)) {
                if (excess > Rational(0)) unbounded = true;
                return;
            }
            Rational c = excess / den;
            if (!best || c > *best) best = c;
        };
        for (const auto& pt : est.series_ab)
            a_over_b ? visit(pt.worst_num, pt.worst_den) : visit(pt.worst_den, pt.worst_num);
        for (const auto& pt : est.series_ba)
            a_over_b ? visit(pt.worst_den, pt.worst_num) : visit(pt.worst_num, pt.worst_den);
        return best;
    };
    est.c_u_ab = sup(true, est.unbounded_ab);
    est.c_u_ba = sup(false, est.unbounded_ba);
    est.unbounded_ab = est.unbounded_ab || looks_unbounded(est.series_ab);
    est.unbounded_ba = est.unbounded_ba || looks_unbounded(est.series_ba);
    if (est.unbounded_ab) est.c_u_ab.reset();
    if (est.unbounded_ba) est.c_u_ba.reset();

    const bool le1_ab = est.c_u_ab && *est.c_u_ab <= Rational(1);
    const bool le1_ba = est.c_u_ba && *est.c_u_ba <= Rational(1);
    if (le1_ab && le1_ba)
        est.verdict = RwoVerdict::equivalent;
    else if (le1_ab)
        est.verdict = RwoVerdict::comparable_a_favor;
    else if (le1_ba)
        est.verdict = RwoVerdict::comparable_b_favor;
    else if (!est.unbounded_ab && est.unbounded_ba)
        est.verdict = RwoVerdict::weakly_comparable_a_favor;
    else if (est.unbounded_ab && !est.unbounded_ba)
        est.verdict = RwoVerdict::weakly_comparable_b_favor;
    else
        est.verdict = RwoVerdict::incomparable;
    return est;
}

}  // namespace bsl
