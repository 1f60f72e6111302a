#pragma once

#include "bsl/core.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace bsl {

enum class AlgorithmKind : std::uint8_t { greedy, dc, adc, bal, dummy, opt };

/// Which algorithm to run. `lazy` wraps dc/adc with virtual servers; it is a
/// no-op on algorithms that are lazy already (greedy, bal, dummy).
class AlgorithmSpec {
public:
    static AlgorithmSpec greedy() { return AlgorithmSpec(AlgorithmKind::greedy); }
    static AlgorithmSpec dc() { return AlgorithmSpec(AlgorithmKind::dc); }
    static AlgorithmSpec adc(Rational a) { return AlgorithmSpec(AlgorithmKind::adc, a); }
    static AlgorithmSpec ldc() { return lazy_of(dc()); }
    static AlgorithmSpec aldc(Rational a) { return lazy_of(adc(a)); }
    static AlgorithmSpec bal() { return AlgorithmSpec(AlgorithmKind::bal); }
    static AlgorithmSpec dummy() { return AlgorithmSpec(AlgorithmKind::dummy); }
    static AlgorithmSpec opt() { return AlgorithmSpec(AlgorithmKind::opt); }
    static AlgorithmSpec lazy_of(const AlgorithmSpec& inner);

    /// CLI names: greedy, dc, a-dc, ldc, a-ldc, bal, dummy, opt. The speed
    /// applies to a-dc and a-ldc only and defaults to 1.
    static AlgorithmSpec parse(std::string_view name, std::optional<Rational> speed = std::nullopt);

    [[nodiscard]] AlgorithmKind kind() const { return kind_; }
    [[nodiscard]] bool lazy_wrapped() const { return lazy_; }
    [[nodiscard]] const Rational& speed() const { return a_; }
    [[nodiscard]] bool is_online() const { return kind_ != AlgorithmKind::opt; }
    /// Never moves more than one server and never serves a covered point with a move.
    [[nodiscard]] bool is_lazy() const;
    [[nodiscard]] std::string name() const;
    /// Name plus speed for a-dc / a-ldc, e.g. "a-ldc(1/2)".
    [[nodiscard]] std::string label() const;

    /// Throws std::invalid_argument unless 0 < a <= d.
    void validate(const ProblemParams& params) const;

    friend bool operator==(const AlgorithmSpec&, const AlgorithmSpec&) = default;

private:
    explicit AlgorithmSpec(AlgorithmKind kind, Rational a = 1) : kind_(kind), a_(a) {}

    AlgorithmKind kind_;
    Rational a_;
    bool lazy_ = false;
};

/// Server coordinates of a double-coverage style algorithm. Servers may stop
/// between request points.
struct LineState {
    Rational left;
    Rational right;
    friend bool operator==(const LineState&, const LineState&) = default;
};

/// Lazy wrapper: virtual servers simulate the inner algorithm, real servers
/// only move onto requested points.
struct VirtualState {
    LineState virt;
    Configuration real;
    friend bool operator==(const VirtualState&, const VirtualState&) = default;
};

/// Cumulative distance travelled by each server.
struct BalanceState {
    Rational d_left;
    Rational d_right;
    Configuration real;
    friend bool operator==(const BalanceState&, const BalanceState&) = default;
};

/// Hashable encoding of everything that influences future behaviour and
/// future costs. Balance distances are stored as their difference since
/// the decisions only depend on it.
using StateKey = std::array<std::int64_t, 7>;

/// Stepwise engine state for one online algorithm.
class AlgorithmState {
public:
    AlgorithmState(const AlgorithmSpec& spec, const ProblemParams& params);

    [[nodiscard]] const AlgorithmSpec& spec() const { return spec_; }
    [[nodiscard]] const ProblemParams& params() const { return params_; }
    [[nodiscard]] const std::variant<Configuration, LineState, VirtualState, BalanceState>& inner() const
    {
        return inner_;
    }

    /// Serves one request in place and returns the move made.
    MoveRecord apply(Point request);

    /// True when a real server sits exactly on p.
    [[nodiscard]] bool covers(Point p) const;
    /// Coordinates of the two real servers, left first.
    [[nodiscard]] LineState real_positions() const;
    [[nodiscard]] StateKey key() const;

    /// Ordering invariants (noncrossing real and virtual servers).
    void check_invariants() const;

    friend bool operator==(const AlgorithmState&, const AlgorithmState&) = default;

private:
    AlgorithmSpec spec_;
    ProblemParams params_;
    std::variant<Configuration, LineState, VirtualState, BalanceState> inner_;
};

/// Pure form of AlgorithmState::apply.
std::pair<AlgorithmState, MoveRecord> step(const AlgorithmState& state, Point request);

/// Minimum-cost offline service, tracked as the cheapest total ending in each
/// configuration that covers the last request.
class OptFrontier {
public:
    explicit OptFrontier(const ProblemParams& params);
    void feed(Point request);
    [[nodiscard]] Rational total() const;
    [[nodiscard]] StateKey key() const;

private:
    ProblemParams params_;
    std::array<std::optional<Rational>, 3> best_;
};

/// Incremental cost of any spec, Opt included. Copyable, so scans can share
/// the work of common prefixes.
class Evaluator {
public:
    Evaluator(const AlgorithmSpec& spec, const ProblemParams& params);
    void feed(Point request);
    [[nodiscard]] const Rational& total() const { return total_; }
    /// State encoding excluding the accumulated total.
    [[nodiscard]] StateKey key() const;

private:
    std::variant<AlgorithmState, OptFrontier> engine_;
    Rational total_;
};

/// Folds step over the sequence from the initial state. Opt is dispatched
/// to opt_cost.
CostReport run(const AlgorithmSpec& spec, const ProblemParams& params, const RequestSequence& seq);

/// Dynamic program over the three configurations. Returns the minimum total
/// and one canonical optimal trace (smaller move first, then keep the right
/// server still).
CostReport opt_cost(const ProblemParams& params, const RequestSequence& seq);

/// Cost only; no trace.
Rational cost_of(const AlgorithmSpec& spec, const ProblemParams& params, const RequestSequence& seq);

}  // namespace bsl
