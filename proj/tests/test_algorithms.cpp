#include "bsl/algorithms.hpp"
#include "bsl/enumeration.hpp"

#include <doctest.h>

#include <optional>
#include <string>

using namespace bsl;

namespace {

// Straightforward coordinate-level simulator, written independently of the
// engine's state machine. Servers are plain coordinates; the lazy variant
// keeps virtual and real coordinates side by side.
class Reference {
public:
    Reference(std::string name, Rational a, Rational d) : name_(std::move(name)), a_(a), c_(Rational(1) + d)
    {
        vl_ = rl_ = Rational(0);
        vr_ = rr_ = c_;
    }

    Rational serve(Point p)
    {
        const Rational x = p == Point::A ? Rational(0) : p == Point::B ? Rational(1) : c_;
        if (name_ == "greedy") return greedy(x);
        if (name_ == "dummy") return dummy(x);
        if (name_ == "bal") return bal(x);
        if (name_ == "dc") {
            Rational cost = dc_virtual(x);
            rl_ = vl_;
            rr_ = vr_;
            return cost;
        }
        return lazy(x);  // "ldc"
    }

private:
    Rational move_left(const Rational& x)
    {
        Rational c = abs(rl_ - x);
        rl_ = x;
        moved_l_ += c;
        return c;
    }
    Rational move_right(const Rational& x)
    {
        Rational c = abs(rr_ - x);
        rr_ = x;
        moved_r_ += c;
        return c;
    }

    Rational greedy(const Rational& x)
    {
        if (x == rl_ || x == rr_) return 0;
        return abs(rl_ - x) < abs(rr_ - x) ? move_left(x) : move_right(x);
    }

    Rational dummy(const Rational& x)
    {
        if (x == rl_ || x == rr_) return 0;
        if (rl_ < x && x < rr_) return abs(rl_ - x) > abs(rr_ - x) ? move_left(x) : move_right(x);
        return x < rl_ ? move_left(x) : move_right(x);
    }

    Rational bal(const Rational& x)
    {
        if (x == rl_ || x == rr_) return 0;
        if (x < rl_) return move_left(x);
        if (x > rr_) return move_right(x);
        const Rational cl = abs(rl_ - x), cr = abs(rr_ - x);
        const Rational left_max = max(moved_l_ + cl, moved_r_);
        const Rational right_max = max(moved_l_, moved_r_ + cr);
        if (left_max != right_max) return left_max < right_max ? move_left(x) : move_right(x);
        return cl > cr ? move_left(x) : move_right(x);
    }

    // One double-coverage step on the virtual coordinates; returns its cost.
    Rational dc_virtual(const Rational& x)
    {
        if (x == vl_ || x == vr_) return 0;
        if (vl_ < x && x < vr_) {
            Rational t = min(x - vl_, (vr_ - x) / a_);
            vl_ += t;
            vr_ -= a_ * t;
            return t + a_ * t;
        }
        if (x < vl_) {
            Rational c = vl_ - x;
            vl_ = x;
            return c;
        }
        Rational c = x - vr_;
        vr_ = x;
        return c;
    }

    Rational lazy(const Rational& x)
    {
        dc_virtual(x);
        if (x == rl_ || x == rr_) return 0;
        if (vl_ == x && vr_ == x) return abs(rl_ - x) < abs(rr_ - x) ? move_left(x) : move_right(x);
        if (vl_ == x) return move_left(x);
        REQUIRE(vr_ == x);
        return move_right(x);
    }

    std::string name_;
    Rational a_;
    Rational c_;
    Rational vl_, vr_, rl_, rr_;
    Rational moved_l_, moved_r_;
};

Rational reference_cost(const std::string& name, Rational a, Rational d, const RequestSequence& seq)
{
    Reference ref(name, a, d);
    Rational total;
    for (Point p : seq.requests) total += ref.serve(p);
    return total;
}

const Rational d_grid[] = {Rational(3, 2), Rational(2), Rational(5, 2), Rational(3)};

std::vector<AlgorithmSpec> online_specs(const Rational& d)
{
    std::vector<AlgorithmSpec> out = {AlgorithmSpec::greedy(), AlgorithmSpec::dc(), AlgorithmSpec::ldc(),
                                      AlgorithmSpec::bal(), AlgorithmSpec::dummy()};
    for (Rational a : {Rational(1, 2), Rational(1), Rational(2), Rational(3)})
        if (a <= d) {
            out.push_back(AlgorithmSpec::adc(a));
            out.push_back(AlgorithmSpec::aldc(a));
        }
    return out;
}

}  // namespace

TEST_CASE("spec parsing and labels")
{
    CHECK(AlgorithmSpec::parse("ldc") == AlgorithmSpec::ldc());
    CHECK(AlgorithmSpec::parse("a-ldc", Rational(1, 2)) == AlgorithmSpec::aldc(Rational(1, 2)));
    CHECK(AlgorithmSpec::parse("a-dc").speed() == Rational(1));
    CHECK(AlgorithmSpec::aldc(Rational(1, 2)).label() == "a-ldc(1/2)");
    CHECK(AlgorithmSpec::bal().label() == "bal");
    CHECK_THROWS_AS(AlgorithmSpec::parse("greedy", Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(AlgorithmSpec::parse("lru"), std::invalid_argument);
    CHECK_THROWS_AS(AlgorithmState(AlgorithmSpec::adc(Rational(3)), ProblemParams(Rational(2))),
                    std::invalid_argument);
    CHECK_THROWS_AS(AlgorithmState(AlgorithmSpec::adc(Rational(0)), ProblemParams(Rational(2))),
                    std::invalid_argument);
}

TEST_CASE("laziness classification")
{
    CHECK(AlgorithmSpec::greedy().is_lazy());
    CHECK(AlgorithmSpec::ldc().is_lazy());
    CHECK(AlgorithmSpec::bal().is_lazy());
    CHECK(AlgorithmSpec::dummy().is_lazy());
    CHECK_FALSE(AlgorithmSpec::dc().is_lazy());
    CHECK_FALSE(AlgorithmSpec::adc(Rational(1, 2)).is_lazy());
    CHECK_FALSE(AlgorithmSpec::opt().is_online());
}

TEST_CASE("single-step examples at d = 2")
{
    const ProblemParams two(Rational(2));
    auto greedy = AlgorithmState(AlgorithmSpec::greedy(), two).apply(Point::B);
    CHECK(greedy.mover == Mover::left);
    CHECK(greedy.distance == Rational(1));

    auto bal = AlgorithmState(AlgorithmSpec::bal(), two).apply(Point::B);
    CHECK(bal.mover == Mover::left);

    auto dummy = AlgorithmState(AlgorithmSpec::dummy(), two).apply(Point::B);
    CHECK(dummy.mover == Mover::right);
    CHECK(dummy.distance == Rational(2));

    auto dc = AlgorithmState(AlgorithmSpec::dc(), two).apply(Point::B);
    CHECK(dc.mover == Mover::both);
    CHECK(dc.distance == Rational(2));
}

TEST_CASE("worked sequences")
{
    const ProblemParams two(Rational(2));
    CHECK(run(AlgorithmSpec::ldc(), two, parse_sequence("BABABC")).total == Rational(8));
    CHECK(run(AlgorithmSpec::ldc(), two, parse_sequence("(BA)^8")).total == Rational(6));
    CHECK(run(AlgorithmSpec::greedy(), two, parse_sequence("BABABC")).total == Rational(5));
    CHECK(run(AlgorithmSpec::greedy(), two, parse_sequence("(BA)^8")).total == Rational(16));
    CHECK(run(AlgorithmSpec::dc(), two, parse_sequence("BABC")).total == Rational(7));
    CHECK(run(AlgorithmSpec::ldc(), two, parse_sequence("BABC")).total == Rational(3));
    CHECK(run(AlgorithmSpec::ldc(), two, parse_sequence("BABAB")).total == Rational(6));
    for (const auto& spec : online_specs(two.d())) CHECK(cost_of(spec, two, parse_sequence("AAAACCC")) == Rational(0));
}

TEST_CASE("engine agrees with the coordinate-level reference")
{
    for (Rational d : d_grid) {
        const ProblemParams params(d);
        struct Pair {
            AlgorithmSpec spec;
            std::string ref;
            Rational a;
        };
        std::vector<Pair> pairs = {{AlgorithmSpec::greedy(), "greedy", 1}, {AlgorithmSpec::dummy(), "dummy", 1},
                                   {AlgorithmSpec::bal(), "bal", 1},       {AlgorithmSpec::dc(), "dc", 1},
                                   {AlgorithmSpec::ldc(), "ldc", 1}};
        for (Rational a : {Rational(1, 2), Rational(2), Rational(3)})
            if (a <= d) {
                pairs.push_back({AlgorithmSpec::adc(a), "dc", a});
                pairs.push_back({AlgorithmSpec::aldc(a), "ldc", a});
            }
        for (const auto& [spec, ref, a] : pairs)
            for (std::size_t n = 0; n <= 7; ++n)
                for (const auto& seq : all_sequences(n)) {
                    const Rational got = cost_of(spec, params, seq);
                    const Rational want = reference_cost(ref, a, d, seq);
                    if (got != want) {
                        CAPTURE(spec.label());
                        CAPTURE(d.str());
                        CAPTURE(seq.str());
                        CHECK(got.str() == want.str());
                        return;
                    }
                }
    }
}

TEST_CASE("traces are consistent and respect the invariants")
{
    for (Rational d : d_grid) {
        const ProblemParams params(d);
        for (const auto& spec : online_specs(d))
            for (std::size_t n = 0; n <= 6; ++n)
                for (const auto& seq : all_sequences(n)) {
                    AlgorithmState state(spec, params);
                    Rational total;
                    for (Point p : seq.requests) {
                        const bool covered = state.covers(p);
                        auto [pure_next, pure_move] = step(state, p);
                        auto move = state.apply(p);
                        CHECK(pure_next == state);
                        CHECK(pure_move.distance == move.distance);
                        CHECK(state.covers(p));
                        CHECK(move.distance >= Rational(0));
                        if (spec.is_lazy()) {
                            CHECK(move.mover != Mover::both);
                            if (covered) CHECK(move.mover == Mover::none);
                        }
                        state.check_invariants();
                        total += move.distance;
                    }
                    auto report = run(spec, params, seq);
                    CHECK_NOTHROW(report.verify());
                    CHECK(report.total == total);
                    CHECK(report.trace.size() == seq.size());
                }
    }
}

TEST_CASE("Greedy never moves the server on C and pays one per run")
{
    const ProblemParams params(Rational(5, 2));
    for (std::size_t n = 1; n <= 12; ++n) {
        SequenceStream stream(n, {});
        RequestSequence seq;
        while (stream.next(seq)) {
            bool has_c = false;
            for (Point p : seq.requests) has_c = has_c || p == Point::C;
            if (has_c) continue;
            const auto runs = static_cast<std::int64_t>(count_runs(seq));
            const std::int64_t expected = runs - (seq.requests.front() == Point::A ? 1 : 0);
            CHECK(cost_of(AlgorithmSpec::greedy(), params, seq) == Rational(expected));
        }
    }
    AlgorithmState state(AlgorithmSpec::greedy(), params);
    for (Point p : parse_sequence("BABCABACCBB").requests) {
        state.apply(p);
        CHECK(state.real_positions().right == point_position(Point::C, params));
    }
}

TEST_CASE("speed one reproduces the plain algorithms")
{
    for (Rational d : d_grid) {
        const ProblemParams params(d);
        for (std::size_t n = 0; n <= 8; ++n)
            for (const auto& seq : all_sequences(n)) {
                CHECK(cost_of(AlgorithmSpec::adc(1), params, seq) == cost_of(AlgorithmSpec::dc(), params, seq));
                CHECK(cost_of(AlgorithmSpec::aldc(1), params, seq) == cost_of(AlgorithmSpec::ldc(), params, seq));
            }
    }
}

TEST_CASE("a lazy version never costs more than its original")
{
    for (Rational d : d_grid)
        for (Rational a : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
            const ProblemParams params(d);
            for (std::size_t n = 0; n <= 8; ++n)
                for (const auto& seq : all_sequences(n))
                    CHECK(cost_of(AlgorithmSpec::aldc(a), params, seq) <= cost_of(AlgorithmSpec::adc(a), params, seq));
        }
}

TEST_CASE("equal state keys imply equal futures")
{
    // Key equality is what the worst-order DP and the scans rely on.
    const ProblemParams params(Rational(5, 2));
    const auto suffixes = all_sequences(4);
    for (const auto& spec : online_specs(params.d())) {
        std::vector<std::pair<StateKey, std::vector<Rational>>> seen;
        for (std::size_t n = 0; n <= 5; ++n)
            for (const auto& prefix : all_sequences(n)) {
                Evaluator base(spec, params);
                for (Point p : prefix.requests) base.feed(p);
                std::vector<Rational> future;
                for (const auto& suffix : suffixes) {
                    Evaluator e = base;
                    for (Point p : suffix.requests) e.feed(p);
                    future.push_back(e.total() - base.total());
                }
                for (const auto& [key, other] : seen)
                    if (key == base.key()) {
                        CAPTURE(spec.label());
                        CAPTURE(prefix.str());
                        REQUIRE(other == future);
                    }
                seen.emplace_back(base.key(), std::move(future));
            }
    }
}

TEST_CASE("evaluator totals match run")
{
    const ProblemParams params(Rational(2));
    std::vector<AlgorithmSpec> specs = online_specs(params.d());
    specs.push_back(AlgorithmSpec::opt());
    for (const auto& spec : specs)
        for (const auto& seq : all_sequences(6)) {
            Evaluator e(spec, params);
            for (Point p : seq.requests) e.feed(p);
            CHECK(e.total() == run(spec, params, seq).total);
        }
}
