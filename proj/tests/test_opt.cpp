#include "bsl/algorithms.hpp"
#include "bsl/enumeration.hpp"

#include <doctest.h>

#include <optional>

using namespace bsl;

namespace {

// Exhaustive choice tree: each request is served by a covering server
// staying put or by moving either server onto it.
Rational choice_tree(const ProblemParams& params, const RequestSequence& seq, std::size_t i, const Rational& x,
                     const Rational& y)
{
    if (i == seq.size()) return 0;
    const Rational t = point_position(seq.requests[i], params);
    std::optional<Rational> best;
    auto consider = [&](Rational v) {
        if (!best || v < *best) best = v;
    };
    if (x == t || y == t) consider(choice_tree(params, seq, i + 1, x, y));
    consider(abs(x - t) + choice_tree(params, seq, i + 1, t, y));
    consider(abs(y - t) + choice_tree(params, seq, i + 1, x, t));
    return *best;
}

Rational oracle(const ProblemParams& params, const RequestSequence& seq)
{
    return choice_tree(params, seq, 0, point_position(Point::A, params), point_position(Point::C, params));
}

}  // namespace

TEST_CASE("Opt worked values at d = 2")
{
    const ProblemParams two(Rational(2));
    CHECK(opt_cost(two, parse_sequence("BABABC")).total == Rational(4));
    CHECK(opt_cost(two, parse_sequence("(BA)^8")).total == Rational(2));
    CHECK(opt_cost(two, parse_sequence("ABABABC")).total == Rational(4));
    CHECK(opt_cost(two, parse_sequence("AABB")).total == Rational(1));
    CHECK(opt_cost(two, parse_sequence("AAAA")).total == Rational(0));
    CHECK(opt_cost(two, parse_sequence("")).total == Rational(0));
    for (Rational d : {Rational(3, 2), Rational(7, 3)})
        CHECK(opt_cost(ProblemParams(d), parse_sequence("AAAA")).total == Rational(0));
}

TEST_CASE("Opt matches the exhaustive choice tree")
{
    for (Rational d : {Rational(3, 2), Rational(2), Rational(5, 2), Rational(3)}) {
        const ProblemParams params(d);
        for (std::size_t n = 0; n <= 7; ++n)
            for (const auto& seq : all_sequences(n)) {
                const auto report = opt_cost(params, seq);
                CAPTURE(seq.str());
                CHECK(report.total == oracle(params, seq));
                CHECK_NOTHROW(report.verify());
            }
    }
}

TEST_CASE("Opt trace is a legal schedule")
{
    const ProblemParams params(Rational(5, 2));
    for (const auto& seq : all_sequences(6)) {
        const auto report = opt_cost(params, seq);
        REQUIRE(report.trace.size() == seq.size());
        // Replay the trace on explicit coordinates.
        Rational left = point_position(Point::A, params), right = point_position(Point::C, params);
        Rational total;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const Rational t = point_position(seq.requests[i], params);
            const auto& mv = report.trace[i];
            if (mv.mover == Mover::left) {
                CHECK(mv.distance == abs(left - t));
                left = t;
            }
            else if (mv.mover == Mover::right) {
                CHECK(mv.distance == abs(right - t));
                right = t;
            }
            else {
                CHECK(mv.mover == Mover::none);
            }
            CHECK((left == t || right == t));
            total += mv.distance;
        }
        CHECK(total == report.total);
    }
}

TEST_CASE("Opt never exceeds an online algorithm and the frontier agrees")
{
    const ProblemParams params(Rational(2));
    const AlgorithmSpec online[] = {AlgorithmSpec::greedy(), AlgorithmSpec::ldc(), AlgorithmSpec::dc(),
                                    AlgorithmSpec::bal(), AlgorithmSpec::dummy()};
    for (std::size_t n = 0; n <= 7; ++n)
        for (const auto& seq : all_sequences(n)) {
            const Rational opt = opt_cost(params, seq).total;
            OptFrontier frontier(params);
            for (Point p : seq.requests) frontier.feed(p);
            CHECK(frontier.total() == opt);
            CHECK(cost_of(AlgorithmSpec::opt(), params, seq) == opt);
            for (const auto& spec : online) CHECK(opt <= cost_of(spec, params, seq));
        }
}
