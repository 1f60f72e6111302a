#pragma once

// Geometry and cost primitives of the baby server problem: two servers on
// the three colinear points A, B, C with |AB| = 1 and |BC| = d > 1. The
// servers start on A and C.

#include "bsl/errors.hpp"
#include "bsl/rational.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bsl {

enum class Point : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr std::array<Point, 3> all_points{Point::A, Point::B, Point::C};

char to_char(Point p);
Point point_from_char(char c);

/// Line geometry. Construction rejects d <= 1.
class ProblemParams {
public:
    explicit ProblemParams(Rational d);
    static ProblemParams parse(std::string_view d);

    [[nodiscard]] const Rational& d() const { return d_; }

    friend bool operator==(const ProblemParams&, const ProblemParams&) = default;

private:
    Rational d_;
};

/// Coordinate on the line: A = 0, B = 1, C = 1 + d.
Rational point_position(Point p, const ProblemParams& params);

/// Real server placement. Servers sit on distinct points, left < right.
class Configuration {
public:
    constexpr Configuration() = default;
    Configuration(Point left, Point right);

    [[nodiscard]] constexpr Point left() const { return left_; }
    [[nodiscard]] constexpr Point right() const { return right_; }
    [[nodiscard]] constexpr bool covers(Point p) const { return p == left_ || p == right_; }
    /// The one point without a server.
    [[nodiscard]] Point uncovered() const;
    [[nodiscard]] std::string str() const;

    friend constexpr bool operator==(const Configuration&, const Configuration&) = default;

private:
    Point left_ = Point::A;
    Point right_ = Point::C;
};

inline const Configuration initial_configuration{};

/// {A,B}, {A,C}, {B,C} in that order.
const std::array<Configuration, 3>& all_configurations();

/// |left - left'| + |right - right'|: the cheapest noncrossing transfer.
Rational config_move_cost(const Configuration& from, const Configuration& to, const ProblemParams& params);

/// Counts of each point in a sequence.
struct RequestMultiset {
    std::int64_t n_a = 0;
    std::int64_t n_b = 0;
    std::int64_t n_c = 0;

    [[nodiscard]] std::int64_t size() const { return n_a + n_b + n_c; }
    [[nodiscard]] std::int64_t count(Point p) const;
    std::int64_t& count(Point p);
    /// "A:2,B:3,C:1"
    [[nodiscard]] std::string str() const;
    static RequestMultiset parse(std::string_view text);

    friend bool operator==(const RequestMultiset&, const RequestMultiset&) = default;
};

struct RequestSequence {
    std::vector<Point> requests;

    [[nodiscard]] std::size_t size() const { return requests.size(); }
    [[nodiscard]] bool empty() const { return requests.empty(); }
    [[nodiscard]] RequestMultiset signature() const;
    /// Plain letters, e.g. "BABABC".
    [[nodiscard]] std::string str() const;

    friend bool operator==(const RequestSequence&, const RequestSequence&) = default;
    friend auto operator<=>(const RequestSequence&, const RequestSequence&) = default;
};

inline constexpr std::size_t default_sequence_cap = 1'000'000;

/// Parses concatenations of A/B/C literals and groups "(...)^k", k >= 0.
/// Throws ParseError with the offending position, BudgetError when the
/// expansion exceeds `cap` requests.
RequestSequence parse_sequence(std::string_view text, std::size_t cap = default_sequence_cap);

enum class Mover : std::uint8_t { none, left, right, both };

std::string_view to_string(Mover m);

struct MoveRecord {
    Point request = Point::A;
    Mover mover = Mover::none;
    Rational distance;
};

/// Exact total plus the per-request move log. total == sum of distances.
struct CostReport {
    Rational total;
    std::vector<MoveRecord> trace;

    /// Throws std::logic_error if the total and the trace disagree or a
    /// distance is negative.
    void verify() const;
};

std::ostream& operator<<(std::ostream& os, Point p);
std::ostream& operator<<(std::ostream& os, const RequestSequence& s);

}  // namespace bsl
