#include "bsl/core.hpp"

#include <charconv>
#include <ostream>

namespace bsl {

char to_char(Point p)
{
    switch (p) {
    case Point::A: return 'A';
    case Point::B: return 'B';
    case Point::C: return 'C';
    }
    return '?';
}

Point point_from_char(char c)
{
    switch (c) {
    case 'A': return Point::A;
    case 'B': return Point::B;
    case 'C': return Point::C;
    default: throw std::invalid_argument(std::string("not a request point: '") + c + "'");
    }
}

ProblemParams::ProblemParams(Rational d) : d_(d)
{
    if (d_ <= Rational(1)) throw std::invalid_argument("distance d must be > 1, got " + d_.str());
}

ProblemParams ProblemParams::parse(std::string_view d) { return ProblemParams(Rational::parse(d)); }

Rational point_position(Point p, const ProblemParams& params)
{
    switch (p) {
    case Point::A: return 0;
    case Point::B: return 1;
    case Point::C: return Rational(1) + params.d();
    }
    return 0;
}

Configuration::Configuration(Point left, Point right) : left_(left), right_(right)
{
    if (static_cast<int>(left) >= static_cast<int>(right))
        throw std::invalid_argument("configuration requires left < right");
}

Point Configuration::uncovered() const
{
    for (Point p : all_points)
        if (!covers(p)) return p;
    return Point::A;  // unreachable for a valid configuration
}

std::string Configuration::str() const { return {'{', to_char(left_), ',', to_char(right_), '}'}; }

const std::array<Configuration, 3>& all_configurations()
{
    static const std::array<Configuration, 3> configs{
        Configuration(Point::A, Point::B), Configuration(Point::A, Point::C), Configuration(Point::B, Point::C)};
    return configs;
}

Rational config_move_cost(const Configuration& from, const Configuration& to, const ProblemParams& params)
{
    return abs(point_position(from.left(), params) - point_position(to.left(), params))
        + abs(point_position(from.right(), params) - point_position(to.right(), params));
}

std::int64_t RequestMultiset::count(Point p) const
{
    switch (p) {
    case Point::A: return n_a;
    case Point::B: return n_b;
    case Point::C: return n_c;
    }
    return 0;
}

std::int64_t& RequestMultiset::count(Point p)
{
    switch (p) {
    case Point::A: return n_a;
    case Point::B: return n_b;
    default: return n_c;
    }
}

std::string RequestMultiset::str() const
{
    return "A:" + std::to_string(n_a) + ",B:" + std::to_string(n_b) + ",C:" + std::to_string(n_c);
}

RequestMultiset RequestMultiset::parse(std::string_view text)
{
    RequestMultiset m;
    std::size_t pos = 0;
    bool seen[3] = {false, false, false};
    while (pos < text.size()) {
        char label = text[pos];
        if (label != 'A' && label != 'B' && label != 'C') throw ParseError("expected A, B or C in multiset", pos);
        auto idx = static_cast<std::size_t>(point_from_char(label));
        if (seen[idx]) throw ParseError(std::string("duplicate multiset key ") + label, pos);
        seen[idx] = true;
        if (pos + 1 >= text.size() || text[pos + 1] != ':') throw ParseError("expected ':' in multiset", pos + 1);
        pos += 2;
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
        if (ec != std::errc{} || ptr != text.data() + end || value < 0 || end == pos)
            throw ParseError("expected a nonnegative count in multiset", pos);
        m.count(point_from_char(label)) = value;
        pos = end == text.size() ? end : end + 1;
    }
    return m;
}

RequestMultiset RequestSequence::signature() const
{
    RequestMultiset m;
    for (Point p : requests) ++m.count(p);
    return m;
}

std::string RequestSequence::str() const
{
    std::string s;
    s.reserve(requests.size());
    for (Point p : requests) s.push_back(to_char(p));
    return s;
}

namespace {

class SequenceParser {
public:
    SequenceParser(std::string_view text, std::size_t cap) : text_(text), cap_(cap) {}

    std::vector<Point> parse()
    {
        auto out = parse_concat();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return out;
    }

private:
    std::vector<Point> parse_concat()
    {
        std::vector<Point> out;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == 'A' || c == 'B' || c == 'C') {
                append(out, {point_from_char(c)}, 1);
                ++pos_;
            }
            else if (c == '(') {
                std::size_t open = pos_++;
                auto body = parse_concat();
                if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("unclosed group", open);
                ++pos_;
                if (pos_ >= text_.size() || text_[pos_] != '^') throw ParseError("expected '^' after group", pos_);
                ++pos_;
                append(out, body, parse_count());
            }
            else if (c == ')') {
                break;
            }
            else {
                throw ParseError(std::string("unexpected '") + c + "'", pos_);
            }
        }
        return out;
    }

    std::uint64_t parse_count()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (start == pos_) throw ParseError("expected repetition count", start);
        std::uint64_t k = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, k);
        if (ec != std::errc{}) throw BudgetError("repetition count too large");
        return k;
    }

    void append(std::vector<Point>& out, const std::vector<Point>& body, std::uint64_t times)
    {
        if (!body.empty() && times > (cap_ - out.size()) / body.size())
            throw BudgetError("expanded sequence exceeds cap of " + std::to_string(cap_) + " requests");
        for (std::uint64_t i = 0; i < times; ++i) out.insert(out.end(), body.begin(), body.end());
    }

    std::string_view text_;
    std::size_t cap_;
    std::size_t pos_ = 0;
};

}  // namespace

RequestSequence parse_sequence(std::string_view text, std::size_t cap)
{
    return RequestSequence{SequenceParser(text, cap).parse()};
}

std::string_view to_string(Mover m)
{
    switch (m) {
    case Mover::none: return "none";
    case Mover::left: return "left";
    case Mover::right: return "right";
    case Mover::both: return "both";
    }
    return "?";
}

void CostReport::verify() const
{
    Rational sum;
    for (const auto& move : trace) {
        if (move.distance < Rational(0)) throw std::logic_error("negative move distance in trace");
        sum += move.distance;
    }
    if (sum != total) throw std::logic_error("cost total " + total.str() + " != trace sum " + sum.str());
}

std::ostream& operator<<(std::ostream& os, Point p) { return os << to_char(p); }
std::ostream& operator<<(std::ostream& os, const RequestSequence& s) { return os << s.str(); }

}  // namespace bsl
