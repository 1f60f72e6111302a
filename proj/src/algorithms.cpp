#include "bsl/algorithms.hpp"

#include <stdexcept>

namespace bsl {

// ---------------------------------------------------------------------------
// AlgorithmSpec

AlgorithmSpec AlgorithmSpec::lazy_of(const AlgorithmSpec& inner)
{
    if (inner.kind_ == AlgorithmKind::opt) throw std::invalid_argument("opt has no lazy version");
    AlgorithmSpec spec = inner;
    if (inner.kind_ == AlgorithmKind::dc || inner.kind_ == AlgorithmKind::adc) spec.lazy_ = true;
    return spec;
}

AlgorithmSpec AlgorithmSpec::parse(std::string_view name, std::optional<Rational> speed)
{
    bool with_speed = name == "a-dc" || name == "a-ldc";
    if (speed && !with_speed)
        throw std::invalid_argument("speed applies only to a-dc and a-ldc, not '" + std::string(name) + "'");
    Rational a = speed.value_or(Rational(1));
    if (name == "greedy") return greedy();
    if (name == "dc") return dc();
    if (name == "a-dc") return adc(a);
    if (name == "ldc") return ldc();
    if (name == "a-ldc") return aldc(a);
    if (name == "bal") return bal();
    if (name == "dummy") return dummy();
    if (name == "opt") return opt();
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

bool AlgorithmSpec::is_lazy() const
{
    switch (kind_) {
    case AlgorithmKind::greedy:
    case AlgorithmKind::bal:
    case AlgorithmKind::dummy: return true;
    case AlgorithmKind::dc:
    case AlgorithmKind::adc: return lazy_;
    case AlgorithmKind::opt: return false;
    }
    return false;
}

std::string AlgorithmSpec::name() const
{
    switch (kind_) {
    case AlgorithmKind::greedy: return "greedy";
    case AlgorithmKind::dc: return lazy_ ? "ldc" : "dc";
    case AlgorithmKind::adc: return lazy_ ? "a-ldc" : "a-dc";
    case AlgorithmKind::bal: return "bal";
    case AlgorithmKind::dummy: return "dummy";
    case AlgorithmKind::opt: return "opt";
    }
    return "?";
}

std::string AlgorithmSpec::label() const
{
    if (kind_ == AlgorithmKind::adc) return name() + "(" + a_.str() + ")";
    return name();
}

void AlgorithmSpec::validate(const ProblemParams& params) const
{
    if (kind_ != AlgorithmKind::adc) return;
    if (a_ <= Rational(0) || a_ > params.d())
        throw std::invalid_argument("speed a must satisfy 0 < a <= d, got a=" + a_.str() + " d=" + params.d().str());
}

// ---------------------------------------------------------------------------
// Stepping

namespace {

struct LineStep {
    Rational cost;
    Mover mover = Mover::none;
};

// Double coverage with the right server moving `a` times faster. Coincident
// servers: a request to their left moves the left one, to their right the
// right one, so the order is kept.
LineStep step_line(LineState& s, const Rational& x, const Rational& a)
{
    if (x == s.left || x == s.right) return {};
    if (s.left < x && x < s.right) {
        Rational t = min(x - s.left, (s.right - x) / a);
        s.left += t;
        s.right -= a * t;
        return {t + a * t, Mover::both};
    }
    if (x < s.left) {
        Rational cost = s.left - x;
        s.left = x;
        return {cost, Mover::left};
    }
    Rational cost = x - s.right;
    s.right = x;
    return {cost, Mover::right};
}

Configuration move_to(const Configuration& c, Mover mover, Point target)
{
    return mover == Mover::left ? Configuration(target, c.right()) : Configuration(c.left(), target);
}

// The real server closer to p. Distances 1, d and 1+d never tie here.
Mover closer_real(const Configuration& c, Point p, const ProblemParams& params)
{
    Rational x = point_position(p, params);
    Rational dl = abs(x - point_position(c.left(), params));
    Rational dr = abs(x - point_position(c.right(), params));
    if (dl == dr) throw std::logic_error("equidistant real servers");
    return dl < dr ? Mover::left : Mover::right;
}

int config_index(const Configuration& c)
{
    const auto& all = all_configurations();
    for (int i = 0; i < 3; ++i)
        if (all[static_cast<std::size_t>(i)] == c) return i;
    return -1;
}

}  // namespace

AlgorithmState::AlgorithmState(const AlgorithmSpec& spec, const ProblemParams& params)
    : spec_(spec), params_(params)
{
    if (!spec.is_online()) throw std::invalid_argument("opt is offline and has no step engine");
    spec.validate(params);
    switch (spec.kind()) {
    case AlgorithmKind::greedy:
    case AlgorithmKind::dummy: inner_ = initial_configuration; break;
    case AlgorithmKind::bal: inner_ = BalanceState{0, 0, initial_configuration}; break;
    case AlgorithmKind::dc:
    case AlgorithmKind::adc: {
        LineState line{0, point_position(Point::C, params)};
        if (spec.lazy_wrapped())
            inner_ = VirtualState{line, initial_configuration};
        else
            inner_ = line;
        break;
    }
    case AlgorithmKind::opt: break;
    }
}

MoveRecord AlgorithmState::apply(Point request)
{
    MoveRecord rec{request, Mover::none, 0};
    const Rational x = point_position(request, params_);

    if (auto* line = std::get_if<LineState>(&inner_)) {
        auto r = step_line(*line, x, spec_.speed());
        rec.mover = r.mover;
        rec.distance = r.cost;
        return rec;
    }

    if (auto* vs = std::get_if<VirtualState>(&inner_)) {
        step_line(vs->virt, x, spec_.speed());
        if (vs->real.covers(request)) return rec;
        bool left_here = vs->virt.left == x;
        bool right_here = vs->virt.right == x;
        Mover twin;
        if (left_here && right_here)
            twin = closer_real(vs->real, request, params_);
        else if (left_here)
            twin = Mover::left;
        else if (right_here)
            twin = Mover::right;
        else
            throw std::logic_error("lazy wrapper: no virtual server on the request");
        Point from = twin == Mover::left ? vs->real.left() : vs->real.right();
        vs->real = move_to(vs->real, twin, request);
        rec.mover = twin;
        rec.distance = abs(x - point_position(from, params_));
        return rec;
    }

    if (auto* cfg = std::get_if<Configuration>(&inner_)) {
        if (cfg->covers(request)) return rec;
        Mover mover;
        if (spec_.kind() == AlgorithmKind::dummy && cfg->left() < request && request < cfg->right())
            mover = closer_real(*cfg, request, params_) == Mover::left ? Mover::right : Mover::left;
        else
            mover = closer_real(*cfg, request, params_);
        Point from = mover == Mover::left ? cfg->left() : cfg->right();
        *cfg = move_to(*cfg, mover, request);
        rec.mover = mover;
        rec.distance = abs(x - point_position(from, params_));
        return rec;
    }

    auto& bal = std::get<BalanceState>(inner_);
    if (bal.real.covers(request)) return rec;
    Rational to_left = abs(x - point_position(bal.real.left(), params_));
    Rational to_right = abs(x - point_position(bal.real.right(), params_));
    Mover mover;
    if (bal.real.left() < request && request < bal.real.right()) {
        Rational max_if_left = max(bal.d_left + to_left, bal.d_right);
        Rational max_if_right = max(bal.d_left, bal.d_right + to_right);
        if (max_if_left != max_if_right)
            mover = max_if_left < max_if_right ? Mover::left : Mover::right;
        else
            mover = to_left > to_right ? Mover::left : Mover::right;
    }
    else {
        mover = closer_real(bal.real, request, params_);
    }
    rec.mover = mover;
    rec.distance = mover == Mover::left ? to_left : to_right;
    (mover == Mover::left ? bal.d_left : bal.d_right) += rec.distance;
    bal.real = move_to(bal.real, mover, request);
    return rec;
}

bool AlgorithmState::covers(Point p) const
{
    if (const auto* line = std::get_if<LineState>(&inner_)) {
        Rational x = point_position(p, params_);
        return line->left == x || line->right == x;
    }
    if (const auto* vs = std::get_if<VirtualState>(&inner_)) return vs->real.covers(p);
    if (const auto* cfg = std::get_if<Configuration>(&inner_)) return cfg->covers(p);
    return std::get<BalanceState>(inner_).real.covers(p);
}

LineState AlgorithmState::real_positions() const
{
    if (const auto* line = std::get_if<LineState>(&inner_)) return *line;
    Configuration c;
    if (const auto* vs = std::get_if<VirtualState>(&inner_))
        c = vs->real;
    else if (const auto* cfg = std::get_if<Configuration>(&inner_))
        c = *cfg;
    else
        c = std::get<BalanceState>(inner_).real;
    return {point_position(c.left(), params_), point_position(c.right(), params_)};
}

StateKey AlgorithmState::key() const
{
    StateKey k{};
    k[0] = static_cast<std::int64_t>(inner_.index());
    if (const auto* line = std::get_if<LineState>(&inner_)) {
        k[1] = line->left.num();
        k[2] = line->left.den();
        k[3] = line->right.num();
        k[4] = line->right.den();
    }
    else if (const auto* vs = std::get_if<VirtualState>(&inner_)) {
        k[1] = vs->virt.left.num();
        k[2] = vs->virt.left.den();
        k[3] = vs->virt.right.num();
        k[4] = vs->virt.right.den();
        k[5] = config_index(vs->real);
    }
    else if (const auto* cfg = std::get_if<Configuration>(&inner_)) {
        k[5] = config_index(*cfg);
    }
    else {
        const auto& bal = std::get<BalanceState>(inner_);
        Rational diff = bal.d_left - bal.d_right;
        k[1] = diff.num();
        k[2] = diff.den();
        k[5] = config_index(bal.real);
    }
    return k;
}

void AlgorithmState::check_invariants() const
{
    auto real = real_positions();
    if (!(real.left <= real.right)) throw std::logic_error("real servers crossed");
    Rational c = point_position(Point::C, params_);
    if (real.left < Rational(0) || real.right > c) throw std::logic_error("server left the segment [A, C]");
    if (const auto* vs = std::get_if<VirtualState>(&inner_))
        if (!(vs->virt.left <= vs->virt.right)) throw std::logic_error("virtual servers crossed");
    if (const auto* bal = std::get_if<BalanceState>(&inner_))
        if (bal->d_left < Rational(0) || bal->d_right < Rational(0))
            throw std::logic_error("negative balance distance");
}

std::pair<AlgorithmState, MoveRecord> step(const AlgorithmState& state, Point request)
{
    AlgorithmState next = state;
    MoveRecord rec = next.apply(request);
    return {std::move(next), rec};
}

// ---------------------------------------------------------------------------
// Opt

OptFrontier::OptFrontier(const ProblemParams& params) : params_(params)
{
    best_[static_cast<std::size_t>(config_index(initial_configuration))] = Rational(0);
}

void OptFrontier::feed(Point request)
{
    const auto& configs = all_configurations();
    std::array<std::optional<Rational>, 3> next;
    for (std::size_t j = 0; j < 3; ++j) {
        if (!configs[j].covers(request)) continue;
        for (std::size_t i = 0; i < 3; ++i) {
            if (!best_[i]) continue;
            Rational c = *best_[i] + config_move_cost(configs[i], configs[j], params_);
            if (!next[j] || c < *next[j]) next[j] = c;
        }
    }
    best_ = next;
}

Rational OptFrontier::total() const
{
    std::optional<Rational> m;
    for (const auto& b : best_)
        if (b && (!m || *b < *m)) m = b;
    return *m;
}

StateKey OptFrontier::key() const
{
    // Relative costs per configuration determine all future increments.
    Rational base = total();
    StateKey k{};
    k[0] = 4;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!best_[i]) {
            k[1 + 2 * i] = -1;
            continue;
        }
        Rational rel = *best_[i] - base;
        k[1 + 2 * i] = rel.num();
        k[2 + 2 * i] = rel.den();
    }
    return k;
}

Evaluator::Evaluator(const AlgorithmSpec& spec, const ProblemParams& params)
    : engine_(spec.is_online() ? std::variant<AlgorithmState, OptFrontier>(AlgorithmState(spec, params))
                               : std::variant<AlgorithmState, OptFrontier>(OptFrontier(params)))
{
}

void Evaluator::feed(Point request)
{
    if (auto* st = std::get_if<AlgorithmState>(&engine_)) {
        total_ += st->apply(request).distance;
        return;
    }
    auto& opt = std::get<OptFrontier>(engine_);
    opt.feed(request);
    total_ = opt.total();
}

StateKey Evaluator::key() const
{
    if (const auto* st = std::get_if<AlgorithmState>(&engine_)) return st->key();
    return std::get<OptFrontier>(engine_).key();
}

CostReport run(const AlgorithmSpec& spec, const ProblemParams& params, const RequestSequence& seq)
{
    if (!spec.is_online()) return opt_cost(params, seq);
    AlgorithmState state(spec, params);
    CostReport report;
    report.trace.reserve(seq.size());
    for (Point p : seq.requests) {
        auto rec = state.apply(p);
        report.total += rec.distance;
        report.trace.push_back(rec);
    }
    report.verify();
    return report;
}

CostReport opt_cost(const ProblemParams& params, const RequestSequence& seq)
{
    const auto& configs = all_configurations();
    const std::size_t n = seq.size();
    // togo[i][c]: cheapest cost of serving requests i.. from configuration c.
    std::vector<std::array<Rational, 3>> togo(n + 1);
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t c = 0; c < 3; ++c) {
            std::optional<Rational> best;
            for (std::size_t j = 0; j < 3; ++j) {
                if (!configs[j].covers(seq.requests[i])) continue;
                Rational cost = config_move_cost(configs[c], configs[j], params) + togo[i + 1][j];
                if (!best || cost < *best) best = cost;
            }
            togo[i][c] = *best;
        }
    }

    CostReport report;
    Configuration at = initial_configuration;
    for (std::size_t i = 0; i < n; ++i) {
        std::optional<std::size_t> pick;
        Rational pick_total;
        Rational pick_move;
        for (std::size_t j = 0; j < 3; ++j) {
            if (!configs[j].covers(seq.requests[i])) continue;
            Rational move = config_move_cost(at, configs[j], params);
            Rational total = move + togo[i + 1][j];
            bool better = !pick || total < pick_total
                || (total == pick_total
                    && (move < pick_move
                        || (move == pick_move && configs[j].right() == at.right()
                            && configs[*pick].right() != at.right())));
            if (better) {
                pick = j;
                pick_total = total;
                pick_move = move;
            }
        }
        const Configuration& next = configs[*pick];
        Mover mover = Mover::none;
        if (next.left() != at.left() && next.right() != at.right())
            mover = Mover::both;
        else if (next.left() != at.left())
            mover = Mover::left;
        else if (next.right() != at.right())
            mover = Mover::right;
        report.trace.push_back({seq.requests[i], mover, pick_move});
        report.total += pick_move;
        at = next;
    }
    if (report.total != togo[0][static_cast<std::size_t>(config_index(initial_configuration))])
        throw std::logic_error("opt trace does not reproduce the optimal total");
    report.verify();
    return report;
}

Rational cost_of(const AlgorithmSpec& spec, const ProblemParams& params, const RequestSequence& seq)
{
    Evaluator ev(spec, params);
    for (Point p : seq.requests) ev.feed(p);
    return ev.total();
}

}  // namespace bsl
