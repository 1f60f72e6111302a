#include "bsl/cli.hpp"

#include "bsl/measures.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace bsl {

using nlohmann::ordered_json;

namespace {

const std::vector<std::string> measure_names = {"competitive", "maxmax", "random-order", "bijective", "average", "rwo"};

std::optional<Rational> speed_of(const std::optional<std::string>& text)
{
    if (!text) return std::nullopt;
    return Rational::parse(*text);
}

AlgorithmSpec spec_of(const std::string& name, const std::optional<std::string>& speed, const char* flag)
{
    if (name.empty()) throw std::invalid_argument(std::string(flag) + " is required");
    return AlgorithmSpec::parse(name, speed_of(speed));
}

std::size_t need_n(const ExperimentConfig& c)
{
    if (!c.n) throw std::invalid_argument("--n is required");
    if (*c.n < 0) throw std::invalid_argument("--n must be >= 0");
    return static_cast<std::size_t>(*c.n);
}

std::string need(const std::string& value, const char* flag)
{
    if (value.empty()) throw std::invalid_argument(std::string(flag) + " is required");
    return value;
}

MeasureOptions options_of(const ExperimentConfig& c)
{
    MeasureOptions o;
    o.budget.max_sequences = c.max_seqs;
    o.budget.max_permutations = c.max_perms;
    o.budget.rng_seed = c.seed;
    o.max_dp_states = c.max_dp_states;
    o.scan.jobs = c.jobs;
    return o;
}

Record base_record(const std::string& measure, const AlgorithmSpec& a, const ProblemParams& params)
{
    Record r;
    r.measure = measure;
    r.alg_a = a.label();
    r.d = params.d();
    if (a.kind() == AlgorithmKind::adc) r.a = a.speed();
    return r;
}

Record pair_record(const std::string& measure, const AlgorithmSpec& a, const AlgorithmSpec& b,
                   const ProblemParams& params)
{
    Record r = base_record(measure, a, params);
    r.alg_b = b.label();
    if (b.kind() == AlgorithmKind::adc) r.extra["b"] = b.speed().str();
    return r;
}

std::string label_of(Verdict v, bool strict)
{
    std::string s(to_string(v));
    if (strict) s += " strict";
    return s;
}

// ---------------------------------------------------------------------------

std::vector<Record> cmd_simulate(const ExperimentConfig& c)
{
    const auto params = ProblemParams::parse(need(c.d, "--d"));
    const auto spec = spec_of(c.alg, c.a, "--alg");
    const auto seq = parse_sequence(c.seq);
    const auto report = run(spec, params, seq);

    Record r = base_record("simulate", spec, params);
    r.n = static_cast<std::int64_t>(seq.size());
    r.value = report.total;
    r.extra["sequence"] = seq.str();
    if (c.trace) {
        auto steps = ordered_json::array();
        for (const auto& step : report.trace)
            steps.push_back({{"request", std::string(1, to_char(step.request))},
                             {"mover", std::string(to_string(step.mover))},
                             {"distance", step.distance.str()}});
        r.extra["trace"] = std::move(steps);
    }
    return {r};
}

std::vector<Record> cmd_worst(const ExperimentConfig& c)
{
    const auto params = ProblemParams::parse(need(c.d, "--d"));
    const auto spec = spec_of(c.alg, c.a, "--alg");
    const auto m = RequestMultiset::parse(need(c.multiset, "--multiset"));
    const auto options = options_of(c);

    Record r = base_record("worst", spec, params);
    r.n = m.size();
    r.extra["multiset"] = m.str();
    if (c.method == "cruel") {
        const auto canonical = cruel_adversary_sequence(spec, params, m);
        r.p = canonical.p;
        r.value = canonical.cost;
        r.exact = false;  // a construction, not a search
        r.extra["method"] = std::string(to_string(WorstMethod::cruel_adversary));
        r.extra["witness"] = canonical.sequence.str();
        r.extra["tail"] = canonical.tail.str();
        if (spec.kind() == AlgorithmKind::dc || spec.kind() == AlgorithmKind::adc) {
            if (spec.lazy_wrapped()) {
                const auto prediction = predicted_canonical_cost(m, params.d(), spec.speed());
                r.extra["predicted_p"] = prediction.p;
                r.extra["lower"] = prediction.lower.str();
                r.extra["upper"] = prediction.upper.str();
            }
        }
        return {r};
    }

    WorstOrderResult w;
    if (c.method == "brute")
        w = brute_force_worst(spec, params, m, options.budget, options.scan);
    else if (c.method == "dp")
        w = exact_dp_worst(spec, params, m, options.max_dp_states);
    else if (c.method == "auto")
        w = worst_order(spec, params, m, options.budget, options.max_dp_states, options.scan);
    else
        throw std::invalid_argument("unknown --method '" + c.method + "' (brute, dp, cruel, auto)");
    r.value = w.cost;
    r.exact = w.method != WorstMethod::cruel_adversary;
    r.extra["method"] = std::string(to_string(w.method));
    r.extra["witness"] = w.witness.str();
    return {r};
}

std::vector<std::int64_t> p_values_of(const ExperimentConfig& c)
{
    if (!c.p_list.empty()) return c.p_list;
    const std::int64_t p_max = c.p_max.value_or(16);
    if (p_max < 1) throw std::invalid_argument("--p-max must be >= 1");
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 1; p < p_max; p *= 2) ps.push_back(p);
    ps.push_back(p_max);
    return ps;
}

std::vector<Record> cmd_rwo(const ExperimentConfig& c, const ProblemParams& params, const MeasureOptions& options)
{
    const auto a = spec_of(c.alg, c.a, "--alg-a");
    const auto b = spec_of(c.alg_b, c.b, "--alg-b");
    if (!c.multiset.empty()) {
        const auto m = RequestMultiset::parse(c.multiset);
        const auto pair = rwo_pair_on_multiset(a, b, params, m, options);
        Record r = pair_record("rwo", a, b, params);
        r.n = m.size();
        if (pair.ratio_ab) r.value = *pair.ratio_ab;
        r.exact = pair.method_a != WorstMethod::cruel_adversary && pair.method_b != WorstMethod::cruel_adversary;
        r.extra["multiset"] = m.str();
        r.extra["worst_a"] = pair.worst_a.str();
        r.extra["worst_b"] = pair.worst_b.str();
        if (pair.ratio_ba) r.extra["ratio_ba"] = pair.ratio_ba->str();
        return {r};
    }

    const auto family = Family::parse(c.family);
    std::optional<Rational> slack;
    if (c.slack) slack = Rational::parse(*c.slack);
    const auto est = rwo_relatedness(a, b, params, family, p_values_of(c), slack, options);

    std::vector<Record> out;
    auto emit_series = [&](const std::vector<RelatednessPoint>& series, const AlgorithmSpec& num,
                           const AlgorithmSpec& den) {
        for (const auto& pt : series) {
            Record r = pair_record("rwo_series", num, den, params);
            r.p = pt.p;
            r.n = pt.multiset.size();
            r.value = pt.ratio;
            r.exact = pt.method_num != WorstMethod::cruel_adversary && pt.method_den != WorstMethod::cruel_adversary;
            r.extra["family"] = family.str();
            r.extra["multiset"] = pt.multiset.str();
            r.extra["worst_num"] = pt.worst_num.str();
            r.extra["worst_den"] = pt.worst_den.str();
            out.push_back(std::move(r));
        }
    };
    emit_series(est.series_ab, a, b);
    emit_series(est.series_ba, b, a);

    Record summary = pair_record("rwo", a, b, params);
    summary.p = est.series_ab.back().p;
    summary.value = est.c_u_ab;
    summary.verdict = "empirical " + std::string(to_string(est.verdict));
    summary.exact = false;
    summary.extra["family"] = family.str();
    summary.extra["slack"] = est.slack.str();
    summary.extra["c_u_ab"] = est.c_u_ab ? ordered_json(est.c_u_ab->str()) : ordered_json("unbounded");
    summary.extra["c_u_ba"] = est.c_u_ba ? ordered_json(est.c_u_ba->str()) : ordered_json("unbounded");
    out.push_back(std::move(summary));
    return out;
}

std::vector<Record> cmd_measure(const ExperimentConfig& c)
{
    const auto params = ProblemParams::parse(need(c.d, "--d"));
    const auto options = options_of(c);
    const auto& m = c.measure;

    if (m == "competitive") {
        const auto spec = spec_of(c.alg, c.a, "--alg");
        const auto res = empirical_competitive(spec, params, need_n(c), options);
        Record r = base_record(m, spec, params);
        r.n = *c.n;
        r.value = res.ratio;
        r.extra["argmax"] = res.argmax.str();
        r.extra["alg_cost"] = res.alg_cost.str();
        r.extra["opt_cost"] = res.opt_cost.str();
        return {r};
    }
    if (m == "maxmax") {
        const auto spec = spec_of(c.alg, c.a, "--alg");
        const auto res = maxmax(spec, params, need_n(c), options);
        Record r = base_record(m, spec, params);
        r.n = *c.n;
        r.value = res.m_value;
        r.extra["max_cost"] = res.max_cost.str();
        r.extra["opt_max_cost"] = res.opt_max_cost.str();
        r.extra["ratio_vs_opt"] = res.ratio_vs_opt.str();
        r.extra["witness"] = res.witness.str();
        return {r};
    }
    if (m == "random-order") {
        const auto spec = spec_of(c.alg, c.a, "--alg");
        const auto seq = parse_sequence(need(c.seq, "--seq"));
        const auto res =
            random_order_ratio(spec, params, seq, parse_random_order_mode(c.mode), options, c.samples);
        Record r = base_record(m, spec, params);
        r.n = static_cast<std::int64_t>(seq.size());
        r.value = res.value;
        r.exact = res.exact;
        if (!res.exact) {
            r.seed = res.seed;
            r.samples = res.arrangements;
        }
        r.extra["mode"] = std::string(to_string(res.mode));
        r.extra["expected_alg"] = res.expected_alg.str();
        r.extra["expected_opt"] = res.expected_opt.str();
        r.extra["arrangements"] = res.arrangements;
        return {r};
    }
    if (m == "bijective") {
        const auto a = spec_of(c.alg, c.a, "--alg-a");
        const auto b = spec_of(c.alg_b, c.b, "--alg-b");
        const auto res = bijective_compare(a, b, params, need_n(c), options);
        Record r = pair_record(m, a, b, params);
        r.n = *c.n;
        r.verdict = label_of(res.verdict, res.strict);
        return {r};
    }
    if (m == "average") {
        const auto a = spec_of(c.alg, c.a, "--alg-a");
        const auto b = spec_of(c.alg_b, c.b, "--alg-b");
        const auto res = average_compare(a, b, params, need_n(c), options);
        Record r = pair_record(m, a, b, params);
        r.n = *c.n;
        if (res.sum_b != Rational(0)) r.value = res.sum_a / res.sum_b;
        r.verdict = std::string(to_string(res.verdict));
        r.extra["sum_a"] = res.sum_a.str();
        r.extra["sum_b"] = res.sum_b.str();
        return {r};
    }
    if (m == "rwo") return cmd_rwo(c, params, options);
    throw std::invalid_argument("unknown measure '" + m + "'");
}

std::vector<Record> cmd_sweep(const ExperimentConfig& c)
{
    if (c.d_list.empty()) throw std::invalid_argument("sweep needs a nonempty --d-list");
    if (!c.a_list.empty() && !c.ab_list.empty()) throw std::invalid_argument("use --a-list or --ab-list, not both");

    // Speed grid points; each entry is (speed of alg, speed of alg_b).
    std::vector<std::pair<std::optional<std::string>, std::optional<std::string>>> speeds;
    for (const auto& a : c.a_list) speeds.emplace_back(a, c.b);
    for (const auto& ab : c.ab_list) {
        const auto colon = ab.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("--ab-list entries look like a:b, got '" + ab + "'");
        speeds.emplace_back(ab.substr(0, colon), ab.substr(colon + 1));
    }
    if (speeds.empty()) speeds.emplace_back(c.a, c.b);

    std::vector<Record> out;
    for (const auto& d_text : c.d_list) {
        const auto params = ProblemParams::parse(d_text);
        for (const auto& [a, b] : speeds) {
            // Grid points with a speed above d are outside the model; skip them.
            if ((a && Rational::parse(*a) > params.d()) || (b && Rational::parse(*b) > params.d())) continue;
            ExperimentConfig point = c;
            point.command = "measure";
            point.d = d_text;
            point.a = a;
            point.b = b;
            if (c.n_block) point.n = *c.n_block * (2 * params.d().floor() + 2);
            auto records = cmd_measure(point);
            out.insert(out.end(), std::make_move_iterator(records.begin()), std::make_move_iterator(records.end()));
        }
    }
    return out;
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        if (comma > start) out.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

}  // namespace

std::vector<Record> execute(const ExperimentConfig& config)
{
    if (config.command == "simulate") return cmd_simulate(config);
    if (config.command == "worst") return cmd_worst(config);
    if (config.command == "measure") return cmd_measure(config);
    if (config.command == "sweep") return cmd_sweep(config);
    throw std::invalid_argument("unknown command '" + config.command + "'");
}

void render(std::ostream& os, const ExperimentConfig& config, const std::vector<Record>& records)
{
    if (config.format == OutputFormat::csv)
        write_csv(os, config, records);
    else
        write_json(os, config, records);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    ExperimentConfig cfg;
    std::string config_path;
    std::string format_text = "json";
    std::string d_list, a_list, ab_list, p_list;

    CLI::App app{"Exact workbench for the two-server problem on three colinear points", "bsl"};
    app.set_version_flag("--version", std::string(tool_version));
    app.add_option("--config", config_path, "Re-run a saved config (JSON config or result document)");
    app.require_subcommand(0, 1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--d", cfg.d, "Distance |BC| as p/q, > 1");
        sub->add_option("--max-seqs", cfg.max_seqs, "Budget on enumerated sequences");
        sub->add_option("--max-perms", cfg.max_perms, "Budget on enumerated permutations");
        sub->add_option("--max-dp-states", cfg.max_dp_states, "Budget on worst-order DP states");
        sub->add_option("--seed", cfg.seed, "RNG seed (BSL_SEED overrides)");
        sub->add_option("--jobs", cfg.jobs, "Worker threads (0: OpenMP default)");
        sub->add_option("--format", format_text, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out, "Write results to this file");
        sub->add_flag("--decimal", cfg.decimal, "Add a display-only decimal value column");
    };
    auto add_measure_flags = [&](CLI::App* sub) {
        sub->add_option("measure", cfg.measure, "Measure")->required()->check(CLI::IsMember(measure_names));
        sub->add_option("--alg,--alg-a", cfg.alg, "Algorithm (A side of a comparison)");
        sub->add_option("--alg-b", cfg.alg_b, "B side of a comparison");
        sub->add_option("--a", cfg.a, "Speed of a-dc / a-ldc (A side)");
        sub->add_option("--b", cfg.b, "Speed of a-dc / a-ldc (B side)");
        sub->add_option("--n", cfg.n, "Input length");
        sub->add_option("--seq", cfg.seq, "Request sequence for random-order");
        sub->add_option("--mode", cfg.mode, "ratio_of_expectations or expectation_of_ratio");
        sub->add_option("--samples", cfg.samples, "Monte Carlo samples when enumeration is over budget");
        sub->add_option("--family", cfg.family, "canonical or pattern:<sequence>");
        sub->add_option("--multiset", cfg.multiset, "rwo on one multiset, e.g. A:2,B:3,C:1");
        sub->add_option("--p-max", cfg.p_max, "Largest family index (series 1,2,4,...,p-max)");
        sub->add_option("--p-list", p_list, "Explicit family indices, comma separated");
        sub->add_option("--slack", cfg.slack, "Additive slack b in c_u estimates (default 3d)");
        add_common(sub);
    };

    auto* simulate = app.add_subcommand("simulate", "Run one algorithm on one sequence");
    simulate->add_option("--alg", cfg.alg, "Algorithm")->required();
    simulate->add_option("--a", cfg.a, "Speed of a-dc / a-ldc");
    simulate->add_option("--seq", cfg.seq, "Sequence, e.g. \"(BA)^8C\"")->required();
    simulate->add_flag("--trace", cfg.trace, "Include the per-request move log");
    add_common(simulate);

    auto* worst = app.add_subcommand("worst", "Worst ordering of a multiset");
    worst->add_option("--alg", cfg.alg, "Algorithm")->required();
    worst->add_option("--a", cfg.a, "Speed of a-dc / a-ldc");
    worst->add_option("--multiset", cfg.multiset, "Counts, e.g. A:2,B:3,C:1")->required();
    worst->add_option("--method", cfg.method, "brute, dp, cruel or auto")
        ->check(CLI::IsMember({"brute", "dp", "cruel", "auto"}));
    add_common(worst);

    auto* measure = app.add_subcommand("measure", "Evaluate one quality measure");
    add_measure_flags(measure);

    auto* sweep = app.add_subcommand("sweep", "Evaluate a measure over a grid of d (and speeds)");
    add_measure_flags(sweep);
    sweep->add_option("--d-list", d_list, "Comma separated d values")->required();
    sweep->add_option("--a-list", a_list, "Comma separated speeds for the A side");
    sweep->add_option("--ab-list", ab_list, "Comma separated a:b speed pairs");
    sweep->add_option("--n-block", cfg.n_block, "Use n = k(2 floor(d) + 2) per grid point");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (!config_path.empty()) {
            if (app.get_subcommands().size() > 0) throw std::invalid_argument("--config cannot be combined with a command");
            std::ifstream in(config_path);
            if (!in) throw std::invalid_argument("cannot read config '" + config_path + "'");
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(in);
            }
            catch (const nlohmann::json::exception& e) {
                throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
            }
            cfg = config_from_json(j);
        }
        else {
            if (app.get_subcommands().empty()) throw std::invalid_argument("a command is required (see --help)");
            cfg.command = app.get_subcommands().front()->get_name();
            cfg.format = parse_output_format(format_text);
            cfg.d_list = split_list(d_list);
            cfg.a_list = split_list(a_list);
            cfg.ab_list = split_list(ab_list);
            for (const auto& p : split_list(p_list)) cfg.p_list.push_back(std::stoll(p));
        }
        if (const char* env = std::getenv("BSL_SEED"); env != nullptr && *env != '\0') {
            try {
                std::size_t used = 0;
                cfg.seed = std::stoull(env, &used);
                if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
            }
            catch (const std::exception&) {
                throw std::invalid_argument(std::string("BSL_SEED is not an unsigned integer: ") + env);
            }
        }

        const auto records = execute(cfg);
        if (cfg.out.empty()) {
            render(out, cfg, records);
        }
        else {
            std::ofstream file(cfg.out);
            if (!file) throw std::runtime_error("cannot write '" + cfg.out + "'");
            render(file, cfg, records);
        }
        return exit_ok;
    }
    catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return exit_budget;
    }
    catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
}

}  // namespace bsl
