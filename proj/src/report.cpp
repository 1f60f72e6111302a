#include "bsl/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace bsl {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(OutputFormat f) { return f == OutputFormat::json ? "json" : "csv"; }

OutputFormat parse_output_format(std::string_view text)
{
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown output format '" + std::string(text) + "' (json or csv)");
}

ordered_json to_json(const ExperimentConfig& c)
{
    ordered_json j;
    j["command"] = c.command;
    j["measure"] = c.measure;
    j["alg"] = c.alg;
    j["alg_b"] = c.alg_b;
    j["a"] = c.a ? json(*c.a) : json(nullptr);
    j["b"] = c.b ? json(*c.b) : json(nullptr);
    j["d"] = c.d;
    j["d_list"] = c.d_list;
    j["a_list"] = c.a_list;
    j["ab_list"] = c.ab_list;
    j["n"] = c.n ? json(*c.n) : json(nullptr);
    j["n_block"] = c.n_block ? json(*c.n_block) : json(nullptr);
    j["p_max"] = c.p_max ? json(*c.p_max) : json(nullptr);
    j["p_list"] = c.p_list;
    j["seq"] = c.seq;
    j["multiset"] = c.multiset;
    j["method"] = c.method;
    j["mode"] = c.mode;
    j["family"] = c.family;
    j["slack"] = c.slack ? json(*c.slack) : json(nullptr);
    j["samples"] = c.samples;
    j["max_seqs"] = c.max_seqs;
    j["max_perms"] = c.max_perms;
    j["max_dp_states"] = c.max_dp_states;
    j["seed"] = c.seed;
    j["jobs"] = c.jobs;
    j["format"] = to_string(c.format);
    j["out"] = c.out;
    j["trace"] = c.trace;
    j["decimal"] = c.decimal;
    return j;
}

namespace {

template <class T>
void read(const json& j, const char* key, T& field)
{
    if (auto it = j.find(key); it != j.end() && !it->is_null()) field = it->get<T>();
}

template <class T>
void read(const json& j, const char* key, std::optional<T>& field)
{
    if (auto it = j.find(key); it != j.end() && !it->is_null()) field = it->get<T>();
}

}  // namespace

ExperimentConfig config_from_json(const json& j)
{
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    // Result documents wrap the config; accept either form.
    const json& c = j.contains("config") && j["config"].is_object() ? j["config"] : j;
    ExperimentConfig out;
    try {
        read(c, "command", out.command);
        read(c, "measure", out.measure);
        read(c, "alg", out.alg);
        read(c, "alg_b", out.alg_b);
        read(c, "a", out.a);
        read(c, "b", out.b);
        read(c, "d", out.d);
        read(c, "d_list", out.d_list);
        read(c, "a_list", out.a_list);
        read(c, "ab_list", out.ab_list);
        read(c, "n", out.n);
        read(c, "n_block", out.n_block);
        read(c, "p_max", out.p_max);
        read(c, "p_list", out.p_list);
        read(c, "seq", out.seq);
        read(c, "multiset", out.multiset);
        read(c, "method", out.method);
        read(c, "mode", out.mode);
        read(c, "family", out.family);
        read(c, "slack", out.slack);
        read(c, "samples", out.samples);
        read(c, "max_seqs", out.max_seqs);
        read(c, "max_perms", out.max_perms);
        read(c, "max_dp_states", out.max_dp_states);
        read(c, "seed", out.seed);
        read(c, "jobs", out.jobs);
        std::string format = "json";
        read(c, "format", format);
        out.format = parse_output_format(format);
        read(c, "out", out.out);
        read(c, "trace", out.trace);
        read(c, "decimal", out.decimal);
    }
    catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad config: ") + e.what());
    }
    return out;
}

ordered_json to_json(const Record& r)
{
    ordered_json j;
    j["measure"] = r.measure;
    j["algs"] = r.alg_b.empty() ? ordered_json::array({r.alg_a}) : ordered_json::array({r.alg_a, r.alg_b});
    j["d"] = r.d.str();
    if (r.a) j["a"] = r.a->str();
    if (r.n) j["n"] = *r.n;
    if (r.p) j["p"] = *r.p;
    j["value"] = r.value ? ordered_json(r.value->str()) : ordered_json(nullptr);
    j["verdict"] = r.verdict;
    j["exact"] = r.exact;
    if (r.seed) j["seed"] = *r.seed;
    if (r.samples) j["samples"] = *r.samples;
    for (const auto& [k, v] : r.extra.items()) j[k] = v;
    return j;
}

std::string decimal_string(const Rational& r)
{
    std::ostringstream os;
    os << std::setprecision(10) << r.to_double();
    return os.str();
}

namespace {

ordered_json budgets_of(const ExperimentConfig& c)
{
    ordered_json b;
    b["max_seqs"] = c.max_seqs;
    b["max_perms"] = c.max_perms;
    b["max_dp_states"] = c.max_dp_states;
    b["samples"] = c.samples;
    b["seed"] = c.seed;
    return b;
}

// Fields never contain newlines; quote only those with a comma or quote.
std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

template <class T>
std::string opt_cell(const std::optional<T>& v)
{
    if (!v) return "";
    if constexpr (std::is_same_v<T, Rational>)
        return v->str();
    else
        return std::to_string(*v);
}

}  // namespace

void write_json(std::ostream& os, const ExperimentConfig& config, const std::vector<Record>& records)
{
    ordered_json doc;
    doc["tool"] = "bsl";
    doc["version"] = tool_version;
    doc["config"] = to_json(config);
    doc["budgets"] = budgets_of(config);
    doc["records"] = ordered_json::array();
    for (const auto& r : records) {
        auto j = to_json(r);
        if (config.decimal && r.value) j["value_decimal"] = decimal_string(*r.value);
        doc["records"].push_back(std::move(j));
    }
    os << doc.dump(2) << '\n';
}

void write_csv(std::ostream& os, const ExperimentConfig& config, const std::vector<Record>& records)
{
    os << "# bsl " << tool_version << '\n';
    os << "# config " << to_json(config).dump() << '\n';
    os << "# budgets " << budgets_of(config).dump() << '\n';
    os << csv_header << (config.decimal ? ",value_decimal" : "") << '\n';
    for (const auto& r : records) {
        os << csv_cell(r.measure) << ',' << csv_cell(r.alg_a) << ',' << csv_cell(r.alg_b) << ',' << r.d.str() << ','
           << opt_cell(r.a) << ',' << opt_cell(r.n) << ',' << opt_cell(r.p) << ',' << opt_cell(r.value) << ','
           << csv_cell(r.verdict) << ',' << (r.exact ? "true" : "false") << ',' << opt_cell(r.seed) << ','
           << opt_cell(r.samples);
        if (config.decimal) os << ',' << (r.value ? decimal_string(*r.value) : "");
        os << '\n';
    }
}

}  // namespace bsl
