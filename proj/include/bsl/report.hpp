#pragma once

// Result records and their JSON / CSV renderings. Every rendered document
// carries the tool version and the full configuration that produced it, so
// a saved result can be re-run with `bsl --config <file>`.

#include "bsl/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace bsl {

inline constexpr std::string_view tool_version = "1.0.0";

enum class OutputFormat { json, csv };

std::string_view to_string(OutputFormat f);
OutputFormat parse_output_format(std::string_view text);

/// Everything a command needs; round-trips through JSON.
struct ExperimentConfig {
    std::string command;  ///< simulate | worst | measure | sweep
    std::string measure;  ///< measure / sweep target
    std::string alg;      ///< algorithm (or the A side of a comparison)
    std::string alg_b;    ///< B side of a comparison
    std::optional<std::string> a;  ///< speed of alg
    std::optional<std::string> b;  ///< speed of alg_b
    std::string d;
    std::vector<std::string> d_list;
    std::vector<std::string> a_list;
    std::vector<std::string> ab_list;  ///< "a:b" pairs
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> n_block;
    std::optional<std::int64_t> p_max;
    std::vector<std::int64_t> p_list;
    std::string seq;
    std::string multiset;
    std::string method = "auto";
    std::string mode = "ratio_of_expectations";
    std::string family = "canonical";
    std::optional<std::string> slack;
    std::uint64_t samples = 20'000;
    std::uint64_t max_seqs = 1'594'323;
    std::uint64_t max_perms = 1'000'000;
    std::uint64_t max_dp_states = 4'000'000;
    std::uint64_t seed = 42;
    int jobs = 0;
    OutputFormat format = OutputFormat::json;
    std::string out;
    bool trace = false;
    bool decimal = false;
};

nlohmann::ordered_json to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);

/// One result row. Optional fields render as empty CSV cells and are
/// omitted from JSON; `extra` carries command-specific detail (JSON only).
struct Record {
    std::string measure;
    std::string alg_a;
    std::string alg_b;
    Rational d;
    std::optional<Rational> a;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> p;
    std::optional<Rational> value;
    std::string verdict;
    bool exact = true;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

inline constexpr std::string_view csv_header = "measure,alg_a,alg_b,d,a,n,p,value,verdict,exact,seed,samples";

nlohmann::ordered_json to_json(const Record& r);

/// Full document: {tool, version, config, budgets, records}.
void write_json(std::ostream& os, const ExperimentConfig& config, const std::vector<Record>& records);

/// '#' comment lines with version, config and budgets, then the fixed header
/// (plus value_decimal when config.decimal) and one row per record.
void write_csv(std::ostream& os, const ExperimentConfig& config, const std::vector<Record>& records);

/// Display-only decimal rendering (10 significant digits).
std::string decimal_string(const Rational& r);

}  // namespace bsl
