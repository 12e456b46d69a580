// config.hpp - run configuration for the chancap command-line tool.
//
// Configs are JSON files; see configs/ for complete examples.

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "chancap/capacities.hpp"
#include "chancap/dynamics.hpp"
#include "chancap/time_grid.hpp"

namespace chancap::cli {

// Invalid configuration; `path()` names the offending field, e.g. "environment.s".
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string path, const std::string& message)
        : std::runtime_error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

enum class ChannelKind { dephasing, amplitude_damping };

struct MarkovianEnvironment {
    double rate = 1.0;

    bool operator==(const MarkovianEnvironment&) const = default;
};

using Environment = std::variant<OhmicSpectrum, LorentzianSpectrum, BandGapModel, MarkovianEnvironment>;

enum class Quantity { Q, C_ea, N_Q, N_C, G2, gamma_rate, lsf_bound };

bool is_curve(Quantity q);
std::string to_string(Quantity q);
std::string to_string(ChannelKind k);
std::string environment_kind(const Environment& env);

struct Sweep {
    std::string parameter;
    std::vector<double> values;

    bool operator==(const Sweep&) const = default;
};

struct OutputSpec {
    std::string directory = "out";
    std::string prefix = "run";
    bool svg = false;

    bool operator==(const OutputSpec&) const = default;
};

struct RunConfig {
    ChannelKind channel = ChannelKind::dephasing;
    Environment environment = OhmicSpectrum{};
    TimeGrid grid{1.0, 2};
    std::vector<Quantity> quantities;
    std::optional<Sweep> sweep;
    std::size_t theta_samples = 9;
    OutputSpec output;

    bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const RunConfig& config);

// One concrete environment per curve column, in declared sweep order.
struct SeriesSpec {
    std::string label;
    std::optional<double> sweep_value;
    Environment environment;

    bool operator==(const SeriesSpec&) const = default;
};

struct RunPlan {
    ChannelKind channel;
    TimeGrid grid;
    std::vector<Quantity> quantities;
    std::optional<std::string> sweep_parameter;
    std::vector<SeriesSpec> series;
    std::size_t theta_samples;

    bool operator==(const RunPlan&) const = default;
};

RunPlan make_plan(const RunConfig& config);

ChannelFamily make_family(ChannelKind channel, const Environment& env);

// Shortest round-trip decimal text of a double (locale independent).
std::string format_number(double value);

} // namespace chancap::cli
