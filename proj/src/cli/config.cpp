#include "chancap/cli/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <type_traits>

namespace chancap::cli {

using nlohmann::json;

namespace {

template <typename... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <typename... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const json& require(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw ConfigError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ConfigError(path.empty() ? key : path + "." + key, "missing required field");
    return *it;
}

double number(const json& obj, const std::string& key, const std::string& path) {
    const json& v = require(obj, key, path);
    const std::string where = path.empty() ? key : path + "." + key;
    if (!v.is_number()) throw ConfigError(where, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError(where, "expected a finite number");
    return d;
}

double positive(const json& obj, const std::string& key, const std::string& path) {
    const double d = number(obj, key, path);
    if (!(d > 0.0)) throw ConfigError(path + "." + key, "must be > 0");
    return d;
}

double optional_number(const json& obj, const std::string& key, const std::string& path, double fallback) {
    return obj.contains(key) ? number(obj, key, path) : fallback;
}

constexpr std::array<std::pair<Quantity, const char*>, 7> quantity_names{{
    {Quantity::Q, "Q"},
    {Quantity::C_ea, "C_ea"},
    {Quantity::N_Q, "N_Q"},
    {Quantity::N_C, "N_C"},
    {Quantity::G2, "G2"},
    {Quantity::gamma_rate, "gamma_rate"},
    {Quantity::lsf_bound, "lsf_bound"},
}};

Environment parse_environment(const json& env) {
    const std::string path = "environment";
    const json& kind_node = require(env, "kind", path);
    if (!kind_node.is_string()) throw ConfigError("environment.kind", "expected a string");
    const auto kind = kind_node.get<std::string>();
    if (kind == "ohmic") {
        OhmicSpectrum spec{positive(env, "s", path), positive(env, "coupling", path),
                           env.contains("cutoff") ? positive(env, "cutoff", path) : 1.0};
        return spec;
    }
    if (kind == "lorentzian") {
        LorentzianSpectrum spec;
        spec.width = env.contains("width") ? positive(env, "width", path) : 1.0;
        spec.detuning = optional_number(env, "detuning", path, 0.0);
        if (env.contains("R") && env.contains("coupling")) {
            throw ConfigError("environment.R", "give either R or coupling, not both");
        }
        spec.coupling = env.contains("R") ? positive(env, "R", path) * spec.width : positive(env, "coupling", path);
        return spec;
    }
    if (kind == "bandgap") {
        BandGapModel model;
        model.beta = env.contains("beta") ? positive(env, "beta", path) : 1.0;
        model.edge_detuning = number(env, "detuning", path);
        return model;
    }
    if (kind == "markovian") return MarkovianEnvironment{positive(env, "rate", path)};
    throw ConfigError("environment.kind", "unknown environment '" + kind +
                                              "' (expected ohmic, lorentzian, bandgap or markovian)");
}

json environment_json(const Environment& env) {
    return std::visit(overloaded{
                          [](const OhmicSpectrum& s) {
                              return json{{"kind", "ohmic"}, {"s", s.ohmicity}, {"coupling", s.coupling},
                                          {"cutoff", s.cutoff}};
                          },
                          [](const LorentzianSpectrum& s) {
                              return json{{"kind", "lorentzian"}, {"coupling", s.coupling}, {"width", s.width},
                                          {"detuning", s.detuning}};
                          },
                          [](const BandGapModel& m) {
                              return json{{"kind", "bandgap"}, {"beta", m.beta}, {"detuning", m.edge_detuning}};
                          },
                          [](const MarkovianEnvironment& m) { return json{{"kind", "markovian"}, {"rate", m.rate}}; },
                      },
                      env);
}

void check_compatible(ChannelKind channel, const Environment& env) {
    const bool ok = std::visit(overloaded{
                                   [&](const OhmicSpectrum&) { return channel == ChannelKind::dephasing; },
                                   [&](const LorentzianSpectrum&) { return channel == ChannelKind::amplitude_damping; },
                                   [&](const BandGapModel&) { return channel == ChannelKind::amplitude_damping; },
                                   [](const MarkovianEnvironment&) { return true; },
                               },
                               env);
    if (!ok) {
        throw ConfigError("environment.kind", "environment '" + environment_kind(env) +
                                                  "' is incompatible with channel '" + to_string(channel) + "'");
    }
}

// Returns a copy of `env` with the swept parameter replaced; throws for unknown names.
Environment with_parameter(const Environment& env, const std::string& name, double value) {
    auto unknown = [&]() -> ConfigError {
        return ConfigError("sweep.parameter", "'" + name + "' is not a parameter of environment '" +
                                                  environment_kind(env) + "'");
    };
    return std::visit(overloaded{
                          [&](OhmicSpectrum s) -> Environment {
                              if (name == "s") s.ohmicity = value;
                              else if (name == "coupling") s.coupling = value;
                              else if (name == "cutoff") s.cutoff = value;
                              else throw unknown();
                              return s;
                          },
                          [&](LorentzianSpectrum s) -> Environment {
                              if (name == "coupling") s.coupling = value;
                              else if (name == "R") s.coupling = value * s.width;
                              else if (name == "width") s.width = value;
                              else if (name == "detuning") s.detuning = value;
                              else throw unknown();
                              return s;
                          },
                          [&](BandGapModel m) -> Environment {
                              if (name == "beta") m.beta = value;
                              else if (name == "detuning") m.edge_detuning = value;
                              else throw unknown();
                              return m;
                          },
                          [&](MarkovianEnvironment m) -> Environment {
                              if (name == "rate") m.rate = value;
                              else throw unknown();
                              return m;
                          },
                      },
                      env);
}

void validate_environment(const Environment& env, const std::string& path) {
    try {
        std::visit(overloaded{
                       [](const MarkovianEnvironment& m) {
                           if (!(m.rate > 0.0)) throw DomainError("Markovian rate must be > 0");
                       },
                       [](const auto& spec) { spec.validate(); },
                   },
                   env);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(path, e.what());
    } catch (const std::domain_error& e) {
        throw ConfigError(path, e.what());
    }
}

} // namespace

bool is_curve(Quantity q) {
    return q == Quantity::Q || q == Quantity::C_ea || q == Quantity::G2 || q == Quantity::gamma_rate;
}

std::string to_string(Quantity q) {
    for (const auto& [value, name] : quantity_names) {
        if (value == q) return name;
    }
    return "?";
}

std::string to_string(ChannelKind k) { return k == ChannelKind::dephasing ? "dephasing" : "amplitude_damping"; }

std::string environment_kind(const Environment& env) {
    static constexpr std::array<const char*, 4> names{"ohmic", "lorentzian", "bandgap", "markovian"};
    return names[env.index()];
}

std::string format_number(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), end);
}

RunConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("", "config root must be an object");
    RunConfig cfg;

    const json& channel = require(doc, "channel", "");
    if (!channel.is_string()) throw ConfigError("channel", "expected a string");
    const auto channel_name = channel.get<std::string>();
    if (channel_name == "dephasing") cfg.channel = ChannelKind::dephasing;
    else if (channel_name == "amplitude_damping") cfg.channel = ChannelKind::amplitude_damping;
    else throw ConfigError("channel", "unknown channel '" + channel_name + "'");

    cfg.environment = parse_environment(require(doc, "environment", ""));
    check_compatible(cfg.channel, cfg.environment);
    validate_environment(cfg.environment, "environment");

    const json& grid = require(doc, "grid", "");
    const double t_max = positive(grid, "t_max", "grid");
    const json& n = require(grid, "n", "grid");
    if (!n.is_number_integer() || n.get<long long>() < 2) throw ConfigError("grid.n", "expected an integer >= 2");
    cfg.grid = TimeGrid(t_max, n.get<std::size_t>());

    const json& quantities = require(doc, "quantities", "");
    if (!quantities.is_array()) throw ConfigError("quantities", "expected an array");
    if (quantities.empty()) throw ConfigError("quantities", "nothing to compute: list at least one quantity");
    for (std::size_t i = 0; i < quantities.size(); ++i) {
        const std::string where = "quantities[" + std::to_string(i) + "]";
        if (!quantities[i].is_string()) throw ConfigError(where, "expected a string");
        const auto name = quantities[i].get<std::string>();
        bool found = false;
        for (const auto& [value, qname] : quantity_names) {
            if (name == qname) {
                cfg.quantities.push_back(value);
                found = true;
            }
        }
        if (!found) throw ConfigError(where, "unknown quantity '" + name + "'");
        if (found && cfg.quantities.back() == Quantity::G2 && cfg.channel == ChannelKind::dephasing) {
            throw ConfigError(where, "G2 is only defined for the amplitude_damping channel");
        }
    }

    if (doc.contains("sweep")) {
        const json& sweep = doc["sweep"];
        const json& param = require(sweep, "parameter", "sweep");
        if (!param.is_string()) throw ConfigError("sweep.parameter", "expected a string");
        const json& values = require(sweep, "values", "sweep");
        if (!values.is_array() || values.empty()) throw ConfigError("sweep.values", "expected a non-empty array");
        Sweep s{param.get<std::string>(), {}};
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!values[i].is_number()) throw ConfigError("sweep.values[" + std::to_string(i) + "]", "expected a number");
            s.values.push_back(values[i].get<double>());
            validate_environment(with_parameter(cfg.environment, s.parameter, s.values.back()),
                                 "sweep.values[" + std::to_string(i) + "]");
        }
        cfg.sweep = std::move(s);
    }

    if (doc.contains("theta_samples")) {
        const json& t = doc["theta_samples"];
        if (!t.is_number_integer() || t.get<long long>() < 1) {
            throw ConfigError("theta_samples", "expected an integer >= 1");
        }
        cfg.theta_samples = t.get<std::size_t>();
    }

    if (doc.contains("output")) {
        const json& out = doc["output"];
        if (!out.is_object()) throw ConfigError("output", "expected an object");
        if (out.contains("dir")) {
            if (!out["dir"].is_string()) throw ConfigError("output.dir", "expected a string");
            cfg.output.directory = out["dir"].get<std::string>();
        }
        if (out.contains("prefix")) {
            if (!out["prefix"].is_string()) throw ConfigError("output.prefix", "expected a string");
            cfg.output.prefix = out["prefix"].get<std::string>();
        }
        if (out.contains("svg")) {
            if (!out["svg"].is_boolean()) throw ConfigError("output.svg", "expected true or false");
            cfg.output.svg = out["svg"].get<bool>();
        }
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open config file '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
    return parse_config(doc);
}

json to_json(const RunConfig& cfg) {
    json doc;
    doc["channel"] = to_string(cfg.channel);
    doc["environment"] = environment_json(cfg.environment);
    doc["grid"] = {{"t_max", cfg.grid.t_max()}, {"n", cfg.grid.size()}};
    json quantities = json::array();
    for (Quantity q : cfg.quantities) quantities.push_back(to_string(q));
    doc["quantities"] = quantities;
    if (cfg.sweep) doc["sweep"] = {{"parameter", cfg.sweep->parameter}, {"values", cfg.sweep->values}};
    doc["theta_samples"] = cfg.theta_samples;
    doc["output"] = {{"dir", cfg.output.directory}, {"prefix", cfg.output.prefix}, {"svg", cfg.output.svg}};
    return doc;
}

RunPlan make_plan(const RunConfig& cfg) {
    RunPlan plan{cfg.channel, cfg.grid, cfg.quantities, std::nullopt, {}, cfg.theta_samples};
    if (!cfg.sweep) {
        plan.series.push_back({environment_kind(cfg.environment), std::nullopt, cfg.environment});
        return plan;
    }
    plan.sweep_parameter = cfg.sweep->parameter;
    for (double v : cfg.sweep->values) {
        plan.series.push_back(
            {cfg.sweep->parameter + "=" + format_number(v), v, with_parameter(cfg.environment, cfg.sweep->parameter, v)});
    }
    return plan;
}

ChannelFamily make_family(ChannelKind channel, const Environment& env) {
    return std::visit(overloaded{
                          [](const OhmicSpectrum& s) -> ChannelFamily { return ohmic_dynamics(s); },
                          [](const LorentzianSpectrum& s) -> ChannelFamily { return lorentzian_dynamics(s); },
                          [](const BandGapModel& m) -> ChannelFamily { return bandgap_dynamics(m); },
                          [channel](const MarkovianEnvironment& m) -> ChannelFamily {
                              if (channel == ChannelKind::dephasing) return markovian_dephasing(m.rate);
                              return markovian_damping(m.rate);
                          },
                      },
                      env);
}

} // namespace chancap::cli
