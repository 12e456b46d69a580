#include "chancap/cli/presets.hpp"

#include <json.hpp>

namespace chancap::cli {

namespace {

using nlohmann::json;

// Lorentzian presets work in units of the width: lambda = 1, coupling = R.
constexpr double fig2_coupling_ratio = 1.0 / 0.06;

json output(const std::string& prefix) { return {{"dir", "out"}, {"prefix", prefix}, {"svg", true}}; }

std::vector<json> documents(const std::string& name) {
    if (name == "fig1") {
        return {
            {{"channel", "dephasing"},
             {"environment", {{"kind", "ohmic"}, {"s", 3.0}, {"coupling", 0.1}, {"cutoff", 1.0}}},
             {"grid", {{"t_max", 20.0}, {"n", 2001}}},
             {"quantities", {"Q", "gamma_rate", "N_Q"}},
             {"output", output("fig1")}},
            {{"channel", "dephasing"},
             {"environment", {{"kind", "markovian"}, {"rate", 0.1}}},
             {"grid", {{"t_max", 20.0}, {"n", 2001}}},
             {"quantities", {"Q"}},
             {"output", output("fig1_markovian")}},
        };
    }
    if (name == "fig2") {
        const json lorentz = {{"kind", "lorentzian"}, {"R", fig2_coupling_ratio}, {"width", 1.0}, {"detuning", 0.0}};
        return {
            {{"channel", "amplitude_damping"},
             {"environment", lorentz},
             {"grid", {{"t_max", 4.0}, {"n", 8001}}},
             {"quantities", {"Q", "N_Q"}},
             {"sweep", {{"parameter", "detuning"}, {"values", {3.0, 5.0, 6.0, 8.0}}}},
             {"output", output("fig2")}},
            {{"channel", "amplitude_damping"},
             {"environment", {{"kind", "markovian"}, {"rate", fig2_coupling_ratio}}},
             {"grid", {{"t_max", 4.0}, {"n", 8001}}},
             {"quantities", {"Q"}},
             {"output", output("fig2_markovian")}},
            {{"channel", "amplitude_damping"},
             {"environment", lorentz},
             {"grid", {{"t_max", 4.0}, {"n", 4001}}},
             {"quantities", {"N_Q"}},
             {"sweep", {{"parameter", "detuning"}, {"values", {0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0}}}},
             {"output", output("fig2_inset")}},
        };
    }
    if (name == "fig3") {
        return {
            {{"channel", "amplitude_damping"},
             {"environment", {{"kind", "bandgap"}, {"beta", 1.0}, {"detuning", 0.0}}},
             {"grid", {{"t_max", 30.0}, {"n", 3001}}},
             {"quantities", {"Q", "G2"}},
             {"sweep", {{"parameter", "detuning"}, {"values", {-4.0, -1.0, 0.0}}}},
             {"output", output("fig3")}},
        };
    }
    if (name == "suppfig1") {
        return {
            {{"channel", "amplitude_damping"},
             {"environment", {{"kind", "lorentzian"}, {"R", 10.0}, {"width", 1.0}, {"detuning", 0.0}}},
             {"grid", {{"t_max", 2.0}, {"n", 4001}}},
             {"quantities", {"Q", "C_ea", "N_Q", "N_C"}},
             {"sweep", {{"parameter", "R"}, {"values", {10.0, 100.0}}}},
             {"output", output("suppfig1")}},
        };
    }
    if (name == "suppfig2") {
        return {
            {{"channel", "amplitude_damping"},
             {"environment", {{"kind", "lorentzian"}, {"R", 10.0}, {"width", 1.0}, {"detuning", 0.0}}},
             {"grid", {{"t_max", 2.0}, {"n", 4001}}},
             {"quantities", {"lsf_bound", "N_C", "N_Q"}},
             {"sweep", {{"parameter", "R"}, {"values", {10.0, 20.0, 30.0, 40.0, 43.0, 46.0, 50.0, 60.0, 80.0, 100.0}}}},
             {"theta_samples", 5},
             {"output", output("suppfig2")}},
        };
    }
    throw ConfigError("preset", "unknown preset '" + name + "' (expected fig1, fig2, fig3, suppfig1 or suppfig2)");
}

} // namespace

std::vector<std::string> preset_names() { return {"fig1", "fig2", "fig3", "suppfig1", "suppfig2"}; }

std::vector<RunConfig> preset_configs(const std::string& name) {
    std::vector<RunConfig> configs;
    for (const auto& doc : documents(name)) configs.push_back(parse_config(doc));
    return configs;
}

} // namespace chancap::cli
