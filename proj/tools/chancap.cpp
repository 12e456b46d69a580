// chancap - capacity curves and non-Markovianity measures from the command line.
//
//   chancap run <config.json> [--out DIR] [--svg] [--grid-scale F]
//   chancap figure <preset>   [--out DIR] [--svg] [--grid-scale F]
//   chancap validate <config.json>
//
// CHANCAP_OUT_DIR overrides the configured output directory; --out overrides both.
// Exit codes: 0 success, 2 configuration error, 3 numerical error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chancap/cli/config.hpp"
#include "chancap/cli/presets.hpp"
#include "chancap/cli/runner.hpp"
#include "chancap/errors.hpp"

namespace {

using namespace chancap::cli;

constexpr int exit_config = 2;
constexpr int exit_numerical = 3;

struct CommonFlags {
    std::string out;
    bool svg = false;
    double grid_scale = 1.0;
};

std::filesystem::path output_directory(const RunConfig& config, const CommonFlags& flags) {
    if (!flags.out.empty()) return flags.out;
    if (const char* env = std::getenv("CHANCAP_OUT_DIR"); env && *env) return env;
    return config.output.directory;
}

void run_one(RunConfig config, const CommonFlags& flags) {
    if (flags.grid_scale != 1.0) config = scale_grid(std::move(config), flags.grid_scale);
    const RunPlan plan = make_plan(config);
    const auto start = std::chrono::steady_clock::now();
    const RunResult result = execute(plan);
    const EmitOptions options{output_directory(config, flags), config.output.prefix, config.output.svg || flags.svg};
    const auto files = emit(result, plan, options);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& m : result.measures) {
        std::cout << config.output.prefix << "  " << m.series << "  " << to_string(m.quantity) << " = "
                  << format_cell(m.report.value) << (m.report.converged ? "" : "  (not converged)") << '\n';
    }
    for (const auto& f : files) std::cout << "wrote " << f.string() << '\n';
    std::cout << config.output.prefix << ": " << seconds << " s\n";
}

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--out", flags.out, "Output directory");
    cmd->add_flag("--svg", flags.svg, "Also write SVG plots");
    cmd->add_option("--grid-scale", flags.grid_scale, "Multiply the number of grid intervals")
        ->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum channel capacities and non-Markovianity measures"};
    app.require_subcommand(1);

    CommonFlags run_flags, figure_flags;
    std::string config_path, preset, validate_path;

    auto* run = app.add_subcommand("run", "Run a JSON configuration");
    run->add_option("config", config_path, "Config file")->required();
    add_common(run, run_flags);

    auto* figure = app.add_subcommand("figure", "Reproduce a figure preset");
    figure->add_option("preset", preset, "fig1 | fig2 | fig3 | suppfig1 | suppfig2")->required();
    add_common(figure, figure_flags);

    auto* validate = app.add_subcommand("validate", "Check a configuration without running it");
    validate->add_option("config", validate_path, "Config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    try {
        if (*run) {
            run_one(load_config(config_path), run_flags);
        } else if (*figure) {
            for (auto& config : preset_configs(preset)) run_one(std::move(config), figure_flags);
        } else if (*validate) {
            const RunPlan plan = make_plan(load_config(validate_path));
            std::cout << "ok: " << to_string(plan.channel) << ", " << plan.series.size() << " series, "
                      << plan.grid.size() << " nodes up to t = " << format_cell(plan.grid.t_max()) << '\n';
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const chancap::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const std::domain_error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
