#include "chancap/cli/runner.hpp"

#include <cmath>
#include <stdexcept>
#include <variant>

#include "chancap/cli/svg.hpp"

namespace chancap::cli {

namespace {

std::vector<Cell> to_cells(const std::vector<double>& values) { return {values.begin(), values.end()}; }

std::vector<Cell> curve_column(Quantity q, const ChannelFamily& family, const std::vector<ChannelSnapshot>& snaps,
                               const TimeGrid& grid) {
    switch (q) {
    case Quantity::Q: return to_cells(capacity_curve(snaps, grid, Capacity::quantum).values);
    case Quantity::C_ea: return to_cells(capacity_curve(snaps, grid, Capacity::entanglement_assisted).values);
    case Quantity::G2: {
        std::vector<Cell> out;
        for (const auto& s : snaps) out.emplace_back(std::get<ADSnapshot>(s).transmissivity());
        return out;
    }
    case Quantity::gamma_rate: {
        if (const auto* deph = std::get_if<DephasingDynamics>(&family)) {
            std::vector<Cell> out;
            for (double t : grid.times()) out.emplace_back(deph->rate(t));
            return out;
        }
        std::vector<Complex> g;
        g.reserve(snaps.size());
        for (const auto& s : snaps) g.push_back(std::get<ADSnapshot>(s).amplitude());
        return rates_from_amplitude(g, grid.step()).decay_rate;
    }
    default: throw std::logic_error("not a curve quantity");
    }
}

MeasureReport measure(Quantity q, const ChannelFamily& family, const TimeGrid& grid, std::size_t theta_samples) {
    switch (q) {
    case Quantity::N_Q: return measure_nq(family, grid);
    case Quantity::N_C: return measure_nc(family, grid);
    case Quantity::lsf_bound: return lsf_lower_bound(family, grid, theta_samples);
    default: throw std::logic_error("not a measure quantity");
    }
}

std::string intervals_text(const std::vector<Interval>& intervals) {
    std::string out;
    for (const auto& iv : intervals) {
        if (!out.empty()) out += ';';
        out += format_cell(iv.start) + ":" + format_cell(iv.end);
    }
    return out;
}

std::string y_label(Quantity q) {
    switch (q) {
    case Quantity::Q: return "Q (bits)";
    case Quantity::C_ea: return "C_ea (bits)";
    case Quantity::G2: return "|G|^2";
    case Quantity::gamma_rate: return "decay rate";
    default: return to_string(q) + " (bits)";
    }
}

} // namespace

std::string time_axis_label(const Environment& env) {
    switch (env.index()) {
    case 0: return "omega_c t";
    case 1: return "lambda t";
    case 2: return "beta t";
    default: return "t";
    }
}

RunResult execute(const RunPlan& plan) {
    RunResult result;
    std::vector<Quantity> curve_quantities;
    for (Quantity q : plan.quantities) {
        if (is_curve(q)) {
            curve_quantities.push_back(q);
            result.curves.push_back({q, plan.grid, {}, {}});
        }
    }
    // Series run sequentially; emission order equals declared sweep order.
    for (const auto& series : plan.series) {
        const ChannelFamily family = make_family(plan.channel, series.environment);
        if (!curve_quantities.empty()) {
            const auto snaps = snapshots(family, plan.grid);
            for (std::size_t i = 0; i < curve_quantities.size(); ++i) {
                result.curves[i].labels.push_back(series.label);
                result.curves[i].columns.push_back(curve_column(curve_quantities[i], family, snaps, plan.grid));
            }
        }
        for (Quantity q : plan.quantities) {
            if (is_curve(q)) continue;
            result.measures.push_back({q, series.label, series.sweep_value,
                                       measure(q, family, plan.grid, plan.theta_samples)});
        }
    }
    return result;
}

std::vector<std::filesystem::path> emit(const RunResult& result, const RunPlan& plan, const EmitOptions& options) {
    std::filesystem::create_directories(options.directory);
    std::vector<std::filesystem::path> written;
    const std::string x_label = plan.series.empty() ? "t" : time_axis_label(plan.series.front().environment);
    auto file = [&](const std::string& stem, const char* ext) {
        return options.directory / (options.prefix + "_" + stem + ext);
    };

    for (const auto& curve : result.curves) {
        Table table;
        table.headers.push_back("t");
        table.numeric.push_back(to_cells(curve.grid.times()));
        for (std::size_t k = 0; k < curve.labels.size(); ++k) {
            table.headers.push_back(curve.labels[k]);
            table.numeric.push_back(curve.columns[k]);
        }
        const auto path = file(to_string(curve.quantity), ".csv");
        write_csv(path, table);
        written.push_back(path);
        if (options.svg) {
            Plot plot{options.prefix + ": " + to_string(curve.quantity), x_label, y_label(curve.quantity), {}};
            for (std::size_t k = 0; k < curve.labels.size(); ++k) {
                plot.series.push_back({curve.labels[k], curve.grid.times(), curve.columns[k]});
            }
            const auto svg_path = file(to_string(curve.quantity), ".svg");
            write_svg(svg_path, plot);
            written.push_back(svg_path);
        }
    }

    if (result.measures.empty()) return written;

    for (Quantity q : plan.quantities) {
        if (is_curve(q)) continue;
        Table table;
        table.headers = {"series"};
        table.text.resize(1);
        if (plan.sweep_parameter) {
            table.headers.push_back(*plan.sweep_parameter);
            table.numeric.emplace_back();
        }
        table.headers.push_back(to_string(q));
        table.numeric.emplace_back();
        PlotSeries sweep_series{to_string(q), {}, {}};
        for (const auto& m : result.measures) {
            if (m.quantity != q) continue;
            table.text[0].push_back(m.series);
            if (plan.sweep_parameter) table.numeric.front().push_back(m.sweep_value);
            table.numeric.back().push_back(m.report.value);
            if (m.sweep_value) {
                sweep_series.x.push_back(*m.sweep_value);
                sweep_series.y.push_back(m.report.value);
            }
        }
        const auto path = file(to_string(q), ".csv");
        write_csv(path, table);
        written.push_back(path);
        if (options.svg && plan.sweep_parameter && sweep_series.x.size() > 1) {
            const auto svg_path = file(to_string(q), ".svg");
            write_svg(svg_path, Plot{options.prefix + ": " + to_string(q), *plan.sweep_parameter, y_label(q),
                                     {sweep_series}});
            written.push_back(svg_path);
        }
    }

    Table summary;
    summary.headers = {"series", "quantity", "converged", "intervals", "value", "t_max", "n"};
    summary.text.resize(4);
    summary.numeric.resize(3);
    for (const auto& m : result.measures) {
        summary.text[0].push_back(m.series);
        summary.text[1].push_back(to_string(m.quantity));
        summary.text[2].push_back(m.report.converged ? "true" : "false");
        summary.text[3].push_back(intervals_text(m.report.intervals));
        summary.numeric[0].push_back(m.report.value);
        summary.numeric[1].push_back(m.report.grid.t_max());
        summary.numeric[2].push_back(static_cast<double>(m.report.grid.size()));
    }
    const auto path = file("summary", ".csv");
    write_csv(path, summary);
    written.push_back(path);
    return written;
}

RunConfig scale_grid(RunConfig config, double factor) {
    if (!(factor > 0.0) || !std::isfinite(factor)) throw ConfigError("--grid-scale", "factor must be > 0");
    const double intervals = std::round(static_cast<double>(config.grid.size() - 1) * factor);
    if (intervals < 1.0) throw ConfigError("--grid-scale", "scaled grid has fewer than 2 nodes");
    config.grid = TimeGrid(config.grid.t_max(), static_cast<std::size_t>(intervals) + 1);
    return config;
}

} // namespace chancap::cli
