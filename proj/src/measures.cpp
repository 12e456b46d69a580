#include "chancap/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <type_traits>
#include <utility>

namespace chancap {

namespace {

bool close_relative(double a, double b, double tol) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale < increment_tolerance || std::abs(a - b) <= tol * scale;
}

// Maximal runs of consecutive true flags over nodes, as [t_first, t_last].
std::vector<Interval> node_runs(const std::vector<bool>& flags, const TimeGrid& grid) {
    std::vector<Interval> runs;
    std::optional<std::size_t> start;
    for (std::size_t k = 0; k <= flags.size(); ++k) {
        const bool on = k < flags.size() && flags[k];
        if (on && !start) start = k;
        if (!on && start) {
            runs.push_back({grid[*start], grid[k - 1]});
            start.reset();
        }
    }
    return runs;
}

} // namespace

MeasureReport positive_variation(const SampledCurve& curve) {
    const auto& x = curve.values;
    if (x.size() < 2 || x.size() != curve.grid.size()) {
        throw DomainError("positive_variation: curve needs at least 2 samples matching its grid");
    }
    MeasureReport report{0.0, {}, curve.grid, true};
    std::optional<std::size_t> run_start;
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        const double inc = x[k + 1] - x[k];
        const bool rising = inc >= increment_tolerance;
        if (rising) {
            report.value += inc;
            if (!run_start) run_start = k;
        } else if (run_start) {
            report.intervals.push_back({curve.grid[*run_start], curve.grid[k]});
            run_start.reset();
        }
    }
    if (run_start) report.intervals.push_back({curve.grid[*run_start], curve.grid[x.size() - 1]});
    return report;
}

double tail_variation(const SampledCurve& curve, double fraction) {
    const std::size_t n = curve.values.size();
    const auto first = static_cast<std::size_t>(std::floor((1.0 - fraction) * static_cast<double>(n - 1)));
    double tail = 0.0;
    for (std::size_t k = first; k + 1 < n; ++k) {
        const double inc = curve.values[k + 1] - curve.values[k];
        if (inc >= increment_tolerance) tail += inc;
    }
    return tail;
}

MeasureReport checked_measure(const std::function<std::pair<MeasureReport, SampledCurve>(const TimeGrid&)>& evaluate,
                              const TimeGrid& grid) {
    auto [report, curve] = evaluate(grid);
    bool horizon_ok = tail_variation(curve) < horizon_tolerance;
    if (!horizon_ok) {
        auto extended = evaluate(grid.extended(2));
        report = std::move(extended.first);
        horizon_ok = tail_variation(extended.second) < horizon_tolerance;
    }
    const double refined = evaluate(report.grid.refined()).first.value;
    report.converged = horizon_ok && close_relative(report.value, refined, refinement_tolerance);
    return report;
}

namespace {

MeasureReport capacity_measure(const ChannelFamily& family, const TimeGrid& grid, Capacity which) {
    return checked_measure(
        [&](const TimeGrid& g) {
            SampledCurve curve = capacity_curve(family, g, which);
            MeasureReport r = positive_variation(curve);
            return std::make_pair(std::move(r), std::move(curve));
        },
        grid);
}

} // namespace

MeasureReport measure_nq(const ChannelFamily& family, const TimeGrid& grid) {
    return capacity_measure(family, grid, Capacity::quantum);
}

MeasureReport measure_nc(const ChannelFamily& family, const TimeGrid& grid) {
    return capacity_measure(family, grid, Capacity::entanglement_assisted);
}

double additivity_nq_dephasing(const DephasingDynamics& dynamics, const TimeGrid& grid, std::size_t copies) {
    if (copies < 1) throw DomainError("additivity_nq_dephasing: need at least one copy");
    return static_cast<double>(copies) * measure_nq(dynamics, grid).value;
}

DivisibilityWitness divisibility_witness(const ChannelFamily& family, const TimeGrid& grid) {
    std::vector<std::optional<double>> rate(grid.size());
    std::visit(
        [&](const auto& dyn) {
            using T = std::decay_t<decltype(dyn)>;
            if constexpr (std::is_same_v<T, DephasingDynamics>) {
                for (std::size_t k = 0; k < grid.size(); ++k) rate[k] = dyn.rate(grid[k]);
            } else {
                const auto g = dyn.sample(grid);
                rate = rates_from_amplitude(g, grid.step()).decay_rate;
            }
        },
        family);

    std::vector<bool> negative(grid.size()), gap(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        gap[k] = !rate[k].has_value();
        negative[k] = rate[k].has_value() && *rate[k] < -negative_rate_tolerance;
    }
    return {node_runs(negative, grid), node_runs(gap, grid)};
}

double bipartite_mutual_information(const DensityMatrix4& rho) {
    return von_neumann_entropy(partial_trace(rho, Subsystem::first)) +
           von_neumann_entropy(partial_trace(rho, Subsystem::second)) - von_neumann_entropy(rho);
}

SampledCurve schmidt_mutual_information_curve(std::span<const ChannelSnapshot> snaps, const TimeGrid& grid,
                                              double theta) {
    if (snaps.size() != grid.size()) throw DomainError("schmidt_mutual_information_curve: snapshot/grid mismatch");
    ComplexVector<double, 4> psi = ComplexVector<double, 4>::Zero();
    psi(0) = std::cos(theta);
    psi(3) = std::sin(theta);
    const DensityMatrix4 initial = DensityMatrix4::pure(psi);
    SampledCurve curve{grid, std::vector<double>(grid.size())};
    for (std::size_t k = 0; k < snaps.size(); ++k) {
        const auto evolved = apply_kraus(local_kraus(kraus(snaps[k]), Subsystem::second), initial);
        curve.values[k] = bipartite_mutual_information(evolved);
    }
    return curve;
}

std::vector<double> theta_sweep(std::size_t theta_samples) {
    if (theta_samples < 1) throw DomainError("lsf_lower_bound: need at least one theta sample");
    if (theta_samples == 1) return {0.25 * std::numbers::pi};
    std::vector<double> thetas(theta_samples);
    for (std::size_t i = 0; i < theta_samples; ++i) {
        thetas[i] = 0.5 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(theta_samples - 1);
    }
    return thetas;
}

MeasureReport lsf_lower_bound(const ChannelFamily& family, const TimeGrid& grid, std::size_t theta_samples) {
    const auto thetas = theta_sweep(theta_samples);
    return checked_measure(
        [&](const TimeGrid& g) {
            const auto snaps = snapshots(family, g);
            std::optional<std::pair<MeasureReport, SampledCurve>> best;
            for (double theta : thetas) {
                SampledCurve curve = schmidt_mutual_information_curve(snaps, g, theta);
                MeasureReport r = positive_variation(curve);
                if (!best || r.value > best->first.value) best.emplace(std::move(r), std::move(curve));
            }
            return std::move(*best);
        },
        grid);
}

} // namespace chancap
