#include "chancap/capacities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <type_traits>

namespace chancap {

UnitIntervalMaximum maximize_on_unit_interval(const std::function<double(double)>& objective,
                                              std::size_t grid_points, double tolerance) {
    if (grid_points < 3) throw DomainError("maximize_on_unit_interval: need at least 3 grid points");
    const double spacing = 1.0 / static_cast<double>(grid_points - 1);
    UnitIntervalMaximum best{0.0, objective(0.0)};
    std::size_t best_index = 0;
    for (std::size_t i = 1; i < grid_points; ++i) {
        const double p = i + 1 == grid_points ? 1.0 : static_cast<double>(i) * spacing;
        const double v = objective(p);
        if (v > best.value) {
            best = {p, v};
            best_index = i;
        }
    }

    double lo = best_index == 0 ? 0.0 : static_cast<double>(best_index - 1) * spacing;
    double hi = std::min(1.0, static_cast<double>(best_index + 1) * spacing);
    constexpr double inv_phi = 0.6180339887498949;  // 1 / golden ratio
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = objective(c);
    double fd = objective(d);
    while (hi - lo > tolerance) {
        if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = objective(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = objective(d);
        }
    }
    const double mid = 0.5 * (lo + hi);
    const double fmid = objective(mid);
    if (fmid > best.value) best = {mid, fmid};
    return best;
}

CapacityValue q_dephasing(double exponent) {
    if (!(exponent >= 0.0)) throw DomainError("q_dephasing: Gamma must be >= 0");
    const double q = 1.0 - binary_entropy(0.5 * (1.0 + std::exp(-2.0 * exponent)));
    return {std::clamp(q, 0.0, 1.0), std::nullopt, CapacityMethod::closed_form};
}

CapacityValue cea_dephasing(double exponent) {
    CapacityValue q = q_dephasing(exponent);
    q.value += 1.0;
    return q;
}

namespace {

void check_transmissivity(double g2, const char* who) {
    if (!(g2 >= -1e-12 && g2 <= 1.0 + 1e-8)) {
        throw DomainError(std::string(who) + ": |G|^2 must lie in [0,1]");
    }
}

} // namespace

CapacityValue q_ad(double transmissivity) {
    check_transmissivity(transmissivity, "q_ad");
    const double g = std::clamp(transmissivity, 0.0, 1.0);
    if (g <= 0.5 + degradability_slack) return {0.0, 0.0, CapacityMethod::closed_form};
    const auto best = maximize_on_unit_interval(
        [g](double p) { return binary_entropy(g * p) - binary_entropy((1.0 - g) * p); });
    return {std::clamp(best.value, 0.0, 1.0), best.argmax, CapacityMethod::grid_opt};
}

CapacityValue cea_ad(double transmissivity) {
    check_transmissivity(transmissivity, "cea_ad");
    const double g = std::clamp(transmissivity, 0.0, 1.0);
    const auto best = maximize_on_unit_interval([g](double p) {
        return binary_entropy(p) + binary_entropy(g * p) - binary_entropy((1.0 - g) * p);
    });
    return {std::clamp(best.value, 0.0, 2.0), best.argmax, CapacityMethod::grid_opt};
}

CapacityValue capacity(const ChannelSnapshot& snap, Capacity which) {
    return std::visit(
        [which](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, DephasingSnapshot>) {
                return which == Capacity::quantum ? q_dephasing(s.exponent()) : cea_dephasing(s.exponent());
            } else {
                return which == Capacity::quantum ? q_ad(s.transmissivity()) : cea_ad(s.transmissivity());
            }
        },
        snap);
}

double coherent_information(const ChannelSnapshot& snap, const DensityMatrix& rho) {
    return von_neumann_entropy(apply(snap, rho)) - von_neumann_entropy(complementary(snap, rho));
}

double mutual_information(const ChannelSnapshot& snap, const DensityMatrix& rho) {
    return von_neumann_entropy(rho) + coherent_information(snap, rho);
}

double entropy_exchange_via_purification(const KrausSet& kraus, const DensityMatrix& rho) {
    const DensityMatrix4 joint = apply_kraus(local_kraus(kraus, Subsystem::first), purify(rho));
    return von_neumann_entropy(joint);
}

double two_copy_coherent_information(const ChannelSnapshot& snap, const DensityMatrix& rho) {
    const KrausSet single = kraus(snap);
    const KrausSet4 doubled = product_kraus(single, single);
    const DensityMatrix4 input = tensor(rho, rho);
    const DensityMatrix4 output = apply_kraus(doubled, input);
    // Two Kraus operators per copy -> four-level environment.
    const auto environment = complementary_from_kraus<4>(doubled, input);
    return von_neumann_entropy(output) - von_neumann_entropy(environment);
}

std::vector<ChannelSnapshot> snapshots(const ChannelFamily& family, const TimeGrid& grid) {
    std::vector<ChannelSnapshot> out;
    out.reserve(grid.size());
    std::visit(
        [&](const auto& dyn) {
            using T = std::decay_t<decltype(dyn)>;
            if constexpr (std::is_same_v<T, DephasingDynamics>) {
                for (std::size_t k = 0; k < grid.size(); ++k) out.emplace_back(DephasingSnapshot(dyn.exponent(grid[k])));
            } else {
                for (const Complex& g : dyn.sample(grid)) out.emplace_back(ADSnapshot(g));
            }
        },
        family);
    return out;
}

SampledCurve capacity_curve(std::span<const ChannelSnapshot> snaps, const TimeGrid& grid, Capacity which) {
    if (snaps.size() != grid.size()) throw DomainError("capacity_curve: snapshot count must match the grid");
    SampledCurve curve{grid, std::vector<double>(grid.size())};
    for (std::size_t k = 0; k < snaps.size(); ++k) curve.values[k] = capacity(snaps[k], which).value;
    return curve;
}

SampledCurve capacity_curve(const ChannelFamily& family, const TimeGrid& grid, Capacity which) {
    const auto snaps = snapshots(family, grid);
    return capacity_curve(snaps, grid, which);
}

} // namespace chancap
