// capacities.hpp - quantum capacity Q and entanglement-assisted capacity C_ea of
// dephasing and amplitude damping snapshots, plus the entropy-route quantities
// (coherent information, mutual information, entropy exchange) that check them.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "chancap/channels.hpp"
#include "chancap/dynamics.hpp"
#include "chancap/time_grid.hpp"

namespace chancap {

enum class CapacityMethod { closed_form, grid_opt, oracle };

struct CapacityValue {
    double value = 0.0;                // bits
    std::optional<double> optimizer;   // optimal excited-state population p, when meaningful
    CapacityMethod method = CapacityMethod::closed_form;
};

enum class Capacity { quantum, entanglement_assisted };

struct UnitIntervalMaximum {
    double argmax = 0.0;
    double value = 0.0;
};

// Coarse grid of `grid_points` on [0,1], then golden-section refinement on the
// bracket around the best node until the bracket is narrower than `tolerance`.
UnitIntervalMaximum maximize_on_unit_interval(const std::function<double(double)>& objective,
                                              std::size_t grid_points = 2001, double tolerance = 1e-10);

// Q^D = 1 - H2((1 + e^{-2 Gamma}) / 2)
CapacityValue q_dephasing(double exponent);
// C_ea^D = 1 + Q^D
CapacityValue cea_dephasing(double exponent);
// Q^A = max_p H2(g p) - H2((1 - g) p) for g = |G|^2 > 1/2, else 0.
CapacityValue q_ad(double transmissivity);
// C_ea^A = max_p H2(p) + H2(g p) - H2((1 - g) p)
CapacityValue cea_ad(double transmissivity);

CapacityValue capacity(const ChannelSnapshot& snap, Capacity which);

// I_c = S(Phi rho) - S(complementary(rho)); may be negative.
double coherent_information(const ChannelSnapshot& snap, const DensityMatrix& rho);
// I = S(rho) + I_c
double mutual_information(const ChannelSnapshot& snap, const DensityMatrix& rho);
// Entropy of (Phi (x) id) applied to a purification of rho.
double entropy_exchange_via_purification(const KrausSet& kraus, const DensityMatrix& rho);
// Coherent information of Phi (x) Phi on rho (x) rho, computed on the 4x4 level
// from the product Kraus set.
double two_copy_coherent_information(const ChannelSnapshot& snap, const DensityMatrix& rho);

// Time-parameterized channel: dephasing dynamics or amplitude damping dynamics.
using ChannelFamily = std::variant<DephasingDynamics, AmplitudeDynamics>;

std::vector<ChannelSnapshot> snapshots(const ChannelFamily& family, const TimeGrid& grid);

// Capacity sampled independently at every grid node.
SampledCurve capacity_curve(const ChannelFamily& family, const TimeGrid& grid, Capacity which);
SampledCurve capacity_curve(std::span<const ChannelSnapshot> snaps, const TimeGrid& grid, Capacity which);

} // namespace chancap
