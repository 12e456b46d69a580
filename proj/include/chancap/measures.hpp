// measures.hpp - non-Markovianity measures as positive variation of capacity and
// mutual-information curves, and a rate-sign divisibility witness.

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "chancap/capacities.hpp"
#include "chancap/time_grid.hpp"

namespace chancap {

struct Interval {
    double start = 0.0;
    double end = 0.0;

    bool operator==(const Interval&) const = default;
};

struct MeasureReport {
    double value = 0.0;               // bits
    std::vector<Interval> intervals;  // maximal runs of positive increments
    TimeGrid grid;
    bool converged = true;
};

// Increments smaller than this in magnitude count as zero.
inline constexpr double increment_tolerance = 1e-12;
// Horizon check: the final 10% of the grid may add at most this much.
inline constexpr double horizon_tolerance = 1e-4;
// Grid check: relative change against the half-step grid.
inline constexpr double refinement_tolerance = 1e-3;

// Discrete positive variation sum_k max(0, X_{k+1} - X_k). `converged` is always true here.
MeasureReport positive_variation(const SampledCurve& curve);

// Positive variation contributed by increments inside the final `fraction` of the grid.
double tail_variation(const SampledCurve& curve, double fraction = 0.1);

// Runs `evaluate` on `grid`, extends the horizon once (x2) if the tail still moves
// the value by >= horizon_tolerance, then compares with the half-step grid.
MeasureReport checked_measure(const std::function<std::pair<MeasureReport, SampledCurve>(const TimeGrid&)>& evaluate,
                              const TimeGrid& grid);

MeasureReport measure_nq(const ChannelFamily& family, const TimeGrid& grid);
MeasureReport measure_nc(const ChannelFamily& family, const TimeGrid& grid);

// N_Q of n independent copies of a dephasing channel: n * N_Q(single copy).
double additivity_nq_dephasing(const DephasingDynamics& dynamics, const TimeGrid& grid, std::size_t copies);

struct DivisibilityWitness {
    std::vector<Interval> negative_rate;  // runs of nodes with rate < -1e-9
    std::vector<Interval> unsampled;      // runs of nodes where the rate is undefined (|G| ~ 0)

    bool violated() const { return !negative_rate.empty(); }
};

inline constexpr double negative_rate_tolerance = 1e-9;

DivisibilityWitness divisibility_witness(const ChannelFamily& family, const TimeGrid& grid);

// I(rho_SA) = S(rho_S) + S(rho_A) - S(rho_SA) for a two-qubit state.
double bipartite_mutual_information(const DensityMatrix4& rho);

// Mutual information of (id (x) Phi_t) applied to cos(theta)|00> + sin(theta)|11>.
SampledCurve schmidt_mutual_information_curve(std::span<const ChannelSnapshot> snaps, const TimeGrid& grid,
                                              double theta);

// Max over theta in a uniform sweep of [0, pi/2] (pi/4 alone when theta_samples == 1)
// of the positive variation of the curve above. A lower bound on the LSF measure.
MeasureReport lsf_lower_bound(const ChannelFamily& family, const TimeGrid& grid, std::size_t theta_samples = 9);

std::vector<double> theta_sweep(std::size_t theta_samples);

} // namespace chancap
