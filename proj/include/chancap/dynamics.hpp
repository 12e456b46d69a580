// dynamics.hpp - decoherence functions that parameterize the channels:
// Gamma(t), gamma(t) for pure dephasing and the complex amplitude G(t) for
// amplitude damping, including a Volterra solver for
//     dG/dt = -int_0^t f(t - t') G(t') dt',   G(0) = 1.

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "chancap/time_grid.hpp"

namespace chancap {

using Complex = std::complex<double>;

// J(omega) = coupling * (omega / cutoff)^ohmicity * exp(-omega / cutoff).
// Times are in the same unit as 1 / cutoff.
struct OhmicSpectrum {
    double ohmicity = 1.0;  // s
    double coupling = 0.1;  // gamma_M
    double cutoff = 1.0;    // omega_c

    void validate() const;
    double density(double omega) const;

    bool operator==(const OhmicSpectrum&) const = default;
};

// Lorentzian reservoir of width lambda centered at the cavity frequency; detuning = omega_0 - omega_c.
struct LorentzianSpectrum {
    double coupling = 1.0;  // gamma_M
    double width = 1.0;     // lambda
    double detuning = 0.0;  // delta

    void validate() const;
    double coupling_ratio() const { return coupling / width; }  // R

    bool operator==(const LorentzianSpectrum&) const = default;
};

// Isotropic photonic band gap. edge_detuning = (omega_0 - omega_e) / beta; negative is inside the gap.
struct BandGapModel {
    double beta = 1.0;
    double edge_detuning = 0.0;

    void validate() const;

    bool operator==(const BandGapModel&) const = default;
};

// ------------------------------------------------------------------ dephasing

double ohmic_exponent(const OhmicSpectrum& spec, double t);
double ohmic_rate(const OhmicSpectrum& spec, double t);
// Gamma(t -> infinity) = (coupling / cutoff) * Gamma_E(s - 1); finite only for s > 1.
double ohmic_plateau(const OhmicSpectrum& spec);

double markovian_exponent(double rate, double t);

enum class DephasingSource { ohmic, markovian, tabulated };

struct DephasingDynamics {
    DephasingSource source;
    std::function<double(double)> exponent;  // Gamma(t) >= 0
    std::function<double(double)> rate;      // gamma(t) = dGamma/dt
};

DephasingDynamics ohmic_dynamics(const OhmicSpectrum& spec);
DephasingDynamics markovian_dephasing(double rate);
// Piecewise-linear Gamma through the samples; rate from the same finite differences as rates_from_amplitude.
DephasingDynamics tabulated_dephasing(const TimeGrid& grid, std::vector<double> exponent);

// ---------------------------------------------------------- amplitude damping

Complex lorentzian_amplitude(const LorentzianSpectrum& spec, double t);
Complex markovian_amplitude(double rate, double t);

enum class KernelSingularity { regular, inverse_sqrt };

// f(tau) = smooth(tau) for regular kernels, smooth(tau) / sqrt(tau) for inverse-sqrt kernels.
struct MemoryKernel {
    std::function<Complex(double)> smooth;
    KernelSingularity singularity = KernelSingularity::regular;

    Complex operator()(double tau) const;
};

MemoryKernel lorentzian_kernel(const LorentzianSpectrum& spec);
MemoryKernel bandgap_kernel(const BandGapModel& model);

// Trapezoidal product integration (second order for regular kernels; the 1/sqrt
// factor is integrated exactly against piecewise-linear data for singular ones).
// Throws StepSizeError when |G| exceeds 1.5 at any node.
std::vector<Complex> volterra_solve(const MemoryKernel& kernel, const TimeGrid& grid);

std::vector<Complex> bandgap_amplitude(const BandGapModel& model, const TimeGrid& grid);

enum class AmplitudeSource { lorentzian, markovian, bandgap, volterra };

struct AmplitudeDynamics {
    AmplitudeSource source;
    std::function<std::vector<Complex>(const TimeGrid&)> sample;
};

AmplitudeDynamics lorentzian_dynamics(const LorentzianSpectrum& spec);
AmplitudeDynamics markovian_damping(double rate);
AmplitudeDynamics bandgap_dynamics(const BandGapModel& model);
AmplitudeDynamics volterra_dynamics(MemoryKernel kernel);

// gamma(t) = -2 Re(G'/G), s(t) = -2 Im(G'/G). Nodes with |G| <= 1e-12 are gaps (nullopt).
struct RateSamples {
    std::vector<std::optional<double>> decay_rate;
    std::vector<std::optional<double>> lamb_shift;
};

RateSamples rates_from_amplitude(std::span<const Complex> amplitude, double step);

// Second-order finite-difference derivative on a uniform grid (one-sided at the ends).
template <typename T>
std::vector<T> finite_difference(std::span<const T> values, double step);

} // namespace chancap
