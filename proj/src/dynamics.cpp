#include "chancap/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "chancap/errors.hpp"

namespace chancap {

namespace {

constexpr double quadrature_tolerance = 1e-13;
constexpr unsigned quadrature_depth = 12;

// Integrand support is cut at 40 + 2s cutoff units; the dropped tail is below
// 2 x^{s-2} e^{-x} there, i.e. ~1e-17 for the Ohmicities of interest.
double upper_limit(const OhmicSpectrum& spec) { return 40.0 + 2.0 * spec.ohmicity; }

// Integrate on panels short enough that each holds only a few oscillations of sin/cos(x tau).
// The phase x * tau carries a rounding error of ~eps * x * tau, which caps the attainable
// relative accuracy; asking for more makes the adaptive rule recurse to full depth.
template <typename F>
double oscillatory_integral(F&& f, double upper, double tau) {
    const double panel_width = std::min(1.0, 8.0 * std::numbers::pi / std::max(tau, 1e-300));
    const auto panels = static_cast<std::size_t>(std::ceil(upper / panel_width));
    const double tolerance =
        std::max(quadrature_tolerance, 8.0 * std::numeric_limits<double>::epsilon() * tau * upper);
    double total = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        const double a = upper * static_cast<double>(p) / static_cast<double>(panels);
        const double b = upper * static_cast<double>(p + 1) / static_cast<double>(panels);
        double err = 0.0;
        total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, quadrature_depth,
                                                                                tolerance, &err);
        if (!std::isfinite(total)) throw NumericalError("Ohmic quadrature produced a non-finite value");
    }
    return total;
}

} // namespace

void OhmicSpectrum::validate() const {
    if (!(ohmicity > 0.0)) throw UnsupportedSpectrumError("Ohmic spectrum: s must be > 0");
    if (!(coupling > 0.0)) throw DomainError("Ohmic spectrum: coupling must be > 0");
    if (!(cutoff > 0.0)) throw DomainError("Ohmic spectrum: cutoff must be > 0");
}

double OhmicSpectrum::density(double omega) const {
    if (omega <= 0.0) return 0.0;
    const double x = omega / cutoff;
    return coupling * std::pow(x, ohmicity) * std::exp(-x);
}

void LorentzianSpectrum::validate() const {
    if (!(coupling > 0.0)) throw DomainError("Lorentzian spectrum: coupling must be > 0");
    if (!(width > 0.0)) throw DomainError("Lorentzian spectrum: width must be > 0");
    if (!std::isfinite(detuning)) throw DomainError("Lorentzian spectrum: detuning must be finite");
}

void BandGapModel::validate() const {
    if (!(beta > 0.0)) throw DomainError("band gap model: beta must be > 0");
    if (!std::isfinite(edge_detuning)) throw DomainError("band gap model: detuning must be finite");
}

// Gamma(t) = int_0^inf J(w) (1 - cos wt) / w^2 dw
//          = (coupling / cutoff) int_0^inf x^{s-2} 2 sin^2(x tau / 2) e^{-x} dx,  tau = cutoff * t.
double ohmic_exponent(const OhmicSpectrum& spec, double t) {
    spec.validate();
    if (t < 0.0) throw DomainError("ohmic_exponent: t must be >= 0");
    if (t == 0.0) return 0.0;
    const double tau = spec.cutoff * t;
    const double s = spec.ohmicity;
    auto integrand = [tau, s](double x) {
        if (x <= 0.0) return 0.0;
        const double half = std::sin(0.5 * x * tau);
        return 2.0 * half * half * std::exp((s - 2.0) * std::log(x) - x);
    };
    const double value = spec.coupling / spec.cutoff * oscillatory_integral(integrand, upper_limit(spec), tau);
    return std::max(value, 0.0);
}

// gamma(t) = int_0^inf J(w) sin(wt) / w dw = coupling int_0^inf x^{s-1} sin(x tau) e^{-x} dx.
double ohmic_rate(const OhmicSpectrum& spec, double t) {
    spec.validate();
    if (t < 0.0) throw DomainError("ohmic_rate: t must be >= 0");
    if (t == 0.0) return 0.0;
    const double tau = spec.cutoff * t;
    const double s = spec.ohmicity;
    auto integrand = [tau, s](double x) {
        if (x <= 0.0) return 0.0;
        return std::sin(x * tau) * std::exp((s - 1.0) * std::log(x) - x);
    };
    return spec.coupling * oscillatory_integral(integrand, upper_limit(spec), tau);
}

double ohmic_plateau(const OhmicSpectrum& spec) {
    spec.validate();
    if (spec.ohmicity <= 1.0) {
        throw UnsupportedSpectrumError("ohmic_plateau: Gamma(t) grows without bound for s <= 1");
    }
    return spec.coupling / spec.cutoff * std::tgamma(spec.ohmicity - 1.0);
}

double markovian_exponent(double rate, double t) {
    if (!(rate > 0.0)) throw DomainError("markovian_exponent: rate must be > 0");
    if (t < 0.0) throw DomainError("markovian_exponent: t must be >= 0");
    return rate * t;
}

DephasingDynamics ohmic_dynamics(const OhmicSpectrum& spec) {
    spec.validate();
    return {DephasingSource::ohmic, [spec](double t) { return ohmic_exponent(spec, t); },
            [spec](double t) { return ohmic_rate(spec, t); }};
}

DephasingDynamics markovian_dephasing(double rate) {
    if (!(rate > 0.0)) throw DomainError("markovian_dephasing: rate must be > 0");
    return {DephasingSource::markovian, [rate](double t) { return markovian_exponent(rate, t); },
            [rate](double) { return rate; }};
}

DephasingDynamics tabulated_dephasing(const TimeGrid& grid, std::vector<double> exponent) {
    if (exponent.size() != grid.size()) throw DomainError("tabulated_dephasing: sample count must match the grid");
    for (double g : exponent) {
        if (!(g >= 0.0)) throw DomainError("tabulated_dephasing: Gamma samples must be >= 0");
    }
    auto rates = std::make_shared<std::vector<double>>(finite_difference<double>(exponent, grid.step()));
    auto table = std::make_shared<std::vector<double>>(std::move(exponent));
    auto interpolate = [grid](const std::vector<double>& v, double t) {
        if (t <= 0.0) return v.front();
        if (t >= grid.t_max()) return v.back();
        const double pos = t / grid.step();
        const auto k = std::min(static_cast<std::size_t>(pos), grid.size() - 2);
        const double w = pos - static_cast<double>(k);
        return (1.0 - w) * v[k] + w * v[k + 1];
    };
    return {DephasingSource::tabulated, [table, interpolate](double t) { return interpolate(*table, t); },
            [rates, interpolate](double t) { return interpolate(*rates, t); }};
}

// G(t) = e^{-a t/2} [cosh(Omega t/2) + (a/Omega) sinh(Omega t/2)],  a = lambda - i delta,
// Omega = sqrt(lambda^2 - 2 i delta lambda - (2 gamma_M lambda + delta^2)).
Complex lorentzian_amplitude(const LorentzianSpectrum& spec, double t) {
    spec.validate();
    if (t < 0.0) throw DomainError("lorentzian_amplitude: t must be >= 0");
    const double lambda = spec.width;
    const double delta = spec.detuning;
    const Complex a(lambda, -delta);
    const Complex omega =
        std::sqrt(Complex(lambda * lambda - (2.0 * spec.coupling * lambda + delta * delta), -2.0 * delta * lambda));
    const Complex z = 0.5 * omega * t;
    Complex bracket;
    if (std::abs(omega) * t < 1e-6) {
        // cosh z -> 1 + z^2/2, sinh(z)/Omega -> (t/2)(1 + z^2/6)
        bracket = 1.0 + 0.5 * z * z + a * (0.5 * t) * (1.0 + z * z / 6.0);
    } else {
        bracket = std::cosh(z) + a / omega * std::sinh(z);
    }
    return std::exp(-0.5 * a * t) * bracket;
}

Complex markovian_amplitude(double rate, double t) {
    if (!(rate > 0.0)) throw DomainError("markovian_amplitude: rate must be > 0");
    if (t < 0.0) throw DomainError("markovian_amplitude: t must be >= 0");
    return {std::exp(-0.5 * rate * t), 0.0};
}

Complex MemoryKernel::operator()(double tau) const {
    if (singularity == KernelSingularity::regular) return smooth(tau);
    return smooth(tau) / std::sqrt(tau);
}

// f(tau) = (gamma_M lambda / 2) e^{(i delta - lambda) tau}
MemoryKernel lorentzian_kernel(const LorentzianSpectrum& spec) {
    spec.validate();
    const double scale = 0.5 * spec.coupling * spec.width;
    const Complex exponent(-spec.width, spec.detuning);
    return {[scale, exponent](double tau) { return scale * std::exp(exponent * tau); }, KernelSingularity::regular};
}

// f(tau) = beta^{3/2} e^{i (delta_e beta tau - pi/4)} / sqrt(pi tau)
MemoryKernel bandgap_kernel(const BandGapModel& model) {
    model.validate();
    const double scale = std::pow(model.beta, 1.5) / std::sqrt(std::numbers::pi);
    const double detuning = model.edge_detuning * model.beta;
    return {[scale, detuning](double tau) { return scale * std::polar(1.0, detuning * tau - 0.25 * std::numbers::pi); },
            KernelSingularity::inverse_sqrt};
}

std::vector<Complex> bandgap_amplitude(const BandGapModel& model, const TimeGrid& grid) {
    return volterra_solve(bandgap_kernel(model), grid);
}

AmplitudeDynamics lorentzian_dynamics(const LorentzianSpectrum& spec) {
    spec.validate();
    return {AmplitudeSource::lorentzian, [spec](const TimeGrid& grid) {
                std::vector<Complex> g(grid.size());
                for (std::size_t k = 0; k < grid.size(); ++k) g[k] = lorentzian_amplitude(spec, grid[k]);
                return g;
            }};
}

AmplitudeDynamics markovian_damping(double rate) {
    if (!(rate > 0.0)) throw DomainError("markovian_damping: rate must be > 0");
    return {AmplitudeSource::markovian, [rate](const TimeGrid& grid) {
                std::vector<Complex> g(grid.size());
                for (std::size_t k = 0; k < grid.size(); ++k) g[k] = markovian_amplitude(rate, grid[k]);
                return g;
            }};
}

AmplitudeDynamics bandgap_dynamics(const BandGapModel& model) {
    model.validate();
    return {AmplitudeSource::bandgap, [model](const TimeGrid& grid) { return bandgap_amplitude(model, grid); }};
}

AmplitudeDynamics volterra_dynamics(MemoryKernel kernel) {
    return {AmplitudeSource::volterra,
            [kernel = std::move(kernel)](const TimeGrid& grid) { return volterra_solve(kernel, grid); }};
}

template <typename T>
std::vector<T> finite_difference(std::span<const T> values, double step) {
    const std::size_t n = values.size();
    if (n < 2) throw DomainError("finite_difference: need at least 2 samples");
    std::vector<T> d(n);
    if (n == 2) {
        d[0] = d[1] = (values[1] - values[0]) / step;
        return d;
    }
    for (std::size_t k = 1; k + 1 < n; ++k) d[k] = (values[k + 1] - values[k - 1]) / (2.0 * step);
    d[0] = (-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * step);
    d[n - 1] = (3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * step);
    return d;
}

template std::vector<double> finite_difference<double>(std::span<const double>, double);
template std::vector<Complex> finite_difference<Complex>(std::span<const Complex>, double);

RateSamples rates_from_amplitude(std::span<const Complex> amplitude, double step) {
    const auto derivative = finite_difference<Complex>(amplitude, step);
    RateSamples out;
    out.decay_rate.resize(amplitude.size());
    out.lamb_shift.resize(amplitude.size());
    for (std::size_t k = 0; k < amplitude.size(); ++k) {
        if (std::abs(amplitude[k]) <= 1e-12) continue;
        const Complex ratio = derivative[k] / amplitude[k];
        out.decay_rate[k] = -2.0 * ratio.real();
        out.lamb_shift[k] = -2.0 * ratio.imag();
    }
    return out;
}

} // namespace chancap
