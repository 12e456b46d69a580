#include <cmath>
#include <string>
#include <vector>

#include "chancap/dynamics.hpp"
#include "chancap/errors.hpp"

namespace chancap {

namespace {

constexpr double instability_threshold = 1.5;

// Quadrature weights, by distance d = n - j between the current node n and node j,
// for int_0^{t_n} f(t_n - s) G(s) ds. `interior[d]` applies to 1 <= j <= n - 1;
// `origin(n)` to j = 0 and `diagonal` to j = n.
struct ConvolutionWeights {
    std::vector<double> interior;
    std::vector<double> origin;
    double diagonal = 0.0;
};

ConvolutionWeights trapezoidal_weights(std::size_t nodes, double h) {
    ConvolutionWeights w;
    w.interior.assign(nodes, h);
    w.origin.assign(nodes, 0.5 * h);
    w.diagonal = 0.5 * h;
    return w;
}

// Product trapezoid for f = phi / sqrt(tau): phi * G is interpolated linearly on each
// interval and integrated exactly against tau^{-1/2}. With v = tau / h and interval
// m covering v in [m, m + 1]:
//   A_m = int v^{-1/2} dv,  B_m = int v^{1/2} dv,
//   far-node share  alpha_m = B_m - m A_m,  near-node share  beta_m = (m + 1) A_m - B_m.
ConvolutionWeights inverse_sqrt_weights(std::size_t nodes, double h) {
    std::vector<double> alpha(nodes), beta(nodes);
    for (std::size_t m = 0; m < nodes; ++m) {
        const double lo = static_cast<double>(m);
        const double hi = lo + 1.0;
        const double a = 2.0 * (std::sqrt(hi) - std::sqrt(lo));
        const double b = (2.0 / 3.0) * (hi * std::sqrt(hi) - lo * std::sqrt(lo));
        alpha[m] = b - lo * a;
        beta[m] = hi * a - b;
    }
    const double scale = std::sqrt(h);
    ConvolutionWeights w;
    w.interior.assign(nodes, 0.0);
    w.origin.assign(nodes, 0.0);
    for (std::size_t d = 1; d < nodes; ++d) {
        w.interior[d] = scale * (alpha[d - 1] + beta[d]);
        w.origin[d] = scale * alpha[d - 1];
    }
    w.diagonal = scale * beta[0];
    return w;
}

} // namespace

std::vector<Complex> volterra_solve(const MemoryKernel& kernel, const TimeGrid& grid) {
    const std::size_t nodes = grid.size();
    const double h = grid.step();
    if (!(h > 0.0)) throw StepSizeError("volterra_solve: step must be positive");

    const bool singular = kernel.singularity == KernelSingularity::inverse_sqrt;
    const ConvolutionWeights w = singular ? inverse_sqrt_weights(nodes, h) : trapezoidal_weights(nodes, h);

    // Kernel (smooth part for singular kernels) depends only on the distance d * h.
    std::vector<Complex> phi(nodes);
    for (std::size_t d = 0; d < nodes; ++d) {
        phi[d] = kernel.smooth(static_cast<double>(d) * h);
        if (!std::isfinite(phi[d].real()) || !std::isfinite(phi[d].imag())) {
            throw NumericalError("volterra_solve: kernel is not finite at tau = " + std::to_string(d * h));
        }
    }
    std::vector<Complex> weighted(nodes);
    for (std::size_t d = 1; d < nodes; ++d) weighted[d] = w.interior[d] * phi[d];
    const Complex self = w.diagonal * phi[0];

    std::vector<Complex> g(nodes);
    g[0] = 1.0;
    Complex derivative_prev = 0.0;  // G'(0) = 0: empty memory integral
    for (std::size_t n = 1; n < nodes; ++n) {
        Complex history = w.origin[n] * phi[n] * g[0];
        for (std::size_t j = 1; j < n; ++j) history += weighted[n - j] * g[j];
        // G_n = G_{n-1} + h/2 (D_{n-1} + D_n),  D_n = -(history + self * G_n)
        g[n] = (g[n - 1] + 0.5 * h * (derivative_prev - history)) / (1.0 + 0.5 * h * self);
        derivative_prev = -(history + self * g[n]);
        if (!(std::abs(g[n]) <= instability_threshold)) {
            throw StepSizeError("volterra_solve: |G| = " + std::to_string(std::abs(g[n])) + " at t = " +
                                std::to_string(grid[n]) + "; reduce the step size");
        }
    }
    return g;
}

} // namespace chancap
