// channels.hpp - dephasing and amplitude damping qubit channels at a fixed time.
//
// A snapshot freezes the time dependence into one scalar: the decoherence
// exponent Gamma for dephasing, the complex amplitude G for amplitude damping.

#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <variant>

#include "chancap/qmath.hpp"

namespace chancap {

template <typename Real>
class BasicDephasingSnapshot {
public:
    explicit BasicDephasingSnapshot(Real exponent) : exponent_(exponent) {
        if (!(exponent >= Real(0))) {
            throw DomainError("dephasing snapshot: Gamma must be >= 0 (got " + std::to_string(exponent) + ")");
        }
    }

    Real exponent() const noexcept { return exponent_; }
    Real coherence_factor() const { return std::exp(-exponent_); }

private:
    Real exponent_;
};

template <typename Real>
class BasicADSnapshot {
public:
    static constexpr Real modulus_slack = Real(1e-8);

    // |G| may exceed 1 by roundoff up to 1e-8; such values are renormalized onto the unit circle.
    explicit BasicADSnapshot(std::complex<Real> amplitude) : amplitude_(amplitude) {
        const Real mod = std::abs(amplitude);
        if (!std::isfinite(mod) || mod > Real(1) + modulus_slack) {
            throw DomainError("amplitude damping snapshot: |G| = " + std::to_string(mod) + " exceeds 1");
        }
        if (mod > Real(1)) amplitude_ /= mod;
    }

    std::complex<Real> amplitude() const noexcept { return amplitude_; }
    // |G|^2, the surviving excited-state population.
    Real transmissivity() const { return std::norm(amplitude_); }

private:
    std::complex<Real> amplitude_;
};

using DephasingSnapshot = BasicDephasingSnapshot<double>;
using ADSnapshot = BasicADSnapshot<double>;
using ChannelSnapshot = std::variant<DephasingSnapshot, ADSnapshot>;

// ---------------------------------------------------------------- dephasing

template <typename Real>
BasicDensityMatrix<Real, 2> apply(const BasicDephasingSnapshot<Real>& snap, const BasicDensityMatrix<Real, 2>& rho) {
    ComplexMatrix<Real, 2> out = rho.matrix();
    const Real decay = snap.coherence_factor();
    out(0, 1) *= decay;
    out(1, 0) *= decay;
    return BasicDensityMatrix<Real, 2>(out);
}

template <typename Real>
BasicKrausSet<Real, 2> kraus(const BasicDephasingSnapshot<Real>& snap) {
    const Real decay = snap.coherence_factor();
    const ComplexMatrix<Real, 2> id = ComplexMatrix<Real, 2>::Identity();
    ComplexMatrix<Real, 2> sigma_z = id;
    sigma_z(1, 1) = Real(-1);
    return BasicKrausSet<Real, 2>({std::sqrt((Real(1) + decay) / Real(2)) * id,
                                   std::sqrt((Real(1) - decay) / Real(2)) * sigma_z});
}

// Environment state; depends on rho only through Tr(rho sigma_z).
template <typename Real>
BasicDensityMatrix<Real, 2> complementary(const BasicDephasingSnapshot<Real>& snap,
                                          const BasicDensityMatrix<Real, 2>& rho) {
    const Real decay = snap.coherence_factor();
    const Real polarization = std::real(rho(0, 0) - rho(1, 1));
    const Real off = Real(0.5) * std::sqrt(std::max(Real(0), Real(1) - decay * decay)) * polarization;
    ComplexMatrix<Real, 2> env;
    env << (Real(1) + decay) / Real(2), off, off, (Real(1) - decay) / Real(2);
    return BasicDensityMatrix<Real, 2>(env);
}

template <typename Real>
constexpr bool is_degradable(const BasicDephasingSnapshot<Real>&) noexcept {
    return true;
}

// --------------------------------------------------------- amplitude damping

template <typename Real>
BasicDensityMatrix<Real, 2> apply(const BasicADSnapshot<Real>& snap, const BasicDensityMatrix<Real, 2>& rho) {
    const std::complex<Real> g = snap.amplitude();
    const Real survive = snap.transmissivity();
    const Real excited = std::real(rho(1, 1));
    ComplexMatrix<Real, 2> out;
    out << Real(1) - survive * excited, g * rho(0, 1), std::conj(g) * rho(1, 0), survive * excited;
    return BasicDensityMatrix<Real, 2>(out);
}

// K1 = diag(1, conj G) so that the Kraus route reproduces G rho_12 in the upper-right entry.
template <typename Real>
BasicKrausSet<Real, 2> kraus(const BasicADSnapshot<Real>& snap) {
    ComplexMatrix<Real, 2> k1 = ComplexMatrix<Real, 2>::Zero();
    k1(0, 0) = Real(1);
    k1(1, 1) = std::conj(snap.amplitude());
    ComplexMatrix<Real, 2> k2 = ComplexMatrix<Real, 2>::Zero();
    k2(0, 1) = std::sqrt(std::max(Real(0), Real(1) - snap.transmissivity()));
    return BasicKrausSet<Real, 2>({k1, k2});
}

template <typename Real>
BasicDensityMatrix<Real, 2> complementary(const BasicADSnapshot<Real>& snap, const BasicDensityMatrix<Real, 2>& rho) {
    const Real lost = std::max(Real(0), Real(1) - snap.transmissivity());
    const Real excited = std::real(rho(1, 1));
    const Real amp = std::sqrt(lost);
    ComplexMatrix<Real, 2> env;
    env << Real(1) - lost * excited, amp * rho(0, 1), amp * rho(1, 0), lost * excited;
    return BasicDensityMatrix<Real, 2>(env);
}

// |G|^2 within this distance of 1/2 counts as the boundary, so that
// |sqrt(0.5)|^2 = 0.5000000000000001 is not mistaken for a degradable channel.
inline constexpr double degradability_slack = 1e-12;

// Degradable exactly when |G|^2 > 1/2 (boundary excluded).
template <typename Real>
bool is_degradable(const BasicADSnapshot<Real>& snap) {
    return snap.transmissivity() > Real(0.5) + Real(degradability_slack);
}

// ------------------------------------------------------------ variant helpers

inline DensityMatrix apply(const ChannelSnapshot& snap, const DensityMatrix& rho) {
    return std::visit([&](const auto& s) { return apply(s, rho); }, snap);
}

inline KrausSet kraus(const ChannelSnapshot& snap) {
    return std::visit([](const auto& s) { return kraus(s); }, snap);
}

inline DensityMatrix complementary(const ChannelSnapshot& snap, const DensityMatrix& rho) {
    return std::visit([&](const auto& s) { return complementary(s, rho); }, snap);
}

inline bool is_degradable(const ChannelSnapshot& snap) {
    return std::visit([](const auto& s) { return is_degradable(s); }, snap);
}

} // namespace chancap
