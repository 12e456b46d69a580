// qmath.hpp - dense 2x2 / 4x4 Hermitian toolkit: states, Kraus maps, entropies,
// partial trace and purification.
//
// Basis convention: qubit basis {|1>, |2>} -> indices {0, 1}. Two-qubit operators
// are (first (x) second) in row-major Kronecker order, index = 2 * i_first + i_second.
// Entropies are in bits.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "chancap/errors.hpp"

namespace chancap {

template <typename Real, int Dim>
using ComplexMatrix = Eigen::Matrix<std::complex<Real>, Dim, Dim>;

template <typename Real, int Dim>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Dim, 1>;

template <typename Real, int Dim>
using RealVector = Eigen::Matrix<Real, Dim, 1>;

using Matrix2c = ComplexMatrix<double, 2>;
using Matrix4c = ComplexMatrix<double, 4>;

enum class Subsystem { first, second };

struct StateTolerance {
    double hermiticity = 1e-12;
    double trace = 1e-12;
    double positivity = 1e-10;
};

// Eigenvalues sorted descending, eigenvectors as matching columns.
template <typename Real, int Dim>
struct HermitianEigen {
    RealVector<Real, Dim> values;
    ComplexMatrix<Real, Dim> vectors;
};

namespace detail {

// First component with non-negligible modulus made real positive.
template <typename Real, int Dim>
void fix_phase(Eigen::Ref<ComplexVector<Real, Dim>> v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const Real mag = std::abs(v(i));
        if (mag > Real(1e-14)) {
            v *= std::conj(v(i)) / mag;
            v(i) = std::complex<Real>(std::real(v(i)), Real(0));
            return;
        }
    }
}

// Closed-form quadratic solve. Diagonal input keeps the computational basis so
// degenerate cases (maximally mixed) give basis vectors deterministically.
template <typename Real>
HermitianEigen<Real, 2> eigen_2x2(const ComplexMatrix<Real, 2>& m) {
    using C = std::complex<Real>;
    const Real a = std::real(m(0, 0));
    const Real d = std::real(m(1, 1));
    const C b = Real(0.5) * (m(0, 1) + std::conj(m(1, 0)));
    const Real half_gap = Real(0.5) * (a - d);
    const Real radius = std::hypot(half_gap, std::abs(b));
    const Real mean = Real(0.5) * (a + d);

    HermitianEigen<Real, 2> out;
    out.values << mean + radius, mean - radius;
    if (std::abs(b) <= Real(1e-300) || radius == Real(0)) {
        out.vectors.setIdentity();
        if (d > a) {
            out.vectors.col(0).swap(out.vectors.col(1));
        }
        out.values << std::max(a, d), std::min(a, d);
        return out;
    }
    for (int k = 0; k < 2; ++k) {
        const Real lambda = out.values(k);
        // Pick whichever row of (M - lambda) gives the better-conditioned null vector.
        ComplexVector<Real, 2> from_row0(b, C(lambda - a));
        ComplexVector<Real, 2> from_row1(C(lambda - d), std::conj(b));
        ComplexVector<Real, 2> v = from_row0.squaredNorm() >= from_row1.squaredNorm() ? from_row0 : from_row1;
        v.normalize();
        fix_phase<Real, 2>(v);
        out.vectors.col(k) = v;
    }
    return out;
}

template <typename Real, int Dim>
HermitianEigen<Real, Dim> eigen_general(const ComplexMatrix<Real, Dim>& m) {
    const ComplexMatrix<Real, Dim> herm = (m + m.adjoint()) * Real(0.5);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real, Dim>> solver(herm);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("hermitian_eigen: eigensolver did not converge");
    }
    HermitianEigen<Real, Dim> out;
    // Eigen returns ascending order.
    for (int k = 0; k < Dim; ++k) {
        out.values(k) = solver.eigenvalues()(Dim - 1 - k);
        ComplexVector<Real, Dim> v = solver.eigenvectors().col(Dim - 1 - k);
        fix_phase<Real, Dim>(v);
        out.vectors.col(k) = v;
    }
    return out;
}

} // namespace detail

template <typename Real, int Dim>
HermitianEigen<Real, Dim> hermitian_eigen(const ComplexMatrix<Real, Dim>& m) {
    static_assert(Dim == 2 || Dim == 4, "qmath supports 2x2 and 4x4 matrices");
    if (!m.allFinite()) throw NumericalError("hermitian_eigen: non-finite matrix entries");
    if constexpr (Dim == 2) {
        return detail::eigen_2x2<Real>(m);
    } else {
        return detail::eigen_general<Real, Dim>(m);
    }
}

template <typename Real, int Dim>
class BasicDensityMatrix {
    static_assert(Dim == 2 || Dim == 4, "density matrices are 2x2 or 4x4");

public:
    using Scalar = std::complex<Real>;
    using Matrix = ComplexMatrix<Real, Dim>;
    using Vector = ComplexVector<Real, Dim>;

    static constexpr int dim = Dim;

    explicit BasicDensityMatrix(const Matrix& m, const StateTolerance& tol = {}) : m_(m) { validate(tol); }

    static BasicDensityMatrix pure(const Vector& psi) {
        const Real norm = psi.norm();
        if (!(norm > Real(0))) throw InvalidStateError("pure: zero state vector");
        const Vector unit = psi / norm;
        return BasicDensityMatrix(unit * unit.adjoint());
    }

    static BasicDensityMatrix diagonal(const RealVector<Real, Dim>& populations) {
        Matrix m = Matrix::Zero();
        m.diagonal() = populations.template cast<Scalar>();
        return BasicDensityMatrix(m);
    }

    static BasicDensityMatrix maximally_mixed() { return BasicDensityMatrix(Matrix::Identity() / Real(Dim)); }

    const Matrix& matrix() const noexcept { return m_; }
    Scalar operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

private:
    void validate(const StateTolerance& tol) const {
        if (!m_.allFinite()) throw InvalidStateError("density matrix has non-finite entries");
        const Real herm_dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
        if (herm_dev > tol.hermiticity) {
            throw InvalidStateError("density matrix is not Hermitian (deviation " + std::to_string(herm_dev) + ")");
        }
        const Scalar tr = m_.trace();
        if (std::abs(tr - Scalar(1)) > tol.trace) {
            throw InvalidStateError("density matrix trace is " + std::to_string(std::real(tr)) + ", expected 1");
        }
        const auto eig = hermitian_eigen<Real, Dim>(m_);
        if (eig.values(Dim - 1) < -tol.positivity) {
            throw InvalidStateError("density matrix has negative eigenvalue " + std::to_string(eig.values(Dim - 1)));
        }
    }

    Matrix m_;
};

using DensityMatrix = BasicDensityMatrix<double, 2>;
using DensityMatrix4 = BasicDensityMatrix<double, 4>;

template <typename Real, int Dim>
class BasicKrausSet {
public:
    using Matrix = ComplexMatrix<Real, Dim>;

    explicit BasicKrausSet(std::vector<Matrix> ops, double tolerance = 1e-10) : ops_(std::move(ops)) {
        if (ops_.empty() || ops_.size() > static_cast<std::size_t>(Dim * Dim)) {
            throw InvalidStateError("KrausSet: operator count must be between 1 and dim^2");
        }
        Matrix sum = Matrix::Zero();
        for (const auto& k : ops_) sum += k.adjoint() * k;
        const Real dev = (sum - Matrix::Identity()).cwiseAbs().maxCoeff();
        if (!(dev <= tolerance)) {
            throw InvalidStateError("KrausSet: completeness violated (deviation " + std::to_string(dev) + ")");
        }
    }

    std::span<const Matrix> operators() const noexcept { return ops_; }
    std::size_t size() const noexcept { return ops_.size(); }
    const Matrix& operator[](std::size_t i) const { return ops_[i]; }

private:
    std::vector<Matrix> ops_;
};

using KrausSet = BasicKrausSet<double, 2>;
using KrausSet4 = BasicKrausSet<double, 4>;

// -x log2 x - (1-x) log2 (1-x); inputs within 1e-12 of [0,1] are clamped.
template <typename Real>
Real binary_entropy(Real x) {
    constexpr Real slack = Real(1e-12);
    if (!(x >= -slack && x <= Real(1) + slack)) {
        throw DomainError("binary_entropy: probability " + std::to_string(x) + " outside [0,1]");
    }
    x = std::clamp(x, Real(0), Real(1));
    auto term = [](Real p) { return p > Real(0) ? -p * std::log2(p) : Real(0); };
    return term(x) + term(Real(1) - x);
}

template <typename Real, int Dim>
Real spectrum_entropy(const RealVector<Real, Dim>& eigenvalues) {
    Real s = 0;
    for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
        const Real lambda = eigenvalues(k);
        if (lambda > Real(0)) s -= lambda * std::log2(lambda);
    }
    return std::max(s, Real(0));
}

template <typename Real, int Dim>
Real von_neumann_entropy(const BasicDensityMatrix<Real, Dim>& rho) {
    return spectrum_entropy<Real, Dim>(hermitian_eigen<Real, Dim>(rho.matrix()).values);
}

template <typename Real, int Dim>
BasicDensityMatrix<Real, Dim> apply_kraus(const BasicKrausSet<Real, Dim>& kraus, const BasicDensityMatrix<Real, Dim>& rho) {
    ComplexMatrix<Real, Dim> out = ComplexMatrix<Real, Dim>::Zero();
    for (const auto& k : kraus.operators()) out.noalias() += k * rho.matrix() * k.adjoint();
    return BasicDensityMatrix<Real, Dim>(out);
}

template <typename Real>
ComplexMatrix<Real, 4> kron(const ComplexMatrix<Real, 2>& a, const ComplexMatrix<Real, 2>& b) {
    ComplexMatrix<Real, 4> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.template block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

template <typename Real>
BasicDensityMatrix<Real, 4> tensor(const BasicDensityMatrix<Real, 2>& a, const BasicDensityMatrix<Real, 2>& b) {
    return BasicDensityMatrix<Real, 4>(kron<Real>(a.matrix(), b.matrix()));
}

// Lift a qubit channel to act on one factor of a two-qubit state.
template <typename Real>
BasicKrausSet<Real, 4> local_kraus(const BasicKrausSet<Real, 2>& kraus, Subsystem acts_on) {
    const ComplexMatrix<Real, 2> id = ComplexMatrix<Real, 2>::Identity();
    std::vector<ComplexMatrix<Real, 4>> ops;
    ops.reserve(kraus.size());
    for (const auto& k : kraus.operators()) {
        ops.push_back(acts_on == Subsystem::first ? kron<Real>(k, id) : kron<Real>(id, k));
    }
    return BasicKrausSet<Real, 4>(std::move(ops));
}

// Kraus set of the product channel A (x) B.
template <typename Real>
BasicKrausSet<Real, 4> product_kraus(const BasicKrausSet<Real, 2>& a, const BasicKrausSet<Real, 2>& b) {
    std::vector<ComplexMatrix<Real, 4>> ops;
    ops.reserve(a.size() * b.size());
    for (const auto& ka : a.operators())
        for (const auto& kb : b.operators()) ops.push_back(kron<Real>(ka, kb));
    return BasicKrausSet<Real, 4>(std::move(ops));
}

template <typename Real>
BasicDensityMatrix<Real, 2> partial_trace(const BasicDensityMatrix<Real, 4>& rho, Subsystem keep) {
    ComplexMatrix<Real, 2> out = ComplexMatrix<Real, 2>::Zero();
    const auto& m = rho.matrix();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                out(i, j) += keep == Subsystem::first ? m(2 * i + k, 2 * j + k) : m(2 * k + i, 2 * k + j);
            }
    return BasicDensityMatrix<Real, 2>(out);
}

// |psi> = sum_k sqrt(lambda_k) |v_k> (x) |k>, eigenvalues descending, each v_k with its
// first non-zero component real positive. Tracing out the second factor returns rho.
template <typename Real>
BasicDensityMatrix<Real, 4> purify(const BasicDensityMatrix<Real, 2>& rho) {
    const auto eig = hermitian_eigen<Real, 2>(rho.matrix());
    ComplexVector<Real, 4> psi = ComplexVector<Real, 4>::Zero();
    for (int k = 0; k < 2; ++k) {
        const Real weight = std::sqrt(std::max(eig.values(k), Real(0)));
        for (int i = 0; i < 2; ++i) psi(2 * i + k) = weight * eig.vectors(i, k);
    }
    return BasicDensityMatrix<Real, 4>::pure(psi);
}

// Environment state sum_{ij} Tr(K_i rho K_j^dag) |i><j|, padded with zeros up to EnvDim.
template <int EnvDim, typename Real, int Dim>
BasicDensityMatrix<Real, EnvDim> complementary_from_kraus(const BasicKrausSet<Real, Dim>& kraus,
                                                          const BasicDensityMatrix<Real, Dim>& rho) {
    if (kraus.size() > static_cast<std::size_t>(EnvDim)) {
        throw InvalidStateError("complementary_from_kraus: more Kraus operators than environment levels");
    }
    ComplexMatrix<Real, EnvDim> env = ComplexMatrix<Real, EnvDim>::Zero();
    for (std::size_t i = 0; i < kraus.size(); ++i)
        for (std::size_t j = 0; j < kraus.size(); ++j) {
            env(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                (kraus[i] * rho.matrix() * kraus[j].adjoint()).trace();
        }
    return BasicDensityMatrix<Real, EnvDim>(env);
}

} // namespace chancap
