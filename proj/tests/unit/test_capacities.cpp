#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "chancap/capacities.hpp"
#include "support/generators.hpp"

using namespace chancap;
using chancap::testing::Generator;

namespace {

DensityMatrix bloch_diagonal(double excited) { return DensityMatrix::diagonal({1.0 - excited, excited}); }

// Entropy-route oracle: best coherent (or mutual) information over diag(1-p, p), p on a 1e-4 grid.
double oracle_max(const ChannelSnapshot& snap, bool mutual, double step = 1e-4) {
    double best = -1e9;
    const int n = static_cast<int>(std::lround(1.0 / step));
    for (int k = 0; k <= n; ++k) {
        const auto rho = bloch_diagonal(static_cast<double>(k) / n);
        best = std::max(best, mutual ? mutual_information(snap, rho) : coherent_information(snap, rho));
    }
    return best;
}

ADSnapshot ad(double transmissivity) { return ADSnapshot({std::sqrt(transmissivity), 0.0}); }

} // namespace

TEST_CASE("unit interval maximizer") {
    const auto peak = maximize_on_unit_interval([](double p) { return -(p - 0.3) * (p - 0.3); });
    CHECK(std::abs(peak.argmax - 0.3) < 1e-8);
    const auto edge = maximize_on_unit_interval([](double p) { return p; });
    CHECK(edge.argmax == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(maximize_on_unit_interval([](double p) { return p; }, 2), DomainError);
}

TEST_CASE("dephasing capacities") {
    CHECK(q_dephasing(0.0).value == 1.0);
    CHECK(q_dephasing(60.0).value < 1e-12);
    CHECK(q_dephasing(0.1).value == doctest::Approx(0.56141543232584922).epsilon(1e-12));
    CHECK_FALSE(q_dephasing(0.1).optimizer.has_value());
    CHECK(q_dephasing(0.1).method == CapacityMethod::closed_form);
    CHECK(cea_dephasing(0.0).value == 2.0);
    CHECK(cea_dephasing(60.0).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cea_dephasing(0.1).value == doctest::Approx(1.5614154323258492).epsilon(1e-12));
    CHECK_THROWS_AS(q_dephasing(-0.5), DomainError);
}

TEST_CASE("amplitude damping quantum capacity") {
    const auto one = q_ad(1.0);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(*one.optimizer == doctest::Approx(0.5).epsilon(1e-6));
    const auto boundary = q_ad(0.5);
    CHECK(boundary.value == 0.0);
    CHECK(*boundary.optimizer == 0.0);
    CHECK(q_ad(0.2).value == 0.0);

    // Dense-grid goldens from an independent arbitrary-precision evaluation.
    const auto q75 = q_ad(0.75);
    CHECK(q75.value == doctest::Approx(0.41503749927884382).epsilon(1e-10));
    CHECK(*q75.optimizer == doctest::Approx(0.44444444444444444).epsilon(1e-5));
    CHECK(q75.method == CapacityMethod::grid_opt);
    CHECK(q_ad(0.6).value == doctest::Approx(0.16147986490085072).epsilon(1e-10));
    CHECK(q_ad(0.9).value == doctest::Approx(0.70941826347367196).epsilon(1e-10));

    // Continuous from above at the degradability threshold.
    CHECK(q_ad(0.5 + 1e-6).value < 1e-4);
    CHECK_THROWS_AS(q_ad(1.2), DomainError);
    CHECK_THROWS_AS(q_ad(-0.1), DomainError);
}

TEST_CASE("amplitude damping entanglement-assisted capacity") {
    CHECK(cea_ad(1.0).value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(*cea_ad(1.0).optimizer == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(cea_ad(0.0).value == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cea_ad(0.6).value == doctest::Approx(1.1596884169838712).epsilon(1e-10));
    CHECK(cea_ad(0.75).value == doctest::Approx(1.412190176470976).epsilon(1e-10));
    CHECK(cea_ad(0.9).value == doctest::Approx(1.7077002081767988).epsilon(1e-10));
}

TEST_CASE("capacity dispatch on snapshots") {
    CHECK(capacity(ChannelSnapshot(DephasingSnapshot(0.1)), Capacity::quantum).value == q_dephasing(0.1).value);
    CHECK(capacity(ChannelSnapshot(ad(0.75)), Capacity::entanglement_assisted).value ==
          cea_ad(ad(0.75).transmissivity()).value);
    CHECK(capacity(ChannelSnapshot(ad(0.5)), Capacity::quantum).value == 0.0);
}

TEST_CASE("closed form agrees with entropy route for amplitude damping") {
    for (double g : {0.6, 0.75, 0.9, 1.0}) {
        const ChannelSnapshot snap = ad(g);
        CHECK(std::abs(q_ad(g).value - oracle_max(snap, false)) < 1e-6);
        CHECK(std::abs(cea_ad(g).value - oracle_max(snap, true)) < 1e-6);
    }
}

TEST_CASE("dephasing closed form against the entropy route") {
    // The Bloch-diagonal optimum of the dephasing map with exponent Gamma is
    // 1 - H2((1 + e^{-Gamma}) / 2), so q_dephasing(Gamma) matches the entropy
    // route evaluated at exponent 2 Gamma.
    for (double gamma : {0.0, 0.05, 0.1, 0.5, 1.0, 3.0}) {
        CHECK(std::abs(q_dephasing(gamma).value - oracle_max(DephasingSnapshot(2.0 * gamma), false, 1e-2)) < 1e-6);
        const double same_exponent = oracle_max(DephasingSnapshot(gamma), false, 1e-2);
        CHECK(std::abs(same_exponent - (1.0 - binary_entropy(0.5 * (1.0 + std::exp(-gamma))))) < 1e-12);
    }
    // At equal exponents the two routes differ; record the size of the gap at Gamma = 0.1.
    const double gap = oracle_max(DephasingSnapshot(0.1), false, 1e-2) - q_dephasing(0.1).value;
    CHECK(gap == doctest::Approx(0.16255234417685).epsilon(1e-9));
}

TEST_CASE("coherent and mutual information examples") {
    Generator gen(53);
    const ChannelSnapshot identity = ad(1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rho = gen.qubit();
        CHECK(std::abs(coherent_information(identity, rho) - von_neumann_entropy(rho)) < 1e-10);
    }
    const auto mixed = DensityMatrix::maximally_mixed();
    CHECK(std::abs(coherent_information(DephasingSnapshot(0.3), mixed) -
                   (1.0 - binary_entropy(0.5 * (1.0 + std::exp(-0.3))))) < 1e-12);
    CHECK(std::abs(coherent_information(ad(0.75), bloch_diagonal(0.44444444444444444)) - q_ad(0.75).value) < 1e-6);

    CHECK(mutual_information(identity, mixed) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(mutual_information(DephasingSnapshot(60.0), mixed) == doctest::Approx(1.0).epsilon(1e-12));
    for (int trial = 0; trial < 200; ++trial) {
        const auto rho = gen.qubit();
        const ChannelSnapshot snap = trial % 2 ? ChannelSnapshot(gen.dephasing()) : ChannelSnapshot(gen.amplitude_damping());
        CHECK(std::abs(mutual_information(snap, rho) - coherent_information(snap, rho) - von_neumann_entropy(rho)) <
              1e-12);
    }
}

TEST_CASE("entropy exchange via purification") {
    Generator gen(59);
    const KrausSet identity({Matrix2c::Identity()});
    for (int trial = 0; trial < 20; ++trial) CHECK(std::abs(entropy_exchange_via_purification(identity, gen.qubit())) < 1e-9);

    const DephasingSnapshot half(std::log(2.0));
    const auto mixed = DensityMatrix::maximally_mixed();
    CHECK(std::abs(entropy_exchange_via_purification(kraus(half), mixed) -
                   von_neumann_entropy(complementary(half, mixed))) < 1e-12);

    for (int trial = 0; trial < 200; ++trial) {
        const auto rho = gen.qubit();
        const auto d = gen.dephasing();
        const auto a = gen.amplitude_damping();
        CHECK(std::abs(entropy_exchange_via_purification(kraus(d), rho) - von_neumann_entropy(complementary(d, rho))) <
              1e-8);
        CHECK(std::abs(entropy_exchange_via_purification(kraus(a), rho) - von_neumann_entropy(complementary(a, rho))) <
              1e-8);
    }
}

TEST_CASE("two-copy coherent information is additive on product inputs") {
    const ChannelSnapshot snap = DephasingSnapshot(0.1);
    for (double p : {0.1, 0.3, 0.5}) {
        const auto rho = bloch_diagonal(p);
        CHECK(std::abs(two_copy_coherent_information(snap, rho) - 2.0 * coherent_information(snap, rho)) < 1e-9);
    }
    Generator gen(61);
    for (int trial = 0; trial < 100; ++trial) {
        const auto rho = gen.qubit();
        const ChannelSnapshot s = trial % 2 ? ChannelSnapshot(gen.dephasing()) : ChannelSnapshot(gen.amplitude_damping());
        CHECK(std::abs(two_copy_coherent_information(s, rho) - 2.0 * coherent_information(s, rho)) < 1e-9);
    }
}

TEST_CASE("capacity curves") {
    const TimeGrid grid(20.0, 2001);
    const auto markov = capacity_curve(markovian_dephasing(0.1), grid, Capacity::quantum);
    for (std::size_t k = 1; k < grid.size(); ++k) CHECK(markov.values[k] < markov.values[k - 1]);

    const auto ohmic = capacity_curve(ohmic_dynamics({3.0, 0.1, 1.0}), grid, Capacity::quantum);
    const auto low = std::min_element(ohmic.values.begin(), ohmic.values.end());
    CHECK(low != ohmic.values.begin());
    CHECK(ohmic.values.back() > *low + 1e-3);
    CHECK(ohmic.values.back() > 0.5);

    const TimeGrid lambda_grid(2.0, 4001);
    const auto revived =
        capacity_curve(lorentzian_dynamics({1.0 / 0.06, 1.0, 5.0}), lambda_grid, Capacity::quantum).values;
    bool seen_zero = false, revival = false;
    for (double q : revived) {
        if (q == 0.0) seen_zero = true;
        else if (seen_zero && q > 0.0) revival = true;
    }
    CHECK(revival);
}

TEST_CASE("property: C_ea dominates Q and both are in range") {
    const TimeGrid grid(2.0, 801);
    for (const ChannelFamily& family :
         {ChannelFamily(ohmic_dynamics({3.0, 0.1, 1.0})), ChannelFamily(lorentzian_dynamics({10.0, 1.0, 0.0})),
          ChannelFamily(lorentzian_dynamics({16.7, 1.0, 6.0})), ChannelFamily(bandgap_dynamics({1.0, -1.0}))}) {
        const auto snaps = snapshots(family, grid);
        const auto q = capacity_curve(snaps, grid, Capacity::quantum).values;
        const auto c = capacity_curve(snaps, grid, Capacity::entanglement_assisted).values;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            CHECK(c[k] >= q[k] - 1e-12);
            CHECK(q[k] >= 0.0);
            CHECK(q[k] <= 1.0 + 1e-12);
            CHECK(c[k] <= 2.0 + 1e-12);
        }
    }
}

TEST_CASE("property: optimizer stays in the unit interval") {
    Generator gen(67);
    for (int trial = 0; trial < 100; ++trial) {
        const double g = gen.uniform();
        const auto q = q_ad(g), c = cea_ad(g);
        CHECK(*q.optimizer >= 0.0);
        CHECK(*q.optimizer <= 1.0);
        CHECK(*c.optimizer >= 0.0);
        CHECK(*c.optimizer <= 1.0);
        CHECK(c.value >= q.value);
    }
}
