// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "chancap/capacities.hpp"
#include "chancap/cli/config.hpp"
#include "chancap/cli/presets.hpp"
#include "chancap/measures.hpp"

using namespace chancap;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double time_limit, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out{false, ""};
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit > 0.0 && seconds >= time_limit) {
        out.pass = false;
        out.detail += "; runtime limit " + std::to_string(time_limit) + " s exceeded";
    }
    if (!out.pass) ++failures;
    std::printf("[%s] %2d %s: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.c_str(), seconds);
    std::fflush(stdout);
}

std::string fmt(double v, const char* spec = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

ChannelFamily family_of(const cli::RunConfig& cfg, std::size_t series) {
    const auto plan = cli::make_plan(cfg);
    return cli::make_family(plan.channel, plan.series.at(series).environment);
}

// Entropy-route capacity oracle over Bloch-diagonal inputs diag(1 - p, p), p on a uniform grid.
double bloch_oracle(const ChannelSnapshot& snap, bool mutual) {
    double best = -1e9;
    constexpr int n = 20000;
    for (int k = 0; k <= n; ++k) {
        const double p = static_cast<double>(k) / n;
        const auto rho = DensityMatrix::diagonal({1.0 - p, p});
        best = std::max(best, mutual ? mutual_information(snap, rho) : coherent_information(snap, rho));
    }
    return best;
}

double late_mean(const SampledCurve& c, double from) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < c.grid.size(); ++k) {
        if (c.grid[k] >= from) {
            sum += c.values[k];
            ++count;
        }
    }
    return sum / static_cast<double>(count);
}

} // namespace

int main() {
    const double markov_rate = 1.0 / 0.06;  // gamma_M in units of lambda

    criterion(1, "Markovian AD threshold", 5.0, [&] {
        const TimeGrid grid(0.5, 5001);
        const auto q = capacity_curve(markovian_damping(markov_rate), grid, Capacity::quantum).values;
        double first_zero = -1.0, last_positive = -1.0;
        bool ok = true;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const double t = grid[k];
            if (q[k] > 0.0) last_positive = t;
            else if (first_zero < 0.0) first_zero = t;
            if (t >= 0.0416 && q[k] != 0.0) ok = false;
            if (t <= 0.0410 && !(q[k] > 0.0)) ok = false;
        }
        return Outcome{ok, "last Q>0 at lambda t = " + fmt(last_positive) + ", Q = 0 from " + fmt(first_zero) +
                               " (exact 0.06 ln2 = " + fmt(0.06 * std::log(2.0)) + ")"};
    });

    criterion(2, "N_Q threshold in R at delta = 0", 60.0, [&] {
        const TimeGrid grid(2.0, 4001);
        auto nq = [&](double r) { return measure_nq(lorentzian_dynamics({r, 1.0, 0.0}), grid).value; };
        const double at40 = nq(40.0), at46 = nq(46.0);
        double lo = 30.0, hi = 60.0;
        bool bracket = nq(lo) == 0.0 && nq(hi) > 0.0;
        while (bracket && hi - lo > 2.0) {
            const double mid = 0.5 * (lo + hi);
            (nq(mid) > 0.0 ? hi : lo) = mid;
        }
        const double crossover = 0.5 * (lo + hi);
        const bool ok = at40 == 0.0 && at46 > 0.0 && bracket && crossover > 40.0 - 1.0 && crossover < 46.0 + 1.0;
        return Outcome{ok, "N_Q(40) = " + fmt(at40) + ", N_Q(46) = " + fmt(at46) + ", crossover R = " +
                               fmt(crossover, "%.2f") + " +/- 1"};
    });

    criterion(3, "dephasing iff criterion over s", 30.0, [&] {
        const TimeGrid grid(20.0, 2001);
        std::string detail;
        bool ok = true;
        for (double s : {1.0, 1.5, 2.0, 2.5, 3.0}) {
            const double v = measure_nq(ohmic_dynamics({s, 0.1, 1.0}), grid).value;
            ok = ok && ((v > 1e-9) == (s > 2.0));
            detail += "s=" + fmt(s) + ": " + fmt(v) + (s < 3.0 ? ", " : "");
        }
        return Outcome{ok, detail};
    });

    criterion(4, "C_ea^D = 1 + Q^D", 0.0, [&] {
        std::mt19937_64 rng(4);
        std::uniform_real_distribution<double> gamma(0.0, 10.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double g = gamma(rng);
            worst = std::max(worst, std::abs(cea_dephasing(g).value - 1.0 - q_dephasing(g).value));
        }
        return Outcome{worst < 1e-12, "max deviation " + fmt(worst)};
    });

    criterion(5, "closed form vs entropy-route oracles", 0.0, [&] {
        double worst_cap = 0.0;
        for (double g : {0.6, 0.75, 0.9, 1.0}) {
            const ChannelSnapshot snap = ADSnapshot({std::sqrt(g), 0.0});
            worst_cap = std::max(worst_cap, std::abs(q_ad(g).value - bloch_oracle(snap, false)));
            worst_cap = std::max(worst_cap, std::abs(cea_ad(g).value - bloch_oracle(snap, true)));
        }
        std::mt19937_64 rng(5);
        std::normal_distribution<double> normal;
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double worst_exchange = 0.0;
        for (int i = 0; i < 200; ++i) {
            Matrix2c a;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) a(r, c) = {normal(rng), normal(rng)};
            Matrix2c m = a * a.adjoint();
            m /= m.trace();
            const DensityMatrix rho((m + m.adjoint().eval()) / 2.0);
            const DephasingSnapshot d(6.0 * unit(rng));
            const ADSnapshot ad(std::polar(std::sqrt(unit(rng)), 2.0 * M_PI * unit(rng)));
            worst_exchange = std::max(worst_exchange, std::abs(entropy_exchange_via_purification(kraus(d), rho) -
                                                               von_neumann_entropy(complementary(d, rho))));
            worst_exchange = std::max(worst_exchange, std::abs(entropy_exchange_via_purification(kraus(ad), rho) -
                                                               von_neumann_entropy(complementary(ad, rho))));
        }
        return Outcome{worst_cap < 1e-6 && worst_exchange < 1e-8,
                       "capacity gap " + fmt(worst_cap) + ", entropy-exchange gap " + fmt(worst_exchange)};
    });

    criterion(6, "data-processing monotonicity (Markovian)", 0.0, [&] {
        const TimeGrid grid(5.0, 4001);
        double worst = 0.0;
        for (const ChannelFamily& family : {ChannelFamily(markovian_dephasing(1.0)), ChannelFamily(markovian_damping(1.0))}) {
            const auto snaps = snapshots(family, grid);
            for (Capacity which : {Capacity::quantum, Capacity::entanglement_assisted}) {
                const auto v = capacity_curve(snaps, grid, which).values;
                for (std::size_t k = 1; k < v.size(); ++k) worst = std::max(worst, v[k] - v[k - 1]);
            }
        }
        return Outcome{worst <= 1e-9, "largest increase " + fmt(worst)};
    });

    criterion(7, "Volterra solver vs analytic Lorentzian", 0.0, [&] {
        double worst = 0.0, worst_ratio = 1e9;
        for (const LorentzianSpectrum spec : {LorentzianSpectrum{0.2, 1.0, 0.0}, LorentzianSpectrum{10.0, 1.0, 0.0},
                                              LorentzianSpectrum{16.7, 1.0, 3.0}}) {
            auto error = [&](std::size_t n) {
                const TimeGrid grid(2.0, n);
                const auto g = volterra_solve(lorentzian_kernel(spec), grid);
                double e = 0.0;
                for (std::size_t k = 0; k < n; ++k) e = std::max(e, std::abs(g[k] - lorentzian_amplitude(spec, grid[k])));
                return e;
            };
            const double e_h = error(2001);
            worst = std::max(worst, e_h);
            worst_ratio = std::min(worst_ratio, error(201) / error(401));
        }
        return Outcome{worst <= 1e-4 && worst_ratio >= 3.5,
                       "max node error " + fmt(worst) + " at h = 1e-3, min halving ratio " + fmt(worst_ratio, "%.3f")};
    });

    criterion(8, "Fig. 2 ordering and revivals", 0.0, [&] {
        const auto cfg = cli::preset_configs("fig2").front();
        std::vector<double> nq;
        bool revivals = true;
        for (std::size_t i = 0; i < cfg.sweep->values.size(); ++i) {
            const auto family = family_of(cfg, i);
            nq.push_back(measure_nq(family, cfg.grid).value);
            const double delta = cfg.sweep->values[i];
            if (delta == 5.0 || delta == 6.0) {
                const auto q = capacity_curve(family, cfg.grid, Capacity::quantum).values;
                bool zero_run = false, revived = false;
                for (double v : q) {
                    if (v == 0.0) zero_run = true;
                    else if (zero_run) revived = true;
                }
                revivals = revivals && revived;
            }
        }
        bool increasing = true;
        for (std::size_t i = 1; i < nq.size(); ++i) increasing = increasing && nq[i] > nq[i - 1];
        return Outcome{increasing && revivals, "N_Q(delta = 3, 5, 6, 8) = " + fmt(nq[0]) + ", " + fmt(nq[1]) + ", " +
                                                   fmt(nq[2]) + ", " + fmt(nq[3]) +
                                                   (revivals ? "; zero-then-revival in 5 and 6" : "; revival missing")};
    });

    criterion(9, "Fig. 1 residual capacity", 0.0, [&] {
        const auto cfg = cli::preset_configs("fig1").front();
        const auto spec = std::get<OhmicSpectrum>(cfg.environment);
        const double target = 1.0 - binary_entropy(0.5 * (1.0 + std::exp(-2.0 * ohmic_plateau(spec))));
        // The preset window ends at omega_c t = 20, where Gamma is still ~2.5e-4 above
        // its limit; the plateau is read off the same family on a 10x longer window.
        const auto family = family_of(cfg, 0);
        const auto window = capacity_curve(family, cfg.grid, Capacity::quantum);
        const auto long_run = capacity_curve(family, TimeGrid(10.0 * cfg.grid.t_max(), 2001), Capacity::quantum);
        const double plateau = long_run.values.back();
        const double err = std::abs(plateau - target);
        return Outcome{plateau > 0.0 && err < 1e-4,
                       "Q(200) = " + fmt(plateau, "%.8f") + ", target " + fmt(target, "%.8f") + " (|diff| " + fmt(err) +
                           "); Q(20) = " + fmt(window.values.back(), "%.8f")};
    });

    criterion(10, "Fig. 3 band-gap plateaus", 0.0, [&] {
        const auto cfg = cli::preset_configs("fig3").front();
        std::vector<double> plateau;
        for (std::size_t i = 0; i < cfg.sweep->values.size(); ++i) {
            plateau.push_back(late_mean(capacity_curve(family_of(cfg, i), cfg.grid, Capacity::quantum), 20.0));
        }
        const bool ok = plateau[0] > plateau[1] && plateau[1] >= plateau[2];
        return Outcome{ok, "mean Q^A over beta t in [20, 30] for delta_e = -4, -1, 0: " + fmt(plateau[0]) + ", " +
                               fmt(plateau[1]) + ", " + fmt(plateau[2])};
    });

    criterion(11, "measure inequivalence at R = 10", 0.0, [&] {
        const TimeGrid grid(2.0, 4001);
        const auto family = lorentzian_dynamics({10.0, 1.0, 0.0});
        const double nc = measure_nc(family, grid).value;
        const double nq = measure_nq(family, grid).value;
        const double lsf = lsf_lower_bound(family, grid).value;
        return Outcome{nc > 0.0 && nq == 0.0 && lsf > 0.0,
                       "N_C = " + fmt(nc) + ", N_Q = " + fmt(nq) + ", LSF bound = " + fmt(lsf)};
    });

    criterion(12, "additivity bookkeeping", 0.0, [&] {
        const TimeGrid grid(20.0, 2001);
        const auto dyn = ohmic_dynamics({3.0, 0.1, 1.0});
        const double one = additivity_nq_dephasing(dyn, grid, 1);
        const double two = additivity_nq_dephasing(dyn, grid, 2);
        const ChannelSnapshot snap = DephasingSnapshot(0.1);
        double worst = 0.0;
        for (double p : {0.0, 0.2, 0.5, 0.7}) {
            const auto rho = DensityMatrix::diagonal({1.0 - p, p});
            worst = std::max(worst, std::abs(two_copy_coherent_information(snap, rho) - 2.0 * coherent_information(snap, rho)));
        }
        return Outcome{two == 2.0 * one && worst < 1e-9,
                       "N_Q(n=1) = " + fmt(one) + ", N_Q(n=2) = " + fmt(two) + ", two-copy I_c gap " + fmt(worst)};
    });

    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
