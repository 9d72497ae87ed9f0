#include "casimir/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/plasma_gap.hpp"
#include "casimir/resonance.hpp"
#include "casimir/sweep.hpp"

namespace casimir {

namespace {

template <typename... Args>
std::string fmt(const char* f, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), f, args...);
    return std::string(buf);
}

double rel_dev(double value, double target) {
    return std::abs(value / target - 1.0);
}

// Temperature that places the thermal gap parameter 2 pi k_B T d / (hbar c)
// at a requested x for the given separation.
double temperature_for_x(double x, double d) {
    return x * si::hbar * si::c_light /
           (2.0 * std::numbers::pi * si::k_boltzmann * d);
}

EngineOptions quiet(double tol) {
    EngineOptions o;
    o.tol = tol;
    o.keep_breakdown = false;
    return o;
}

double classical_ideal(double d, double t) {
    return -zeta3 * si::k_boltzmann * t /
           (8.0 * std::numbers::pi * d * d);
}

CheckResult check_zero_t_ideal() {
    CheckResult c{1, "zero-temperature ideal-metal plates vs the inverse-cube law",
                  false, {}};
    const double d = 1e-6;
    const auto start = std::chrono::steady_clock::now();
    const EnergyResult r = free_energy_zero_temperature(
        PlanarScenario{IdealMetal{}, Vacuum{}, d, 0.0}, quiet(1e-6));
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const double target = -std::numbers::pi * std::numbers::pi * si::hbar *
                          si::c_light / (720.0 * d * d * d);
    const double dev = rel_dev(r.value, target);
    c.pass = dev <= 1e-3 && secs < 5.0;
    c.detail = fmt("value=%.6e J/m^2 target=%.6e rel_dev=%.1e elapsed=%.2fs",
                   r.value, target, dev, secs);
    return c;
}

CheckResult check_classical_limit() {
    CheckResult c{2, "high-temperature ideal-metal plates vs the classical n=0 value",
                  false, {}};
    const double d = 1e-6;
    const double t = temperature_for_x(25.0, d);
    const EnergyResult r =
        free_energy(PlanarScenario{IdealMetal{}, Vacuum{}, d, t}, quiet(1e-8));
    const double ratio = r.value / classical_ideal(d, t);
    c.pass = ratio >= 0.99 && ratio <= 1.01;
    c.detail = fmt("x=25 ratio=%.6f (required in [0.99, 1.01])", ratio);
    return c;
}

CheckResult check_factor_of_two() {
    CheckResult c{3, "dissipation halves the classical force: Drude/Plasma ratio",
                  false, {}};
    const double d = 1e-6;
    const double t = temperature_for_x(20.0, d);
    const double omega_p = 200.0 * si::c_light / d;  // omega_p d / c = 200
    const double gamma = omega_p / 100.0;
    const EngineOptions opt = quiet(1e-8);
    const double f_drude =
        free_energy(PlanarScenario{Drude{omega_p, gamma}, Vacuum{}, d, t}, opt)
            .value;
    const double f_plasma =
        free_energy(PlanarScenario{Plasma{omega_p}, Vacuum{}, d, t}, opt).value;
    const double ratio = f_drude / f_plasma;
    const double plasma_dev = rel_dev(f_plasma, classical_ideal(d, t));
    c.pass = ratio >= 0.50 && ratio <= 0.55 && plasma_dev <= 0.02;
    c.detail = fmt("ratio=%.5f (in [0.50, 0.55]) plasma_vs_classical_dev=%.4f "
                   "(<= 0.02)",
                   ratio, plasma_dev);
    return c;
}

CheckResult check_even_eps_asymmetry_zero() {
    CheckResult c{4, "dissipationless metal has no dispersion asymmetry", false,
                  {}};
    const double omega_p = 1.37e16;
    double worst = 0.0;
    bool ok = true;
    for (const double d : {5e-7, 1e-6}) {
        for (const double t : {300.0, 600.0}) {
            const PlanarScenario s{Plasma{omega_p}, Vacuum{}, d, t};
            const ExtraTermResult et = extra_term(s, 1e-6, 4);
            const double f = free_energy(s, quiet(1e-8)).value;
            const double rel = std::abs(et.value_real) / std::abs(f);
            worst = std::max(worst, rel);
            ok = ok && rel <= 1e-10;
        }
    }
    c.pass = ok;
    c.detail = fmt("max |asymmetry|/|F| over 2x2 grid = %.2e (<= 1e-10)", worst);
    return c;
}

CheckResult check_dual_path_ideal() {
    CheckResult c{5, "ideal-metal engine agrees with the exact vacuum-gap series",
                  false, {}};
    const double d_ref = 1e-6;
    double worst = 0.0;
    bool ok = true;
    for (const double d : {5e-7, 1e-6, 2e-6}) {
        for (const double x_ref : {0.2, 2.0, 10.0}) {
            const double t = temperature_for_x(x_ref, d_ref);
            const EnergyResult engine = free_energy(
                PlanarScenario{IdealMetal{}, Vacuum{}, d, t}, quiet(1e-8));
            const EnergyResult series = vacuum_gap_free_energy(d, t, 1e-10);
            const double combined = engine.abs_error + series.abs_error;
            const double diff = std::abs(engine.value - series.value);
            const double ratio = diff / combined;
            worst = std::max(worst, ratio);
            ok = ok && diff <= 2.0 * combined;
        }
    }
    c.pass = ok;
    c.detail =
        fmt("max |diff|/combined_error over 3x3 grid = %.3f (<= 2)", worst);
    return c;
}

CheckResult check_expansion() {
    CheckResult c{6, "three-term small-gap expansion tracks the exact series",
                  false, {}};
    const double d = 1e-6;
    bool ok = true;
    std::string devs;
    double prev_dev = 0.0;
    double prev_floor = 0.0;
    bool have_prev = false;
    for (const double x : {0.5, 0.4, 0.3, 0.2, 0.1}) {
        const double t = temperature_for_x(x, d);
        const EnergyResult exact = vacuum_gap_free_energy(d, t, 1e-12);
        const double expansion = vacuum_gap_expansion(d, t).total();
        const double dev = std::abs(expansion - exact.value) /
                           std::abs(exact.value);
        // Both paths agree far below their own rounding here, so require
        // monotone decrease only beyond the reported resolution.
        const double floor = exact.abs_error / std::abs(exact.value) + 1e-15;
        if (x == 0.5) {
            ok = ok && dev <= 0.02;
        }
        if (have_prev) {
            ok = ok && dev <= prev_dev + prev_floor + floor;
        }
        prev_dev = dev;
        prev_floor = floor;
        have_prev = true;
        devs += fmt(" %.1e", dev);
    }
    c.pass = ok;
    c.detail = "rel_dev at x=0.5..0.1:" + devs +
               " (<= 2e-2 at 0.5, non-increasing within resolution)";
    return c;
}

CheckResult check_screened_n0() {
    CheckResult c{7, "screened n=0 term matches its closed form", false, {}};
    const double d = 1e-6;
    const double t = 300.0;
    double worst = 0.0;
    bool ok = true;
    for (const double kd : {5.0, 8.0, 12.0}) {
        const PlasmaGapParams p = make_gap_params(d, t, kd / d);
        const double exact = screened_n0_contribution(p, 1e-10);
        const double closed = screened_expansion(p).term_n0;
        const double dev = rel_dev(exact, closed);
        worst = std::max(worst, dev);
        ok = ok && dev <= 0.01;
    }
    c.pass = ok;
    c.detail = fmt("max rel_dev over kappa*d in {5, 8, 12} = %.2e (<= 1e-2)",
                   worst);
    return c;
}

CheckResult check_pair_density() {
    CheckResult c{8, "thermal pair density value and cubic scaling", false, {}};
    const double rho10 = pair_density(1e10);
    const double dev = rel_dev(rho10, 3.04e37);
    const double cubic = rel_dev(pair_density(2e10) / rho10, 8.0);
    c.pass = dev <= 5e-3 && cubic <= 1e-12;
    c.detail = fmt("rho(1e10 K)=%.4e m^-3 dev_vs_3.04e37=%.2e cubic_dev=%.1e",
                   rho10, dev, cubic);
    return c;
}

CheckResult check_resonance_identity() {
    CheckResult c{9, "resonance series resums to the closed form and its limits",
                  false, {}};
    const double d = 1e-7;
    const PolarizabilityModel pol{1e-30, 0.0, PolarizabilityMode::StaticOnly};
    bool ok = true;
    double worst = 0.0;
    for (const double x : {0.01, 0.1, 1.0, 10.0}) {
        const ResonanceQuery q{d, temperature_for_x(x, d), +1};
        const double series = resonance_series(q, pol, 1e-13).value;
        const double closed = resonance_closed_form(q, pol.alpha0);
        const double dev = rel_dev(series, closed);
        worst = std::max(worst, dev);
        ok = ok && dev <= 1e-10;
    }

    const double x_big = 30.0;
    const ResonanceQuery q_big{d, temperature_for_x(x_big, d), +1};
    const double n0 = resonance_n0(d, q_big.temperature, pol.alpha0, +1);
    const double big_dev = rel_dev(resonance_closed_form(q_big, pol.alpha0), n0);
    const double big_allow = 4.0 * x_big * x_big * std::exp(-x_big);
    ok = ok && big_dev <= big_allow;

    const double x_small = 1e-3;
    const ResonanceQuery q_small{d, temperature_for_x(x_small, d), +1};
    const double retarded = (4.0 / std::numbers::pi) * si::hbar * si::c_light *
                            pol.alpha0 / (d * d * d * d);
    const double small_dev =
        rel_dev(resonance_closed_form(q_small, pol.alpha0), retarded);
    ok = ok && small_dev <= 5e-3;

    c.pass = ok;
    c.detail = fmt("max series/closed dev=%.1e (<=1e-10); n0 dev at x=30: "
                   "%.1e (<=%.1e); retarded dev at x=1e-3: %.1e (<=5e-3)",
                   worst, big_dev, big_allow, small_dev);
    return c;
}

CheckResult check_trivial_zero_and_monotone() {
    CheckResult c{10, "equal materials give exactly zero; energy decays with distance",
                  false, {}};
    bool ok = true;
    std::string note;

    const Oscillator osc{{OscillatorTerm{1.5, 1.2e16}}};
    const std::vector<std::pair<DielectricModel, DielectricModel>> equal_pairs =
        {{Vacuum{}, Vacuum{}},
         {ConstantEps{2.5}, ConstantEps{2.5}},
         {Drude{1.37e16, 1.37e14}, Drude{1.37e16, 1.37e14}},
         {Plasma{1.37e16}, Plasma{1.37e16}},
         {osc, osc}};
    for (const auto& [hs, gap] : equal_pairs) {
        const double v =
            free_energy(PlanarScenario{hs, gap, 1e-6, 300.0}, quiet(1e-8)).value;
        if (v != 0.0) {
            ok = false;
            note += fmt(" nonzero(%s|%s)=%.2e", model_name(hs).c_str(),
                        model_name(gap).c_str(), v);
        }
    }
    const std::vector<std::pair<DielectricModel, DielectricModel>> zero_t_pairs =
        {{Vacuum{}, Vacuum{}}, {ConstantEps{2.5}, ConstantEps{2.5}}};
    for (const auto& [hs, gap] : zero_t_pairs) {
        const double v =
            free_energy_zero_temperature(PlanarScenario{hs, gap, 1e-6, 0.0},
                                         quiet(1e-6))
                .value;
        if (v != 0.0) {
            ok = false;
            note += fmt(" nonzero_zero_T=%.2e", v);
        }
    }

    const std::vector<DielectricModel> halfspaces = {
        IdealMetal{}, Drude{1.37e16, 4.8e13}, Plasma{1.37e16}, ConstantEps{4.0},
        osc};
    for (const DielectricModel& hs : halfspaces) {
        const double near =
            free_energy(PlanarScenario{hs, Vacuum{}, 1e-6, 300.0}, quiet(1e-8))
                .value;
        const double far =
            free_energy(PlanarScenario{hs, Vacuum{}, 1e-5, 300.0}, quiet(1e-8))
                .value;
        if (!(std::abs(far) < std::abs(near))) {
            ok = false;
            note += fmt(" not_decaying(%s)", model_name(hs).c_str());
        }
    }

    c.pass = ok;
    c.detail = ok ? "all equal-material energies bitwise zero; |F| strictly "
                    "decreasing at 10x distance"
                  : "violations:" + note;
    return c;
}

CheckResult check_sweep_determinism() {
    CheckResult c{11, "sweep output is byte-identical across thread counts",
                  false, {}};
    SweepRequest req;
    req.halfspace = IdealMetal{};
    req.gap = Vacuum{};
    req.temperature = 300.0;
    req.spec = SweepSpec{"d", 1e-6, 1e-5, 8, true};
    req.tol = 1e-8;
    req.threads = 1;
    const std::string csv1 = render_sweep_csv(run_sweep(req));
    req.threads = 8;
    const std::string csv8 = render_sweep_csv(run_sweep(req));
    c.pass = !csv1.empty() && csv1 == csv8;
    c.detail = fmt("%zu bytes, 1-thread vs 8-thread runs %s", csv1.size(),
                   c.pass ? "identical" : "DIFFER");
    return c;
}

CheckResult guarded(const std::function<CheckResult()>& check, int id,
                    const char* name) {
    try {
        return check();
    } catch (const std::exception& e) {
        return CheckResult{id, name, false,
                           std::string("exception: ") + e.what()};
    }
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks() {
    std::vector<CheckResult> out;
    out.push_back(guarded(check_zero_t_ideal, 1, "zero-temperature ideal plates"));
    out.push_back(guarded(check_classical_limit, 2, "classical limit"));
    out.push_back(guarded(check_factor_of_two, 3, "Drude/Plasma factor of two"));
    out.push_back(guarded(check_even_eps_asymmetry_zero, 4,
                          "even-eps asymmetry vanishes"));
    out.push_back(guarded(check_dual_path_ideal, 5, "dual-path ideal metal"));
    out.push_back(guarded(check_expansion, 6, "small-gap expansion"));
    out.push_back(guarded(check_screened_n0, 7, "screened n=0 closed form"));
    out.push_back(guarded(check_pair_density, 8, "pair density"));
    out.push_back(guarded(check_resonance_identity, 9, "resonance resummation"));
    out.push_back(guarded(check_trivial_zero_and_monotone, 10,
                          "trivial zeros and distance decay"));
    out.push_back(guarded(check_sweep_determinism, 11, "sweep determinism"));
    return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

std::string render_report(const std::vector<CheckResult>& checks) {
    std::string s;
    for (const CheckResult& c : checks) {
        s += fmt("%s %2d %s | %s\n", c.pass ? "PASS" : "FAIL", c.id,
                 c.name.c_str(), c.detail.c_str());
    }
    return s;
}

}  // namespace casimir
