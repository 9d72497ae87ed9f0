#include "casimir/plasma_gap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/units.hpp"

namespace casimir {

namespace {

constexpr int kMaxM = 100'000;
constexpr int kMaxN = 2'000'000;

// A(c) = Int_0^inf q ln(1 - e^{-2d sqrt(q^2+c^2)}) dq [1/m^2], exact series.
// At c = 0 the series is sum 1/m^3 and is taken from Constants instead.
struct QIntegral {
    double value;
    double bound;       // truncation bound on |dropped tail|
    std::size_t terms;  // m-terms consumed
};

QIntegral q_integral(double d, double c, double tol_abs) {
    if (c == 0.0) {
        return {-zeta3 / (4.0 * d * d), 0.0, 0};
    }
    const double r = std::exp(-2.0 * d * c);
    double sum = 0.0;
    double term = 0.0;
    for (int m = 1; m <= kMaxM; ++m) {
        const double dm = static_cast<double>(m);
        const double decay = std::pow(r, dm);
        term = decay * (c / (2.0 * d * dm) + 1.0 / (4.0 * d * d * dm * dm)) / dm;
        sum -= term;
        // Remaining tail <= term * r / (1 - r): every factor shrinks in m.
        const double tail = term * r / (1.0 - r);
        if (tail <= tol_abs) {
            return {sum, tail, static_cast<std::size_t>(m)};
        }
    }
    throw ConvergenceError("q-integral series exhausted its term budget", sum,
                           term, kMaxM);
}

}  // namespace

double pair_density(double temperature) {
    if (!(temperature > 0.0)) {
        throw InputError("pair_density requires T > 0");
    }
    const double kt = si::k_boltzmann * temperature;
    const double hbarc = si::hbar * si::c_light;
    return 3.0 * zeta3 * kt * kt * kt /
           (std::numbers::pi * std::numbers::pi * hbarc * hbarc * hbarc);
}

PlasmaGapParams make_gap_params(double separation, double temperature,
                                double kappa) {
    if (!(separation > 0.0) || !(temperature > 0.0)) {
        throw InputError("gap params require d > 0 and T > 0");
    }
    if (!(kappa >= 0.0)) {
        throw InputError("kappa must be >= 0");
    }
    PlasmaGapParams p;
    p.separation = separation;
    p.temperature = temperature;
    p.kappa_pl = kappa;
    const double kt = si::k_boltzmann * temperature;
    p.eta = 2.0 * kt / (si::hbar * si::c_light);
    p.rho = pair_density(temperature);
    p.rho_star = p.rho * si::e_squared * si::hbar * si::hbar /
                 (std::numbers::pi * si::m_electron * kt * kt);
    p.kappa_source = "supplied";
    return p;
}

PlasmaGapParams gap_params_from_pair_density(double separation,
                                             double temperature) {
    PlasmaGapParams p = make_gap_params(separation, temperature, 0.0);
    const double omega_p2 =
        4.0 * std::numbers::pi * p.rho * si::e_squared / si::m_electron;
    p.kappa_pl = std::sqrt(omega_p2) / si::c_light;
    p.kappa_source = "pair-density";
    return p;
}

EnergyResult screened_free_energy(const PlasmaGapParams& p, double tol) {
    if (!(p.separation > 0.0) || !(p.temperature > 0.0)) {
        throw InputError("screened_free_energy requires d > 0 and T > 0");
    }
    if (!(p.kappa_pl >= 0.0)) {
        throw InputError("kappa must be >= 0");
    }
    if (!(tol > 1e-14) || !(tol < 1e-2)) {
        throw InputError("tol must lie in (1e-14, 1e-2)");
    }
    const double d = p.separation;
    const double prefactor =
        si::k_boltzmann * p.temperature / std::numbers::pi;

    EnergyResult out;
    out.grid.temperature = p.temperature;

    // Scale for the per-term absolute budget: the classical n = 0 magnitude.
    const double scale =
        prefactor * (zeta3 / (4.0 * d * d)) * std::exp(-2.0 * d * p.kappa_pl) + 1e-300;
    const double m_budget = tol * scale / (20.0 * prefactor);

    int consecutive_small = 0;
    double last_mag = 0.0;
    double prev_mag = 0.0;
    double ratio = 0.0;
    bool converged = false;

    for (int n = 0; n <= kMaxN; ++n) {
        const double xi_c = matsubara_frequency(n, p.temperature) / si::c_light;
        const double cn = std::sqrt(xi_c * xi_c + p.kappa_pl * p.kappa_pl);
        const QIntegral q = q_integral(d, cn, m_budget);
        const double factor = (n == 0) ? 0.5 : 1.0;
        const double term = factor * prefactor * q.value;
        out.value += term;
        out.abs_error += factor * prefactor * q.bound;
        out.quad_evals += q.terms;
        out.n_terms_used += 1;
        out.grid.n_max = n;
        out.grid.frequencies.push_back(xi_c * si::c_light);

        const double mag = std::abs(term);
        if (n >= 1) {
            prev_mag = last_mag;
            last_mag = mag;
            if (prev_mag > 0.0) {
                ratio = std::min(last_mag / prev_mag, 0.95);
            }
            if (mag <= (tol / 10.0) * std::abs(out.value)) {
                ++consecutive_small;
            } else {
                consecutive_small = 0;
            }
            if (consecutive_small >= 3) {
                converged = true;
                break;
            }
        }
    }
    if (!converged) {
        throw ConvergenceError("Matsubara series did not converge within budget",
                               out.value, out.abs_error, out.quad_evals);
    }
    if (last_mag > 0.0 && ratio > 0.0) {
        out.grid.tail_estimate = last_mag * ratio / (1.0 - ratio);
    }
    out.abs_error += out.grid.tail_estimate;
    // Rounding floor: the series sums thousands of like-signed terms.
    out.abs_error += 1e-15 * std::abs(out.value);
    return out;
}

EnergyResult vacuum_gap_free_energy(double separation, double temperature,
                                    double tol) {
    return screened_free_energy(make_gap_params(separation, temperature, 0.0),
                                tol);
}

double screened_n0_contribution(const PlasmaGapParams& p, double tol) {
    const double prefactor =
        si::k_boltzmann * p.temperature / std::numbers::pi;
    const double scale = (zeta3 / (4.0 * p.separation * p.separation)) *
                             std::exp(-2.0 * p.separation * p.kappa_pl) +
                         1e-300;
    const QIntegral q = q_integral(p.separation, p.kappa_pl, tol * scale / 20.0);
    return 0.5 * prefactor * q.value;
}

GapExpansion vacuum_gap_expansion(double separation, double temperature) {
    if (!(separation > 0.0) || !(temperature >= 0.0)) {
        throw InputError("expansion requires d > 0 and T >= 0");
    }
    const double d = separation;
    const double kt = si::k_boltzmann * temperature;
    const double hbarc = si::hbar * si::c_light;
    const double pi2 = std::numbers::pi * std::numbers::pi;
    GapExpansion e{};
    e.term_casimir = -pi2 * hbarc / (720.0 * d * d * d);
    e.term_T3 = -zeta3 * kt * kt * kt / (2.0 * std::numbers::pi * hbarc * hbarc);
    e.term_T4 = pi2 * d * kt * kt * kt * kt / (45.0 * hbarc * hbarc * hbarc);
    return e;
}

ScreenedExpansion screened_expansion(const PlasmaGapParams& p) {
    if (!(p.separation > 0.0) || !(p.temperature > 0.0)) {
        throw InputError("screened_expansion requires d > 0 and T > 0");
    }
    const double d = p.separation;
    const double kt = si::k_boltzmann * p.temperature;
    ScreenedExpansion e{};
    // Algebraically identical to -(kT kappa/4pi)(e^{-2 kappa d}/d)(1 + 1/(2 d kappa))
    // but finite at kappa = 0, where it pins the limit -kT/(8 pi d^2).
    e.term_n0 = -(kt / (4.0 * std::numbers::pi * d)) *
                std::exp(-2.0 * p.kappa_pl * d) * (p.kappa_pl + 1.0 / (2.0 * d));
    e.term_n_pos = -(kt * kt / (si::hbar * si::c_light)) *
                   std::exp(-2.0 * p.eta * d) * std::exp(-p.rho_star * p.eta * d) /
                   d;
    return e;
}

NuclearDemoReport nuclear_demo(double d_fm, double temperature) {
    if (!(d_fm >= 0.1) || !(d_fm <= 10.0)) {
        throw InputError("nuclear_demo requires d in [0.1, 10] fm");
    }
    const double d = d_fm * si::metre_per_fm;
    NuclearDemoReport r;
    r.params = gap_params_from_pair_density(d, temperature);
    r.d_fm = d_fm;
    r.omega_p = r.params.kappa_pl * si::c_light;
    const ScreenedExpansion e = screened_expansion(r.params);
    r.term_n0 = e.term_n0;
    r.term_n_pos = e.term_n_pos;
    const Quantity patch_n0{std::abs(e.term_n0) * d * d, Dimension::Energy,
                            UnitSystem::SI};
    const Quantity patch_np{std::abs(e.term_n_pos) * d * d, Dimension::Energy,
                            UnitSystem::SI};
    r.term_n0_mev = convert(patch_n0, UnitSystem::NaturalNuclear).value;
    r.term_n_pos_mev = convert(patch_np, UnitSystem::NaturalNuclear).value;
    r.disclaimer = kDemoDisclaimer;
    return r;
}

std::string format_report(const NuclearDemoReport& r) {
    char buf[256];
    std::string s;
    const auto line = [&](const char* fmt, auto... args) {
        std::snprintf(buf, sizeof(buf), fmt, args...);
        s += buf;
        s += '\n';
    };
    line("%s", "# short-distance screened-gap demo");
    line("# %s", r.disclaimer.c_str());
    line("d                = %.6f fm", r.d_fm);
    line("T                = %.6e K", r.params.temperature);
    line("pair density     = %.6e 1/m^3  (thermal)", r.params.rho);
    line("omega_p          = %.6e rad/s  (kappa source: %s)", r.omega_p,
         r.params.kappa_source.c_str());
    line("kappa            = %.6e 1/m  (kappa d = %.4f)", r.params.kappa_pl,
         r.params.kappa_pl * r.params.separation);
    line("eta d            = %.6e", r.params.eta * r.params.separation);
    line("rho_star         = %.6e", r.params.rho_star);
    line("term_n0          = %.6e J/m^2", r.term_n0);
    line("term_n_pos       = %.6e J/m^2", r.term_n_pos);
    line("|term_n0|  d^2   = %.4f MeV", r.term_n0_mev);
    line("|term_n>0| d^2   = %.4f MeV", r.term_n_pos_mev);
    return s;
}

}  // namespace casimir
