#include "casimir/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

void check_tol(double tol) {
    if (!(tol > 1e-14) || !(tol < 1e-2)) {
        throw InputError("tol must lie in (1e-14, 1e-2)");
    }
}

QuadratureControl kappa_control(const EngineOptions& opt) {
    QuadratureControl ctl;
    ctl.rel_tol = std::max(opt.tol / 30.0, 2e-14);
    ctl.abs_tol = 0.0;
    ctl.max_evals = opt.max_quad_evals_per_term;
    return ctl;
}

}  // namespace

EnergyResult free_energy(const PlanarScenario& s, const EngineOptions& opt) {
    validate_scenario(s);
    check_tol(opt.tol);
    if (!(s.temperature > 0.0)) {
        throw InputError("free_energy requires T > 0; use the zero-temperature path");
    }
    const double weight = si::k_boltzmann * s.temperature / (2.0 * std::numbers::pi);
    const QuadratureControl qctl = kappa_control(opt);

    EnergyResult out;
    out.grid.temperature = s.temperature;

    const auto accumulate = [&](int n, const KappaIntegral& ki, double factor) {
        const double tm = factor * weight * ki.tm;
        const double te = factor * weight * ki.te;
        out.value += tm + te;
        out.abs_error += factor * weight * ki.abs_error;
        out.quad_evals += ki.evals;
        out.n_terms_used += 1;
        out.grid.frequencies.push_back(matsubara_frequency(n, s.temperature));
        out.grid.n_max = n;
        if (opt.keep_breakdown) {
            out.breakdown.push_back({n, out.grid.frequencies.back(), tm, te});
        }
    };

    accumulate(0, kappa_log_dispersion_integral(s, 0.0, qctl), 0.5);

    // Terms decay like e^{-2 xi_n d / c}; stop after three consecutive terms
    // fall below tol/10 of the accumulated value, then bound the dropped
    // tail geometrically from the observed decay ratio.
    const int batch = std::max(1, opt.threads);
    int consecutive_small = 0;
    double prev_mag = 0.0;
    double last_mag = 0.0;
    double decay_ratio = 0.0;
    bool converged = false;

    for (int n = 1; n <= opt.max_terms && !converged; n += batch) {
        const int hi = std::min(n + batch - 1, opt.max_terms);
        std::vector<KappaIntegral> results(static_cast<std::size_t>(hi - n + 1));
        if (batch == 1) {
            results[0] =
                kappa_log_dispersion_integral(s, matsubara_frequency(n, s.temperature), qctl);
        } else {
            std::vector<std::future<KappaIntegral>> futures;
            futures.reserve(results.size());
            for (int k = n; k <= hi; ++k) {
                futures.push_back(std::async(std::launch::async, [&, k] {
                    return kappa_log_dispersion_integral(
                        s, matsubara_frequency(k, s.temperature), qctl);
                }));
            }
            for (std::size_t i = 0; i < futures.size(); ++i) {
                results[i] = futures[i].get();
            }
        }
        for (int k = n; k <= hi; ++k) {
            const KappaIntegral& ki = results[static_cast<std::size_t>(k - n)];
            const double mag = weight * std::abs(ki.tm + ki.te);
            accumulate(k, ki, 1.0);
            prev_mag = last_mag;
            last_mag = mag;
            if (prev_mag > 0.0) {
                decay_ratio = std::min(last_mag / prev_mag, 0.95);
            }
            if (mag <= (opt.tol / 10.0) * std::abs(out.value)) {
                ++consecutive_small;
            } else {
                consecutive_small = 0;
            }
            if (consecutive_small >= 3) {
                converged = true;
                break;  // remaining batch members are discarded unaccumulated
            }
        }
    }

    if (!converged) {
        throw ConvergenceError("Matsubara sum did not converge within max_terms",
                               out.value, out.abs_error, out.quad_evals);
    }

    if (last_mag > 0.0 && decay_ratio > 0.0) {
        out.grid.tail_estimate = last_mag * decay_ratio / (1.0 - decay_ratio);
    }
    out.abs_error += out.grid.tail_estimate;
    return out;
}

EnergyResult free_energy_zero_temperature(const PlanarScenario& s,
                                          const EngineOptions& opt) {
    validate_scenario(s);
    check_tol(opt.tol);

    // Substituting v = 2 d xi / c makes the outer decay scale O(1):
    // F = (hbar c / (8 pi^2 d)) Int_0^inf I(v) dv with I the kappa integral.
    const double d = s.separation;
    const double outer_scale =
        si::hbar * si::c_light / (8.0 * std::numbers::pi * std::numbers::pi * d);
    const double v_max = 45.0;

    QuadratureControl inner = kappa_control(opt);
    QuadratureControl outer;
    outer.rel_tol = std::max(opt.tol / 10.0, 1e-13);
    outer.max_evals = opt.max_quad_evals_per_term;

    EnergyResult out;
    out.grid.temperature = 0.0;

    double split[2] = {0.0, 0.0};  // tm, te
    for (int pol = 0; pol < 2; ++pol) {
        const auto integrand = [&](double v) {
            const double xi = v * si::c_light / (2.0 * d);
            const KappaIntegral ki = kappa_log_dispersion_integral(s, xi, inner);
            out.quad_evals += ki.evals;
            return pol == 0 ? ki.tm : ki.te;
        };
        const QuadratureOutcome<double> q =
            integrate_adaptive<double>(integrand, 0.0, v_max, outer);
        split[pol] = outer_scale * q.value;
        out.abs_error += outer_scale * q.abs_error;
    }
    out.value = split[0] + split[1];
    // Inner-quadrature inaccuracy enters the outer integrand multiplicatively.
    out.abs_error += inner.rel_tol * std::abs(out.value);
    // Outer truncation: |I(v)| <= (v + 1) e^{-v} / d^2 past the cutoff.
    out.abs_error += outer_scale * 2.0 * (v_max + 1.0) * std::exp(-v_max) / (d * d);
    out.n_terms_used = 0;
    out.breakdown.push_back({-1, 0.0, split[0], split[1]});
    return out;
}

double drude_plasma_ratio(double separation, double temperature, double omega_p,
                          double gamma_diss, double tol) {
    EngineOptions opt;
    opt.tol = tol;
    opt.keep_breakdown = false;
    const PlanarScenario drude{Drude{omega_p, gamma_diss}, Vacuum{}, separation,
                               temperature};
    const PlanarScenario plasma{Plasma{omega_p}, Vacuum{}, separation, temperature};
    const double f_drude = free_energy(drude, opt).value;
    const double f_plasma = free_energy(plasma, opt).value;
    return f_drude / f_plasma;
}

}  // namespace casimir
