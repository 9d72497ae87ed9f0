#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"

// Dissipation-asymmetry term: the value is -(i hbar / 2 pi) sum_{n>=1} J_n
// with J_n = Int_0^inf sin(n beta hbar xi) W(xi) dxi and W the kappa-weighted
// difference of ln D across the imaginary axis,
//   W(xi) = (1/2pi) Int kappa [ln D(i xi) - ln D(-i xi)] dkappa.
// For any model even in omega^2 the difference vanishes identically; for
// Drude the continuation has a real pole at xi = gamma_diss, handled by a
// symmetric window that shrinks until its contribution is resolved (the
// integrand is continuous across the pole; the window is a safeguard, not a
// regularization).

namespace casimir {

namespace {

constexpr double kTSpan = 45.0;  // e^{-45} is far below double resolution

struct AsymmetryKernel {
    const PlanarScenario& s;
    QuadratureControl inner;
    std::size_t* evals;

    // W(xi) via t = 2 gamma_gap d; vacuum gap makes t0 = 2 d xi / c.
    std::complex<double> operator()(double xi) const {
        const double d = s.separation;
        const double xi_c = xi / si::c_light;
        const double t0 = 2.0 * d * xi_c;
        const auto f = [&](double t) -> std::complex<double> {
            const double u = t / (2.0 * d);
            const double kappa = std::sqrt(std::max(0.0, u * u - xi_c * xi_c));
            // Both branches run through the identical code path so their
            // rounding matches; when eps is even in omega the operands are
            // bitwise equal and the asymmetry cancels to exactly zero.
            const OffAxisLogDispersion p = log_dispersion_off_axis(s, kappa, xi, +1);
            const OffAxisLogDispersion m = log_dispersion_off_axis(s, kappa, xi, -1);
            return t * (p.total() - m.total());
        };
        const auto q =
            integrate_adaptive<std::complex<double>>(f, t0, t0 + kTSpan, inner);
        *evals += q.evals;
        return q.value /
               (8.0 * std::numbers::pi * d * d);
    }
};

// Bound on Int_xi^inf |W| dxi', used to stop the panel walk once the rest of
// the line cannot matter: |W| <= 6.3 (t0+1) e^{-t0} / (8 pi d^2) for t0 >= 1.
double w_tail_bound(const PlanarScenario& s, double xi) {
    const double d = s.separation;
    const double t0 = 2.0 * d * xi / si::c_light;
    return (si::c_light / (2.0 * d)) * 6.3 * (t0 + 2.0) * std::exp(-t0) /
           (8.0 * std::numbers::pi * d * d);
}

}  // namespace

ExtraTermResult extra_term(const PlanarScenario& s, double tol, int n_cap) {
    validate_scenario(s);
    if (!std::holds_alternative<Vacuum>(s.gap)) {
        throw InputError("extra_term requires a vacuum gap");
    }
    const bool is_drude = std::holds_alternative<Drude>(s.halfspace);
    if (!is_drude && !std::holds_alternative<Plasma>(s.halfspace)) {
        throw InputError("extra_term requires a Drude or Plasma halfspace");
    }
    if (!(s.temperature > 0.0)) {
        throw InputError("extra_term requires T > 0");
    }
    if (n_cap < 1) {
        throw InputError("extra_term requires n_cap >= 1");
    }
    if (!(tol > 1e-14) || !(tol < 1e-1)) {
        throw InputError("tol must lie in (1e-14, 1e-1)");
    }

    const double d = s.separation;
    const double beta_hbar = si::hbar / (si::k_boltzmann * s.temperature);
    const double gamma =
        is_drude ? std::get<Drude>(s.halfspace).gamma_diss : 0.0;
    const double xi_end = 21.0 * si::c_light / d;
    const bool pole_inside = is_drude && gamma > 0.0 && gamma < 0.5 * xi_end;

    ExtraTermResult out;
    out.n_series_terms = n_cap;

    QuadratureControl inner;
    inner.rel_tol = std::max(tol / 10.0, 1e-12);
    inner.max_evals = 200'000;
    QuadratureControl outer;
    outer.rel_tol = std::max(tol / 10.0, 1e-12);
    outer.max_evals = 500'000;

    AsymmetryKernel w{s, inner, &out.quad_evals};

    std::complex<double> series_sum = 0.0;
    std::complex<double> last_term = 0.0;

    for (int n = 1; n <= n_cap; ++n) {
        const double a = static_cast<double>(n) * beta_hbar;
        const double half_period = std::numbers::pi / a;
        const auto f = [&](double xi) { return std::sin(a * xi) * w(xi); };

        std::complex<double> jn = 0.0;
        double jn_err = 0.0;

        const double delta0 = pole_inside ? gamma / 50.0 : 0.0;
        const auto integrate_panel = [&](double lo, double hi) {
            if (!(hi > lo)) {
                return;
            }
            const auto q = integrate_adaptive<std::complex<double>>(f, lo, hi, outer);
            jn += q.value;
            jn_err += q.abs_error;
            out.quad_evals += q.evals;
        };

        // Walk sine half-periods in ascending xi, skipping the pole window;
        // stop early once the analytic bound on the rest is negligible.
        double lo = 0.0;
        int j = 1;
        while (lo < xi_end) {
            double hi = std::min(static_cast<double>(j) * half_period, xi_end);
            ++j;
            if (pole_inside && hi > gamma - delta0 && lo < gamma + delta0) {
                // Panel touches the excluded window: clip around it.
                integrate_panel(lo, std::min(hi, gamma - delta0));
                integrate_panel(std::max(lo, gamma + delta0), hi);
            } else {
                integrate_panel(lo, hi);
            }
            lo = hi;
            const double t0_here = 2.0 * d * lo / si::c_light;
            if (t0_here >= 5.0) {
                const double rest = w_tail_bound(s, lo);
                if (rest <= std::max(tol * 0.03 * std::abs(jn), 1e-300)) {
                    jn_err += rest;
                    break;
                }
            }
        }

        if (pole_inside) {
            // Shrink the window symmetrically until the newly uncovered
            // strips stop contributing, then bound what is still excluded.
            double delta = delta0;
            const double strip_tol = std::max(tol * 0.01 * std::abs(jn), 1e-300);
            for (int k = 0; k < 40; ++k) {
                const double next = 0.5 * delta;
                std::complex<double> strip = 0.0;
                double strip_err = 0.0;
                for (const auto& [slo, shi] :
                     {std::pair{gamma - delta, gamma - next},
                      std::pair{gamma + next, gamma + delta}}) {
                    const auto q =
                        integrate_adaptive<std::complex<double>>(f, slo, shi, outer);
                    strip += q.value;
                    strip_err += q.abs_error;
                    out.quad_evals += q.evals;
                }
                jn += strip;
                jn_err += strip_err;
                delta = next;
                if (k >= 3 && std::abs(strip) <= strip_tol) {
                    break;
                }
            }
            const double edge =
                std::max(std::abs(f(gamma - delta)), std::abs(f(gamma + delta)));
            jn_err += 2.0 * delta * edge * 2.0;
            out.pv_windows.emplace_back(gamma - delta, gamma + delta);
        }

        series_sum += jn;
        last_term = jn;
        out.quad_error += jn_err;
    }

    const double prefactor = si::hbar / (2.0 * std::numbers::pi);
    out.value_real = prefactor * series_sum.imag();
    out.value_imag_part = -prefactor * series_sum.real();
    out.quad_error *= prefactor;
    // Observed ~n^{-3/2} decay of the terms: integral tail bound 2 N |a_N|.
    out.remainder_estimate =
        2.0 * static_cast<double>(n_cap) * prefactor * std::abs(last_term);
    return out;
}

}  // namespace casimir
