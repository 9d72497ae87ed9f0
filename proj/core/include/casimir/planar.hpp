#pragma once

#include <complex>
#include <cstddef>

#include "casimir/dielectric.hpp"
#include "casimir/quadrature.hpp"

// Electromagnetic kernel for the symmetric halfspace | gap | halfspace stack:
// transverse decay rates, Fresnel reflection amplitudes on the imaginary
// axis, and the mode dispersion function D whose log the engine integrates.

namespace casimir {

struct PlanarScenario {
    DielectricModel halfspace;  // material on both sides
    DielectricModel gap;        // film material (never IdealMetal)
    double separation;          // d [m] > 0
    double temperature;         // T [K] >= 0
};

// Throws InputError on invalid geometry or model parameters.
void validate_scenario(const PlanarScenario& s);

// gamma_i = sqrt(kappa^2 + eps_i(i xi) xi^2 / c^2), principal nonnegative
// root [1/m]. IdealMetal halfspace reports the +infinity marker. Throws
// DivergentStaticLimit when a metal-like material is evaluated at xi = 0;
// use the *_static operations for the n = 0 limit instead.
struct Gammas {
    double halfspace;
    double gap;
};
Gammas decay_rates(const PlanarScenario& s, double kappa, double xi);

// Fresnel amplitudes at one gap|halfspace interface, imaginary axis:
// te = (gamma_gap - gamma_halfspace) / (gamma_gap + gamma_halfspace),
// tm = (eps_hs gamma_gap - eps_gap gamma_halfspace) / (same with +).
// Always within [-1, 1]; IdealMetal gives exactly (-1, +1).
struct Reflection {
    double te;
    double tm;
};
Reflection reflection(const PlanarScenario& s, double kappa, double xi);

// The xi -> 0+ limit of reflection (never a raw eps(0) substitution). This
// is where Drude and Plasma part ways: Drude (gamma > 0) has te == 0
// exactly, Plasma keeps a finite te.
Reflection reflection_static(const PlanarScenario& s, double kappa);

// Convenience bundle of everything evaluated at one (kappa, xi) node.
struct KernelPoint {
    double kappa;
    double xi;
    double gamma_halfspace;
    double gamma_gap;
    double delta_te;
    double delta_tm;
};
KernelPoint kernel_point(const PlanarScenario& s, double kappa, double xi);

// ln D per polarization: ln(1 - delta^2 e^{-2 gamma_gap d}), each <= 0.
// xi = 0 is served by the static-limit kernel automatically. (kappa, xi) =
// (0, 0) is rejected for IdealMetal, where D = 0 there.
struct LogDispersion {
    double te;
    double tm;
    double total() const { return te + tm; }
};
LogDispersion log_dispersion(const PlanarScenario& s, double kappa, double xi);
LogDispersion log_dispersion_static(const PlanarScenario& s, double kappa);

// ln D continued to omega = sign * i xi (sign = -1 is the interesting side).
// Requires a vacuum gap and a Drude or Plasma halfspace. The branch is the
// one continuous in xi from the ln D -> 0 anchor at xi -> infinity; for this
// material family |delta^2 e^{-2 gamma_gap d}| < 1 holds on the whole line,
// which makes the principal log that branch. The guard enforces the bound
// and throws BranchTrackingError if it is ever violated.
struct OffAxisLogDispersion {
    std::complex<double> te;
    std::complex<double> tm;
    std::complex<double> total() const { return te + tm; }
};
OffAxisLogDispersion log_dispersion_off_axis(const PlanarScenario& s,
                                             double kappa, double xi, int sign);

// Int_0^inf kappa ln D(i xi; kappa) dkappa per polarization [1/m^2],
// unweighted (the engine applies k_B T / 2 pi factors). Computed through the
// substitution t = 2 gamma_gap d, which turns the tail into a plain e^{-t}
// decay with an explicit truncation bound included in abs_error. xi = 0 uses
// the static-limit kernel.
struct KappaIntegral {
    double tm = 0.0;
    double te = 0.0;
    double abs_error = 0.0;
    std::size_t evals = 0;
    double total() const { return tm + te; }
};
KappaIntegral kappa_log_dispersion_integral(const PlanarScenario& s, double xi,
                                            const QuadratureControl& ctl);

}  // namespace casimir
