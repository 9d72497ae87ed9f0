#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "casimir/planar.hpp"

// Free energy per unit area of the planar stack: primed Matsubara sum with
// error-controlled kappa quadrature, the separate zero-temperature double
// integral, and the sine-transform dissipation-asymmetry term.

namespace casimir {

struct EngineOptions {
    double tol = 1e-8;  // relative target, must lie in (1e-14, 1e-2)
    int max_terms = 200'000;
    std::size_t max_quad_evals_per_term = 2'000'000;
    // Per-frequency work may fan out over this many threads. Results are
    // reduced in ascending-n order, so the value, error, and diagnostics are
    // bit-identical for any thread count.
    int threads = 1;
    bool keep_breakdown = true;
};

// Weighted contribution of one Matsubara term, by polarization [J/m^2].
// Zero-temperature results carry one synthetic entry with n = -1 holding the
// xi-integrated polarization split.
struct TermBreakdown {
    int n;
    double xi;
    double tm;
    double te;
};

struct MatsubaraGrid {
    double temperature = 0.0;
    int n_max = 0;
    double tail_estimate = 0.0;  // bound on the dropped n > n_max part [J/m^2]
    std::vector<double> frequencies;
};

struct EnergyResult {
    double value = 0.0;      // [J/m^2]
    double abs_error = 0.0;  // includes truncation tail + quadrature bounds
    int n_terms_used = 0;
    std::size_t quad_evals = 0;
    std::vector<TermBreakdown> breakdown;
    MatsubaraGrid grid;
};

// F(d, T) = (k_B T / 2 pi) sum'_n Int_0^inf kappa ln D(i xi_n) dkappa,
// n = 0 at half weight via the static-limit kernel. Requires T > 0.
EnergyResult free_energy(const PlanarScenario& s, const EngineOptions& opt = {});

// F(d, 0) = (hbar / 4 pi^2) Int_0^inf dxi Int_0^inf kappa ln D dkappa.
// A separate double-quadrature path, not a small-T Matsubara sum.
EnergyResult free_energy_zero_temperature(const PlanarScenario& s,
                                          const EngineOptions& opt = {});

// free_energy(Drude) / free_energy(Plasma) at identical (d, T, omega_p).
// Approaches 1/2 from above when both omega_p d / c and the thermal gap
// parameter are large. The gamma_diss -> 0+ limit is discontinuous at fixed
// T > 0: any positive dissipation zeroes the static TE term, so the ratio
// stays below 1, while gamma_diss == 0 follows the Plasma path identically
// and gives exactly 1.
double drude_plasma_ratio(double separation, double temperature, double omega_p,
                          double gamma_diss, double tol);

// Dissipation-asymmetry series: the sine-transform contribution that
// vanishes identically when eps is even in omega (Plasma) and is finite for
// Drude. Summed to exactly n_cap terms; convergence in n is slow, so the
// remainder estimate derived from the final term is an essential part of
// the result, not a formality.
struct ExtraTermResult {
    double value_real = 0.0;       // [J/m^2]
    double value_imag_part = 0.0;  // diagnostic residual [J/m^2]
    int n_series_terms = 0;
    double remainder_estimate = 0.0;  // [J/m^2]
    double quad_error = 0.0;          // accumulated quadrature bounds [J/m^2]
    // Final principal-value exclusion window around xi = gamma per series
    // term (empty when the continuation has no real pole).
    std::vector<std::pair<double, double>> pv_windows;
    std::size_t quad_evals = 0;
};

// Requires a Drude or Plasma halfspace, vacuum gap, T > 0, n_cap >= 1.
ExtraTermResult extra_term(const PlanarScenario& s, double tol, int n_cap);

}  // namespace casimir
