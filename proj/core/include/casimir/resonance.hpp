#pragma once

#include <cstddef>

#include "casimir/quadrature.hpp"

namespace casimir {

// Single-resonance atomic polarizability on the imaginary axis,
// alpha(i xi) = alpha0 / (1 + (xi/omega0)^2), in Gaussian volume units [m^3].
// StaticOnly freezes alpha at its xi = 0 value.
enum class PolarizabilityMode { StaticOnly, London };

struct PolarizabilityModel {
    double alpha0 = 0.0;  // m^3, static polarizability; > 0
    double omega0 = 0.0;  // rad/s, resonance frequency; > 0 for London
    PolarizabilityMode mode = PolarizabilityMode::StaticOnly;
};

void validate_polarizability(const PolarizabilityModel& pol);

// alpha(i xi); xi >= 0. Non-increasing in xi, equals alpha0 at xi = 0.
double polarizability_imag_axis(const PolarizabilityModel& pol, double xi);

// Pair geometry plus the mode branch. sign = +1 selects the branch whose
// energy is lowered (anti-symmetric mode), -1 the raised one; results are
// odd in sign.
struct ResonanceQuery {
    double separation = 0.0;   // m
    double temperature = 0.0;  // K
    int sign = +1;
};

void validate_query(const ResonanceQuery& q);

// Retarded field susceptibility of the pair axis,
// T(d | i xi) = (2/d^3) (1 + u + u^2) e^{-u}, u = xi d / c.  [1/m^3]
double field_susceptibility(double separation, double xi);

struct ResonanceSum {
    double value = 0.0;      // J
    double abs_error = 0.0;  // truncation tail + rounding floor
    std::size_t n_terms = 0;
    double x = 0.0;  // 2 pi k_B T d / (hbar c)
};

// U(d,T) = sign * k_B T * sum'_n alpha(i xi_n) T(d | i xi_n), the primed
// Matsubara sum with half weight at n = 0. Requires T > 0.
ResonanceSum resonance_series(const ResonanceQuery& q,
                              const PolarizabilityModel& pol, double tol);

// Non-dispersive resummation of the same sum with alpha frozen at alpha0:
//   U = sign * k_B T alpha0 / d^3 * R(x),
// R(x) -> 1 as x -> infinity and R(x) -> 8/x as x -> 0. Evaluated in a
// cancellation-safe form for every x > 0.
double resonance_closed_form(const ResonanceQuery& q, double alpha0);

// Classical n = 0 term alone: sign * k_B T alpha0 / d^3.
double resonance_n0(double separation, double temperature, double alpha0,
                    int sign);

struct ResonanceIntegralResult {
    double value = 0.0;      // J
    double abs_error = 0.0;  // quadrature + domain-truncation bound
    std::size_t quad_evals = 0;
};

// Zero-temperature energy
//   U(d) = (hbar c / (pi d)) Int_0^inf du ln(1 + sign * alpha(i u c/d) K(u)),
// K(u) = (1 + u + u^2) e^{-u} / d^3. Requires London dispersion; throws
// ModeInstabilityError if the log argument reaches zero on the path.
ResonanceIntegralResult resonance_integral(double separation,
                                           const PolarizabilityModel& pol,
                                           int sign, double tol);

}  // namespace casimir
