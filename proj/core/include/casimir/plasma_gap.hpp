#pragma once

#include <string>

#include "casimir/lifshitz.hpp"

// Ideal-metal gap computations on series form: finite-temperature vacuum gap
// free energy through an exact exponential double series (independent of the
// engine's quadrature path, so the two serve as cross-oracles), the
// three-term small-dT expansion, the thermal pair density, plasma screening,
// and its Yukawa-form asymptotics.

namespace casimir {

struct PlasmaGapParams {
    double separation;   // d [m] > 0
    double temperature;  // T [K] > 0
    double kappa_pl;     // screening wave number omega_p / c [1/m] >= 0
    double eta;          // 2 k_B T / (hbar c) [1/m]
    double rho;          // pair density [1/m^3]
    double rho_star;     // rho e^2 hbar^2 / (pi m_e (k_B T)^2), dimensionless
    // How kappa_pl was obtained ("supplied" or "pair-density"), echoed in
    // reports so screened results are traceable to their inputs.
    std::string kappa_source;
};

// rho_-(T) + rho_+(T) = 3 zeta(3) (k_B T)^3 / (pi^2 (hbar c)^3).
double pair_density(double temperature);

// Params with kappa supplied directly (kappa >= 0).
PlasmaGapParams make_gap_params(double separation, double temperature,
                                double kappa);

// Params with kappa derived from the thermal pair density through
// omega_p^2 = 4 pi rho e^2 / m_e (Gaussian form) and kappa = omega_p / c.
PlasmaGapParams gap_params_from_pair_density(double separation,
                                             double temperature);

// F = (k_B T / pi) sum'_n Int_0^inf q ln(1 - e^{-2d sqrt(q^2 + c_n^2)}) dq
// with c_n = sqrt((xi_n/c)^2 + kappa^2), evaluated by the exact m-series of
// the q-integral: Int = -sum_m e^{-2dm c}(c/(2dm) + 1/(4 d^2 m^2)) / m.
// kappa = 0 is the vacuum gap; the n = 0, kappa = 0 entry is
// -zeta(3)/(4 d^2) exactly (zeta3 from Constants, never re-summed).
EnergyResult screened_free_energy(const PlasmaGapParams& p, double tol);

// The vacuum gap is the kappa = 0 instance of the same code path.
EnergyResult vacuum_gap_free_energy(double separation, double temperature,
                                    double tol);

// The isolated n = 0 contribution of screened_free_energy [J/m^2].
double screened_n0_contribution(const PlasmaGapParams& p, double tol);

// Small-dT expansion of the vacuum gap free energy; the three addends are
// exact through power-law order, the true remainder being exponentially
// small in 1/x.
struct GapExpansion {
    double term_casimir;  // -pi^2 hbar c / (720 d^3)
    double term_T3;       // -zeta(3) (k_B T)^3 / (2 pi (hbar c)^2)
    double term_T4;       // +pi^2 d (k_B T)^4 / (45 (hbar c)^3)
    double total() const { return term_casimir + term_T3 + term_T4; }
};
GapExpansion vacuum_gap_expansion(double separation, double temperature);

// Leading Yukawa-form terms of the screened free energy, as printed:
// term_n0 = -(k_B T / 4 pi d) e^{-2 kappa d} (kappa + 1/(2d)),
// term_n_pos = -((k_B T)^2 / hbar c) e^{-2 eta d} e^{-rho* eta d} / d.
// The kappa -> 0 limit of term_n0 is -k_B T/(8 pi d^2), the m = 1 truncation
// of the exact classical term.
struct ScreenedExpansion {
    double term_n0;
    double term_n_pos;
    double total() const { return term_n0 + term_n_pos; }
};
ScreenedExpansion screened_expansion(const PlasmaGapParams& p);

// Short-distance demonstration in MeV/fm units. Gated behind an explicit
// CLI acknowledgement; never part of acceptance checks.
struct NuclearDemoReport {
    PlasmaGapParams params;
    double d_fm;
    double omega_p;          // [rad/s]
    double term_n0;          // [J/m^2]
    double term_n_pos;       // [J/m^2]
    double term_n0_mev;      // |term_n0| d^2 in MeV (crude area-per-pair patch)
    double term_n_pos_mev;   // |term_n_pos| d^2 in MeV
    std::string disclaimer;  // fixed label, see kDemoDisclaimer
};

inline constexpr const char* kDemoDisclaimer =
    "order-of-magnitude demo: illustrative parameters, not a validated "
    "nuclear prediction";

// d_fm must lie in [0.1, 10]. The temperature-like scale is an explicit
// user input; kappa comes from the pair density path.
NuclearDemoReport nuclear_demo(double d_fm, double temperature);

std::string format_report(const NuclearDemoReport& r);

}  // namespace casimir
