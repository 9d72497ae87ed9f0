#pragma once

#include <numbers>

// Physical constants (2019 SI exact values where the SI fixes them) plus the
// mathematical constants the library treats as inputs rather than as results
// of its own numerics. Everything downstream works in SI: J, m, s, K, rad/s.

namespace casimir {

namespace si {

inline constexpr double planck_h = 6.626'070'15e-34;  // [J s], exact
inline constexpr double hbar = planck_h / (2.0 * std::numbers::pi);
inline constexpr double c_light = 299'792'458.0;      // [m/s], exact
inline constexpr double k_boltzmann = 1.380'649e-23;  // [J/K], exact
inline constexpr double m_electron = 9.109'383'7015e-31;  // [kg]
inline constexpr double alpha_fine = 7.297'352'5693e-3;

// Electrostatics is written Gaussian style (no 4 pi eps_0), so the squared
// charge carries the coupling: e^2 = alpha hbar c, in [J m].
inline constexpr double e_squared = alpha_fine * hbar * c_light;

inline constexpr double joule_per_mev = 1.602'176'634e-13;  // [J/MeV], exact
inline constexpr double metre_per_fm = 1e-15;               // [m/fm]

}  // namespace si

// Apery's constant zeta(3). Appears in closed-form classical limits; the
// numerical paths must reproduce it, never consume it.
inline constexpr double zeta3 = 1.202'056'903'159'5943;

// Bundle handed to code that wants the constants as data (tests, reports).
struct Constants {
    double hbar = si::hbar;
    double c = si::c_light;
    double k_B = si::k_boltzmann;
    double e_sq = si::e_squared;
    double m_e = si::m_electron;
    double zeta3 = ::casimir::zeta3;
};

// xi_n = 2 pi n k_B T / hbar [rad/s]. Requires n >= 0 and T > 0; xi_0 = 0.
constexpr double matsubara_frequency(int n, double temperature) {
    return 2.0 * std::numbers::pi * si::k_boltzmann * temperature *
           static_cast<double>(n) / si::hbar;
}

// Dimensionless gap scale x = 2 pi k_B T d / (hbar c): ratio of separation to
// the thermal wavelength. Classical behaviour sets in for x >> 1.
constexpr double thermal_gap_parameter(double separation, double temperature) {
    return 2.0 * std::numbers::pi * si::k_boltzmann * temperature * separation /
           (si::hbar * si::c_light);
}

}  // namespace casimir
