#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

// Dielectric response models evaluated on the imaginary frequency axis,
// eps(i xi), plus the off-axis continuation eps(-i xi) needed by the
// dissipation-asymmetry diagnostic. All frequencies are angular [rad/s].

namespace casimir {

struct Vacuum {};

struct ConstantEps {
    double eps;  // >= 1
};

// Perfect reflector. A distinct variant, not a large-omega_p limit: the
// reflection coefficients are exactly (-1, +1) and eps carries an infinity
// marker, so no overflow-prone numerics are involved.
struct IdealMetal {};

struct Plasma {
    double omega_p;  // > 0
};

struct Drude {
    double omega_p;     // > 0
    double gamma_diss;  // >= 0; gamma_diss == 0 coincides with Plasma
};

struct OscillatorTerm {
    double strength;  // > 0, dimensionless
    double omega0;    // > 0
};

// Smooth non-metallic model: eps(i xi) = 1 + sum strength/(1 + xi^2/omega0^2).
struct Oscillator {
    std::vector<OscillatorTerm> terms;
};

using DielectricModel =
    std::variant<Vacuum, ConstantEps, IdealMetal, Plasma, Drude, Oscillator>;

// Throws InputError if the model parameters violate their invariants
// (omega_p > 0, gamma_diss >= 0, eps >= 1, strengths/omega0 > 0).
void validate_model(const DielectricModel& model);

std::string model_name(const DielectricModel& model);

// eps(i xi) for xi >= 0. Real and >= 1 for every variant except IdealMetal,
// which returns the +infinity marker. Throws DivergentStaticLimit for
// Drude/Plasma at xi = 0 (callers must use static_limit instead) and
// InputError for xi < 0.
double eps_imag_axis(const DielectricModel& model, double xi);

// eps at omega = sign * i*xi by direct substitution (sign = +1 reproduces
// eps_imag_axis; sign = -1 is the continuation the extra-term diagnostic
// needs). Only Drude and Plasma support this. For Drude with sign = -1 the
// continuation has a real pole at xi = gamma_diss; evaluations inside the
// relative exclusion window around it throw PoleProximityError, and
// principal-value handling is the caller's job. Result returned as complex
// for uniformity although it is real for both supported models.
std::complex<double> eps_off_axis(const DielectricModel& model, double xi,
                                  int sign, double pole_window_rel = 1e-14);

// Structured xi -> 0+ behaviour: eps(i xi) ~ lead * xi^{-order}, together
// with lim xi^2 eps(i xi), which is what the TE reflection limit consumes.
// IdealMetal reports infinite entries with order 3 (more divergent than any
// finite model).
struct ZeroFrequencyLimit {
    double xi2_eps;  // lim xi->0 xi^2 eps(i xi) [rad^2/s^2]
    int order;       // 0 finite, 1 Drude (gamma > 0), 2 Plasma, 3 IdealMetal
    double lead;     // coefficient of the leading xi^{-order} behaviour
};

ZeroFrequencyLimit static_limit(const DielectricModel& model);

}  // namespace casimir
