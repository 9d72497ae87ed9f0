#include "casimir/dielectric.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Validator {
    void operator()(const Vacuum&) const {}
    void operator()(const ConstantEps& m) const {
        if (!(m.eps >= 1.0)) {
            throw InputError("ConstantEps requires eps >= 1");
        }
    }
    void operator()(const IdealMetal&) const {}
    void operator()(const Plasma& m) const {
        if (!(m.omega_p > 0.0)) {
            throw InputError("Plasma requires omega_p > 0");
        }
    }
    void operator()(const Drude& m) const {
        if (!(m.omega_p > 0.0)) {
            throw InputError("Drude requires omega_p > 0");
        }
        if (!(m.gamma_diss >= 0.0)) {
            throw InputError("Drude requires gamma_diss >= 0");
        }
    }
    void operator()(const Oscillator& m) const {
        if (m.terms.empty()) {
            throw InputError("Oscillator requires at least one term");
        }
        for (const auto& t : m.terms) {
            if (!(t.strength > 0.0) || !(t.omega0 > 0.0)) {
                throw InputError("Oscillator terms require strength > 0 and omega0 > 0");
            }
        }
    }
};

}  // namespace

void validate_model(const DielectricModel& model) {
    std::visit(Validator{}, model);
}

std::string model_name(const DielectricModel& model) {
    struct Namer {
        std::string operator()(const Vacuum&) const { return "vacuum"; }
        std::string operator()(const ConstantEps&) const { return "constant"; }
        std::string operator()(const IdealMetal&) const { return "ideal"; }
        std::string operator()(const Plasma&) const { return "plasma"; }
        std::string operator()(const Drude&) const { return "drude"; }
        std::string operator()(const Oscillator&) const { return "oscillator"; }
    };
    return std::visit(Namer{}, model);
}

double eps_imag_axis(const DielectricModel& model, double xi) {
    if (!(xi >= 0.0)) {
        throw InputError("eps_imag_axis requires xi >= 0");
    }
    struct Eval {
        double xi;
        double operator()(const Vacuum&) const { return 1.0; }
        double operator()(const ConstantEps& m) const { return m.eps; }
        double operator()(const IdealMetal&) const { return kInf; }
        double operator()(const Plasma& m) const {
            if (xi == 0.0) {
                throw DivergentStaticLimit(
                    "Plasma eps(i xi) diverges at xi = 0; use static_limit");
            }
            // Written to match the Drude expression at gamma_diss = 0 bitwise,
            // so the gamma -> 0 model coincidence is exact, not approximate.
            return 1.0 + m.omega_p * m.omega_p / (xi * xi);
        }
        double operator()(const Drude& m) const {
            if (xi == 0.0) {
                throw DivergentStaticLimit(
                    "Drude eps(i xi) diverges at xi = 0; use static_limit");
            }
            return 1.0 + m.omega_p * m.omega_p / (xi * (xi + m.gamma_diss));
        }
        double operator()(const Oscillator& m) const {
            double eps = 1.0;
            for (const auto& t : m.terms) {
                const double r = xi / t.omega0;
                eps += t.strength / (1.0 + r * r);
            }
            return eps;
        }
    };
    return std::visit(Eval{xi}, model);
}

std::complex<double> eps_off_axis(const DielectricModel& model, double xi,
                                  int sign, double pole_window_rel) {
    if (!(xi > 0.0)) {
        throw InputError("eps_off_axis requires xi > 0");
    }
    if (sign != 1 && sign != -1) {
        throw InputError("eps_off_axis requires sign = +1 or -1");
    }
    if (const auto* plasma = std::get_if<Plasma>(&model)) {
        // Even in omega^2: both signs give the imaginary-axis value.
        return {1.0 + plasma->omega_p * plasma->omega_p / (xi * xi), 0.0};
    }
    if (const auto* drude = std::get_if<Drude>(&model)) {
        // omega = sign * i xi in eps(omega) = 1 - omega_p^2/(omega(omega+i gamma))
        // gives 1 + omega_p^2 / (xi (xi + sign*gamma)): real, with a pole on
        // the sign = -1 side at xi = gamma.
        const double shifted = xi + static_cast<double>(sign) * drude->gamma_diss;
        if (sign == -1 &&
            std::abs(xi - drude->gamma_diss) <= pole_window_rel * drude->gamma_diss) {
            throw PoleProximityError(
                "eps_off_axis evaluated inside the exclusion window around the "
                "continuation pole xi = gamma_diss",
                xi, drude->gamma_diss);
        }
        return {1.0 + drude->omega_p * drude->omega_p / (xi * shifted), 0.0};
    }
    throw InputError("eps_off_axis supports only Drude and Plasma models");
}

ZeroFrequencyLimit static_limit(const DielectricModel& model) {
    struct Limit {
        ZeroFrequencyLimit operator()(const Vacuum&) const { return {0.0, 0, 1.0}; }
        ZeroFrequencyLimit operator()(const ConstantEps& m) const {
            return {0.0, 0, m.eps};
        }
        ZeroFrequencyLimit operator()(const IdealMetal&) const {
            return {kInf, 3, kInf};
        }
        ZeroFrequencyLimit operator()(const Plasma& m) const {
            return {m.omega_p * m.omega_p, 2, m.omega_p * m.omega_p};
        }
        ZeroFrequencyLimit operator()(const Drude& m) const {
            if (m.gamma_diss == 0.0) {
                // Dissipationless Drude is the plasma model.
                return {m.omega_p * m.omega_p, 2, m.omega_p * m.omega_p};
            }
            // eps ~ omega_p^2/(gamma xi): order 1, and xi^2 eps -> 0.
            return {0.0, 1, m.omega_p * m.omega_p / m.gamma_diss};
        }
        ZeroFrequencyLimit operator()(const Oscillator& m) const {
            double eps0 = 1.0;
            for (const auto& t : m.terms) {
                eps0 += t.strength;
            }
            return {0.0, 0, eps0};
        }
    };
    return std::visit(Limit{}, model);
}

}  // namespace casimir
