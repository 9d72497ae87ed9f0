#include "casimir/planar.hpp"

#include <cmath>
#include <limits>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_ideal(const DielectricModel& m) {
    return std::holds_alternative<IdealMetal>(m);
}

// ln(1 - w) for complex |w| < 1; series below 1e-4 keeps full precision.
std::complex<double> log_one_minus(std::complex<double> w) {
    if (std::abs(w) < 1e-4) {
        std::complex<double> sum = 0.0;
        std::complex<double> pow = w;
        for (int k = 1; k <= 8; ++k) {
            sum -= pow / static_cast<double>(k);
            pow *= w;
        }
        return sum;
    }
    return std::log(1.0 - w);
}

// Static-limit reflection amplitudes as a function of the gap decay rate
// u = gamma_gap0 > 0, from the structured xi -> 0 data of both materials.
Reflection static_reflection_at(const ZeroFrequencyLimit& hs,
                                const ZeroFrequencyLimit& gap, double u,
                                double gamma_hs0) {
    Reflection r{};
    if (hs.order == 3) {  // IdealMetal halfspace
        return {-1.0, 1.0};
    }
    r.te = (u - gamma_hs0) / (u + gamma_hs0);
    if (hs.order > gap.order) {
        r.tm = 1.0;
    } else if (hs.order < gap.order) {
        r.tm = -1.0;
    } else {
        const double lead_ratio = hs.lead / gap.lead;
        r.tm = (lead_ratio * u - gamma_hs0) / (lead_ratio * u + gamma_hs0);
    }
    return r;
}

struct TailBound {
    double cutoff;
    double bound;  // per polarization, on Int_{cutoff}^inf |t ln D| dt
};

// |t ln(1 - delta^2 e^{-t})| <= 2 t e^{-t} once e^{-t} <= 1/2, so the tail
// beyond T is bounded by 2 (T + 1) e^{-T}.
TailBound tail_past(double t0) {
    const double cutoff = t0 + 45.0;
    return {cutoff, 2.0 * (cutoff + 1.0) * std::exp(-cutoff)};
}

}  // namespace

void validate_scenario(const PlanarScenario& s) {
    validate_model(s.halfspace);
    validate_model(s.gap);
    if (is_ideal(s.gap)) {
        throw InputError("gap material cannot be IdealMetal");
    }
    if (!(s.separation > 0.0)) {
        throw InputError("separation must be > 0");
    }
    if (!(s.temperature >= 0.0)) {
        throw InputError("temperature must be >= 0");
    }
}

Gammas decay_rates(const PlanarScenario& s, double kappa, double xi) {
    if (!(kappa >= 0.0) || !(xi >= 0.0)) {
        throw InputError("decay_rates requires kappa >= 0 and xi >= 0");
    }
    const double xi_c = xi / si::c_light;
    Gammas g{};
    if (is_ideal(s.halfspace)) {
        g.halfspace = kInf;
    } else {
        const double eps1 = eps_imag_axis(s.halfspace, xi);
        g.halfspace = std::sqrt(kappa * kappa + eps1 * xi_c * xi_c);
    }
    const double eps2 = eps_imag_axis(s.gap, xi);
    g.gap = std::sqrt(kappa * kappa + eps2 * xi_c * xi_c);
    return g;
}

Reflection reflection(const PlanarScenario& s, double kappa, double xi) {
    if (is_ideal(s.halfspace)) {
        return {-1.0, 1.0};
    }
    const Gammas g = decay_rates(s, kappa, xi);
    if (g.gap + g.halfspace == 0.0) {
        throw InputError(
            "reflection is 0/0 at kappa = xi = 0; evaluate a limit instead");
    }
    const double eps1 = eps_imag_axis(s.halfspace, xi);
    const double eps2 = eps_imag_axis(s.gap, xi);
    Reflection r{};
    r.te = (g.gap - g.halfspace) / (g.gap + g.halfspace);
    r.tm = (eps1 * g.gap - eps2 * g.halfspace) / (eps1 * g.gap + eps2 * g.halfspace);
    return r;
}

Reflection reflection_static(const PlanarScenario& s, double kappa) {
    if (!(kappa >= 0.0)) {
        throw InputError("reflection_static requires kappa >= 0");
    }
    const ZeroFrequencyLimit hs = static_limit(s.halfspace);
    const ZeroFrequencyLimit gap = static_limit(s.gap);
    const double c2 = si::c_light * si::c_light;
    const double u = std::sqrt(kappa * kappa + gap.xi2_eps / c2);
    const double gamma_hs0 =
        (hs.order == 3) ? kInf : std::sqrt(kappa * kappa + hs.xi2_eps / c2);
    if (u + gamma_hs0 == 0.0) {
        throw InputError(
            "static reflection is 0/0 at kappa = 0; evaluate a limit instead");
    }
    return static_reflection_at(hs, gap, u, gamma_hs0);
}

KernelPoint kernel_point(const PlanarScenario& s, double kappa, double xi) {
    const Gammas g = decay_rates(s, kappa, xi);
    const Reflection r = reflection(s, kappa, xi);
    return KernelPoint{kappa, xi, g.halfspace, g.gap, r.te, r.tm};
}

LogDispersion log_dispersion(const PlanarScenario& s, double kappa, double xi) {
    if (xi == 0.0) {
        return log_dispersion_static(s, kappa);
    }
    const Gammas g = decay_rates(s, kappa, xi);
    const Reflection r = reflection(s, kappa, xi);
    const double damp = std::exp(-2.0 * g.gap * s.separation);
    LogDispersion out{};
    out.te = std::log1p(-r.te * r.te * damp);
    out.tm = std::log1p(-r.tm * r.tm * damp);
    return out;
}

LogDispersion log_dispersion_static(const PlanarScenario& s, double kappa) {
    const Reflection r = reflection_static(s, kappa);
    const ZeroFrequencyLimit gap = static_limit(s.gap);
    const double c2 = si::c_light * si::c_light;
    const double u = std::sqrt(kappa * kappa + gap.xi2_eps / c2);
    if (u == 0.0 && (r.te * r.te == 1.0 || r.tm * r.tm == 1.0)) {
        throw InputError(
            "log_dispersion diverges at kappa = xi = 0 for unit reflection");
    }
    const double damp = std::exp(-2.0 * u * s.separation);
    LogDispersion out{};
    out.te = std::log1p(-r.te * r.te * damp);
    out.tm = std::log1p(-r.tm * r.tm * damp);
    return out;
}

OffAxisLogDispersion log_dispersion_off_axis(const PlanarScenario& s,
                                             double kappa, double xi, int sign) {
    if (!std::holds_alternative<Vacuum>(s.gap)) {
        throw InputError("off-axis dispersion requires a vacuum gap");
    }
    if (!std::holds_alternative<Drude>(s.halfspace) &&
        !std::holds_alternative<Plasma>(s.halfspace)) {
        throw InputError("off-axis dispersion requires a Drude or Plasma halfspace");
    }
    if (!(xi > 0.0) || !(kappa >= 0.0)) {
        throw InputError("off-axis dispersion requires xi > 0 and kappa >= 0");
    }
    const double xi_c = xi / si::c_light;
    const double g2 = std::sqrt(kappa * kappa + xi_c * xi_c);  // vacuum gap
    const std::complex<double> eps1 = eps_off_axis(s.halfspace, xi, sign);
    const std::complex<double> g1 =
        std::sqrt(std::complex<double>(kappa * kappa) + eps1 * (xi_c * xi_c));
    const std::complex<double> dte = (g2 - g1) / (g2 + g1);
    const std::complex<double> dtm = (eps1 * g2 - g1) / (eps1 * g2 + g1);
    const double damp = std::exp(-2.0 * g2 * s.separation);

    OffAxisLogDispersion out{};
    const std::complex<double> wte = dte * dte * damp;
    const std::complex<double> wtm = dtm * dtm * damp;
    // For this material family |delta| <= 1 on both sides of the axis, so
    // |w| < 1 strictly and the principal log is the branch continuous from
    // the xi -> infinity anchor. If the bound ever fails the result would
    // jump sheets, so refuse rather than return a wrong-branch value.
    if (!(std::abs(wte) < 1.0) || !(std::abs(wtm) < 1.0)) {
        throw BranchTrackingError(
            "off-axis dispersion argument left the principal-branch disc", xi,
            std::max(std::abs(wte), std::abs(wtm)));
    }
    out.te = log_one_minus(wte);
    out.tm = log_one_minus(wtm);
    return out;
}

KappaIntegral kappa_log_dispersion_integral(const PlanarScenario& s, double xi,
                                            const QuadratureControl& ctl) {
    validate_scenario(s);
    if (!(xi >= 0.0)) {
        throw InputError("kappa integral requires xi >= 0");
    }
    const double d = s.separation;
    const double inv4d2 = 1.0 / (4.0 * d * d);
    const double c2 = si::c_light * si::c_light;

    // Everything is expressed in t = 2 gamma_gap d: t0 at kappa = 0, then
    // kappa dkappa = (t / 4 d^2) dt and gamma_halfspace depends on t through
    // u = t / (2d): gamma_hs = sqrt(u^2 + shift), shift in [1/m^2].
    double t0 = 0.0;
    double shift = 0.0;
    const bool ideal_hs = is_ideal(s.halfspace);
    ZeroFrequencyLimit hs_limit{};
    ZeroFrequencyLimit gap_limit{};
    const bool static_node = (xi == 0.0);
    if (static_node) {
        hs_limit = static_limit(s.halfspace);
        gap_limit = static_limit(s.gap);
        t0 = 2.0 * d * std::sqrt(gap_limit.xi2_eps) / si::c_light;
        shift = (hs_limit.xi2_eps - gap_limit.xi2_eps) / c2;
    } else {
        const double eps2 = eps_imag_axis(s.gap, xi);
        const double xi_c2 = (xi / si::c_light) * (xi / si::c_light);
        t0 = 2.0 * d * std::sqrt(eps2) * xi / si::c_light;
        if (!ideal_hs) {
            shift = (eps_imag_axis(s.halfspace, xi) - eps2) * xi_c2;
        }
    }

    const auto amplitudes = [&](double t) -> Reflection {
        const double u = t / (2.0 * d);
        if (ideal_hs) {
            return {-1.0, 1.0};
        }
        // shift == 0 means eps1 == eps2 at this xi; taking g1 = u exactly
        // (sqrt(u*u) can land one ulp off) makes both amplitudes cancel to
        // bitwise zero, so equal materials yield energy 0, not noise.
        const double g1 = (shift == 0.0) ? u : std::sqrt(u * u + shift);
        if (static_node) {
            return static_reflection_at(hs_limit, gap_limit, u, g1);
        }
        const double eps1 = eps_imag_axis(s.halfspace, xi);
        const double eps2 = eps_imag_axis(s.gap, xi);
        Reflection r{};
        r.te = (u - g1) / (u + g1);
        r.tm = (eps1 * u - eps2 * g1) / (eps1 * u + eps2 * g1);
        return r;
    };

    const TailBound tail = tail_past(t0);
    KappaIntegral out{};

    const auto integrate_pol = [&](bool tm_pol) {
        const auto f = [&](double t) {
            const Reflection r = amplitudes(t);
            const double delta = tm_pol ? r.tm : r.te;
            return t * std::log1p(-delta * delta * std::exp(-t));
        };
        const QuadratureOutcome<double> q =
            integrate_adaptive<double>(f, t0, tail.cutoff, ctl);
        (tm_pol ? out.tm : out.te) = q.value * inv4d2;
        out.abs_error += (q.abs_error + tail.bound) * inv4d2;
        out.evals += q.evals;
    };
    integrate_pol(true);
    integrate_pol(false);
    return out;
}

}  // namespace casimir
