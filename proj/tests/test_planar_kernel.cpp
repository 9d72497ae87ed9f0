#include <doctest.h>

#include <cmath>
#include <complex>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/planar.hpp"

using namespace casimir;

namespace {

PlanarScenario stack(DielectricModel hs, DielectricModel gap, double d = 1e-6,
                     double t = 300.0) {
    return PlanarScenario{std::move(hs), std::move(gap), d, t};
}

}  // namespace

TEST_SUITE("planar-kernel") {

TEST_CASE("scenario validation") {
    CHECK_NOTHROW(validate_scenario(stack(IdealMetal{}, Vacuum{})));
    CHECK_THROWS_AS(validate_scenario(stack(IdealMetal{}, Vacuum{}, 0.0)),
                    InputError);
    CHECK_THROWS_AS(validate_scenario(stack(IdealMetal{}, Vacuum{}, -1e-6)),
                    InputError);
    CHECK_THROWS_AS(
        validate_scenario(stack(IdealMetal{}, Vacuum{}, 1e-6, -1.0)),
        InputError);
    // the film material must have finite response
    CHECK_THROWS_AS(validate_scenario(stack(Vacuum{}, IdealMetal{})),
                    InputError);
    // invalid model parameters surface here too
    CHECK_THROWS_AS(validate_scenario(stack(Plasma{-1.0}, Vacuum{})),
                    InputError);
}

TEST_CASE("decay rates and amplitudes at a hand-checked node") {
    // eps_hs = 2, vacuum gap, kappa = 1, xi = c: gamma_hs = sqrt(3),
    // gamma_gap = sqrt(2), so
    //   delta_te = (sqrt2 - sqrt3)/(sqrt2 + sqrt3),
    //   delta_tm = (2 sqrt2 - sqrt3)/(2 sqrt2 + sqrt3).
    const PlanarScenario s = stack(ConstantEps{2.0}, Vacuum{});
    const Gammas g = decay_rates(s, 1.0, si::c_light);
    CHECK(g.halfspace == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(g.gap == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    const Reflection r = reflection(s, 1.0, si::c_light);
    CHECK(r.te ==
          doctest::Approx(-1.01020514433643738e-01).epsilon(1e-14));
    CHECK(r.tm == doctest::Approx(2.40408205773457589e-01).epsilon(1e-14));

    const KernelPoint kp = kernel_point(s, 1.0, si::c_light);
    CHECK(kp.delta_te == r.te);
    CHECK(kp.delta_tm == r.tm);
    CHECK(kp.gamma_halfspace == g.halfspace);
    CHECK(kp.gamma_gap == g.gap);
}

TEST_CASE("swapping the two materials negates both amplitudes exactly") {
    const PlanarScenario a = stack(ConstantEps{2.0}, Vacuum{});
    const PlanarScenario b = stack(Vacuum{}, ConstantEps{2.0});
    for (const double kappa : {1e5, 1e6, 3e6}) {
        for (const double xi : {1e14, 1e15, 1e16}) {
            const Reflection ra = reflection(a, kappa, xi);
            const Reflection rb = reflection(b, kappa, xi);
            CHECK(rb.te == -ra.te);
            CHECK(rb.tm == -ra.tm);
        }
    }
}

TEST_CASE("amplitudes stay inside [-1, 1]; ideal metal sits at the corners") {
    const PlanarScenario lossy = stack(Drude{1.37e16, 1.37e14}, Vacuum{});
    for (double kappa = 1e4; kappa < 1e8; kappa *= 10.0) {
        for (double xi = 1e13; xi < 1e17; xi *= 10.0) {
            const Reflection r = reflection(lossy, kappa, xi);
            CHECK(std::abs(r.te) <= 1.0);
            CHECK(std::abs(r.tm) <= 1.0);
        }
    }
    const Reflection ideal =
        reflection(stack(IdealMetal{}, Vacuum{}), 1e6, 1e15);
    CHECK(ideal.te == -1.0);
    CHECK(ideal.tm == 1.0);
}

TEST_CASE("static amplitudes split drude from plasma") {
    const double wp = 1.37e16;
    const double kappa = 2e6;

    // any positive dissipation kills the static te amplitude exactly
    const Reflection dr =
        reflection_static(stack(Drude{wp, 1.37e14}, Vacuum{}), kappa);
    CHECK(dr.te == 0.0);
    CHECK(dr.tm == 1.0);

    // the plasma model keeps a finite te limit with the screened rate
    const Reflection pl = reflection_static(stack(Plasma{wp}, Vacuum{}), kappa);
    const double g0 =
        std::sqrt(kappa * kappa + wp * wp / (si::c_light * si::c_light));
    CHECK(pl.te == doctest::Approx((kappa - g0) / (kappa + g0)).epsilon(1e-14));
    CHECK(pl.tm == 1.0);

    // gamma = 0 rides the plasma branch
    const Reflection dr0 =
        reflection_static(stack(Drude{wp, 0.0}, Vacuum{}), kappa);
    CHECK(dr0.te == pl.te);

    // two finite materials: lead-ratio formula, both amplitudes strictly
    // inside the interval
    const Reflection fin =
        reflection_static(stack(ConstantEps{4.0}, ConstantEps{2.0}), kappa);
    CHECK(fin.te == 0.0);  // equal static gammas at finite eps
    CHECK(fin.tm == doctest::Approx((4.0 - 2.0) / (4.0 + 2.0)).epsilon(1e-14));

    const Reflection ideal =
        reflection_static(stack(IdealMetal{}, Vacuum{}), kappa);
    CHECK(ideal.te == -1.0);
    CHECK(ideal.tm == 1.0);
}

TEST_CASE("metal-like materials reject a raw xi = 0 decay-rate call") {
    CHECK_THROWS_AS(decay_rates(stack(Plasma{1e16}, Vacuum{}), 1e6, 0.0),
                    DivergentStaticLimit);
    CHECK_NOTHROW(decay_rates(stack(ConstantEps{2.0}, Vacuum{}), 1e6, 0.0));
}

TEST_CASE("log dispersion is nonpositive and matches its definition") {
    const PlanarScenario s = stack(Drude{1.37e16, 1.37e14}, Vacuum{});
    for (const double kappa : {5e5, 2e6, 8e6}) {
        for (const double xi : {1e14, 1e15, 1e16}) {
            const LogDispersion ld = log_dispersion(s, kappa, xi);
            CHECK(ld.te <= 0.0);
            CHECK(ld.tm <= 0.0);

            const KernelPoint kp = kernel_point(s, kappa, xi);
            const double damp = std::exp(-2.0 * kp.gamma_gap * s.separation);
            CHECK(ld.te == doctest::Approx(std::log1p(
                               -kp.delta_te * kp.delta_te * damp))
                               .epsilon(1e-13));
            CHECK(ld.tm == doctest::Approx(std::log1p(
                               -kp.delta_tm * kp.delta_tm * damp))
                               .epsilon(1e-13));
        }
    }
    // xi = 0 is routed through the static kernel rather than failing
    CHECK_NOTHROW(log_dispersion(s, 1e6, 0.0));
    CHECK(log_dispersion(s, 1e6, 0.0).te == 0.0);
}

TEST_CASE("ideal static kappa integral reproduces the zeta(3) constant") {
    const double d = 1e-6;
    const PlanarScenario s = stack(IdealMetal{}, Vacuum{});
    QuadratureControl ctl;
    ctl.rel_tol = 1e-12;
    const KappaIntegral k = kappa_log_dispersion_integral(
        PlanarScenario{s.halfspace, s.gap, d, s.temperature}, 0.0, ctl);
    const double exact = -zeta3 / (4.0 * d * d);
    CHECK(k.tm == doctest::Approx(exact).epsilon(1e-11));
    CHECK(k.te == doctest::Approx(exact).epsilon(1e-11));
    CHECK(k.abs_error > 0.0);
    CHECK(k.abs_error < std::abs(exact) * 1e-8);
    CHECK(k.evals > 0);
}

TEST_CASE("kappa integral decays with separation and with frequency") {
    const PlanarScenario near = stack(IdealMetal{}, Vacuum{}, 1e-6);
    const PlanarScenario far = stack(IdealMetal{}, Vacuum{}, 2e-6);
    QuadratureControl ctl;
    ctl.rel_tol = 1e-10;
    const double xi1 = matsubara_frequency(1, 300.0);
    const double near1 = kappa_log_dispersion_integral(near, xi1, ctl).total();
    const double far1 = kappa_log_dispersion_integral(far, xi1, ctl).total();
    CHECK(std::abs(far1) < std::abs(near1));
    const double near9 =
        kappa_log_dispersion_integral(near, 9.0 * xi1, ctl).total();
    CHECK(std::abs(near9) < std::abs(near1));
}

TEST_CASE("off-axis continuation anchors to the imaginary axis at sign +1") {
    const PlanarScenario s = stack(Drude{1.37e16, 1.37e14}, Vacuum{});
    for (const double kappa : {5e5, 2e6}) {
        for (const double xi : {1e14, 1e15}) {
            const OffAxisLogDispersion off =
                log_dispersion_off_axis(s, kappa, xi, +1);
            const LogDispersion on = log_dispersion(s, kappa, xi);
            CHECK(off.te.real() == doctest::Approx(on.te).epsilon(1e-12));
            CHECK(off.tm.real() == doctest::Approx(on.tm).epsilon(1e-12));
            CHECK(std::abs(off.te.imag()) < 1e-15);
            CHECK(std::abs(off.tm.imag()) < 1e-15);
        }
    }
}

TEST_CASE("off-axis continuation is even for plasma, finite for drude") {
    const PlanarScenario even = stack(Plasma{1.37e16}, Vacuum{});
    const OffAxisLogDispersion p = log_dispersion_off_axis(even, 2e6, 1e15, +1);
    const OffAxisLogDispersion m = log_dispersion_off_axis(even, 2e6, 1e15, -1);
    CHECK(p.te == m.te);
    CHECK(p.tm == m.tm);

    // below the drude pole eps(-i xi) < 0; the continued log must stay
    // finite and single-valued there
    const PlanarScenario lossy = stack(Drude{1.37e16, 1.37e14}, Vacuum{});
    const OffAxisLogDispersion low =
        log_dispersion_off_axis(lossy, 2e6, 0.5 * 1.37e14, -1);
    CHECK(std::isfinite(low.total().real()));
    CHECK(std::isfinite(low.total().imag()));

    // only the metal family continues off axis, and only across vacuum
    CHECK_THROWS_AS(
        log_dispersion_off_axis(stack(ConstantEps{2.0}, Vacuum{}), 2e6, 1e15, -1),
        InputError);
    CHECK_THROWS_AS(
        log_dispersion_off_axis(stack(Drude{1e16, 1e14}, ConstantEps{2.0}),
                                2e6, 1e15, -1),
        InputError);
}

}  // TEST_SUITE
