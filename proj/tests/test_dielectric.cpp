#include <doctest.h>

#include <cmath>
#include <limits>

#include "casimir/dielectric.hpp"
#include "casimir/errors.hpp"

using namespace casimir;

TEST_SUITE("dielectric") {

TEST_CASE("parameter validation rejects unphysical models") {
    CHECK_THROWS_AS(validate_model(ConstantEps{0.5}), InputError);
    CHECK_THROWS_AS(validate_model(Plasma{0.0}), InputError);
    CHECK_THROWS_AS(validate_model(Plasma{-1e16}), InputError);
    CHECK_THROWS_AS(validate_model(Drude{1e16, -1.0}), InputError);
    CHECK_THROWS_AS(validate_model(Oscillator{{{-1.0, 1e16}}}), InputError);
    CHECK_THROWS_AS(validate_model(Oscillator{{{1.0, 0.0}}}), InputError);
    CHECK_NOTHROW(validate_model(Drude{1e16, 0.0}));
    CHECK_NOTHROW(validate_model(Vacuum{}));
    CHECK_NOTHROW(validate_model(IdealMetal{}));
}

TEST_CASE("imaginary-axis values match the model formulas") {
    CHECK(eps_imag_axis(Vacuum{}, 0.0) == 1.0);
    CHECK(eps_imag_axis(Vacuum{}, 1e18) == 1.0);
    CHECK(eps_imag_axis(ConstantEps{2.5}, 3e15) == 2.5);

    const double wp = 1.37e16;
    CHECK(eps_imag_axis(Plasma{wp}, wp) == 2.0);
    CHECK(eps_imag_axis(Drude{wp, 1.37e14}, wp) ==
          doctest::Approx(1.0 + wp * wp / (wp * (wp + 1.37e14)))
              .epsilon(1e-15));

    const Oscillator osc{{{1.5, 1.2e16}}};
    CHECK(eps_imag_axis(osc, 0.0) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(eps_imag_axis(osc, 1.2e16) ==
          doctest::Approx(1.75).epsilon(1e-15));

    CHECK(std::isinf(eps_imag_axis(IdealMetal{}, 5e14)));
}

TEST_CASE("dissipation-free drude coincides with plasma bitwise") {
    const double wp = 1.37e16;
    for (const double xi : {1e12, 5e14, 1.37e16, 3e17}) {
        CHECK(eps_imag_axis(Drude{wp, 0.0}, xi) ==
              eps_imag_axis(Plasma{wp}, xi));
    }
}

TEST_CASE("dissipation lowers eps and eps decays monotonically") {
    const double wp = 1.37e16;
    const Drude lossy{wp, 1.37e14};
    const Plasma lossless{wp};
    double prev = std::numeric_limits<double>::infinity();
    for (double xi = 1e13; xi < 1e18; xi *= 3.0) {
        const double e = eps_imag_axis(lossy, xi);
        CHECK(e < eps_imag_axis(lossless, xi));
        CHECK(e > 1.0);
        CHECK(e <= prev);
        prev = e;
    }
}

TEST_CASE("domain guards on the imaginary axis") {
    CHECK_THROWS_AS(eps_imag_axis(Vacuum{}, -1.0), InputError);
    CHECK_THROWS_AS(eps_imag_axis(Plasma{1e16}, 0.0), DivergentStaticLimit);
    CHECK_THROWS_AS(eps_imag_axis(Drude{1e16, 1e14}, 0.0),
                    DivergentStaticLimit);
}

TEST_CASE("off-axis continuation: plasma is even, drude keeps its formula") {
    const double wp = 1.37e16;
    const double g = 1.37e14;

    for (const double xi : {1e13, 5e14, 2e16}) {
        const auto plus = eps_off_axis(Plasma{wp}, xi, +1);
        const auto minus = eps_off_axis(Plasma{wp}, xi, -1);
        CHECK(plus.real() == minus.real());
        CHECK(plus.imag() == minus.imag());
        CHECK(plus.real() == eps_imag_axis(Plasma{wp}, xi));
        CHECK(plus.imag() == 0.0);
    }

    // sign = +1 reproduces the imaginary axis; sign = -1 has the shifted
    // denominator with a pole at xi = gamma.
    CHECK(eps_off_axis(Drude{wp, g}, 2.0 * g, +1).real() ==
          doctest::Approx(eps_imag_axis(Drude{wp, g}, 2.0 * g))
              .epsilon(1e-15));
    CHECK(eps_off_axis(Drude{wp, g}, 2.0 * g, -1).real() ==
          doctest::Approx(5001.0).epsilon(1e-12));
    // below the pole the continued eps is negative
    CHECK(eps_off_axis(Drude{wp, g}, 0.5 * g, -1).real() < 0.0);
}

TEST_CASE("off-axis pole window throws with diagnostics") {
    const double wp = 1.37e16;
    const double g = 1.37e14;
    bool thrown = false;
    try {
        eps_off_axis(Drude{wp, g}, g * (1.0 + 1e-15), -1);
    } catch (const PoleProximityError& e) {
        thrown = true;
        CHECK(e.xi == doctest::Approx(g).epsilon(1e-12));
        CHECK(e.pole == g);
    }
    CHECK(thrown);
    // outside the window it evaluates
    CHECK_NOTHROW(eps_off_axis(Drude{wp, g}, g * (1.0 + 1e-10), -1));
    // models without a continued form are rejected
    CHECK_THROWS_AS(eps_off_axis(ConstantEps{2.0}, 1e15, -1), InputError);
}

TEST_CASE("static limits are structured, not raw substitutions") {
    const double wp = 1.37e16;
    const double g = 1.37e14;

    const auto vac = static_limit(Vacuum{});
    CHECK(vac.order == 0);
    CHECK(vac.xi2_eps == 0.0);
    CHECK(vac.lead == 1.0);

    const auto con = static_limit(ConstantEps{2.5});
    CHECK(con.order == 0);
    CHECK(con.lead == 2.5);

    const auto osc = static_limit(Oscillator{{{1.5, 1.2e16}}});
    CHECK(osc.order == 0);
    CHECK(osc.lead == doctest::Approx(2.5).epsilon(1e-15));

    const auto dru = static_limit(Drude{wp, g});
    CHECK(dru.order == 1);
    CHECK(dru.xi2_eps == 0.0);
    CHECK(dru.lead == doctest::Approx(wp * wp / g).epsilon(1e-15));

    const auto pla = static_limit(Plasma{wp});
    CHECK(pla.order == 2);
    CHECK(pla.xi2_eps == doctest::Approx(wp * wp).epsilon(1e-15));

    // gamma = 0 must take the plasma branch, not divide by gamma
    const auto dru0 = static_limit(Drude{wp, 0.0});
    CHECK(dru0.order == 2);
    CHECK(dru0.xi2_eps == pla.xi2_eps);

    const auto ideal = static_limit(IdealMetal{});
    CHECK(ideal.order == 3);
    CHECK(std::isinf(ideal.xi2_eps));
}

TEST_CASE("model names are stable identifiers") {
    CHECK(model_name(Vacuum{}) == "vacuum");
    CHECK(model_name(IdealMetal{}) == "ideal");
    CHECK(model_name(Drude{1e16, 1e14}) == "drude");
    CHECK(model_name(Plasma{1e16}) == "plasma");
    CHECK(model_name(ConstantEps{2.0}) == "constant");
    CHECK(model_name(Oscillator{{{1.0, 1e16}}}) == "oscillator");
}

}  // TEST_SUITE
