#include <doctest.h>

#include <cmath>
#include <numbers>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"

using namespace casimir;

namespace {

// T chosen so the gap parameter 2 pi k_B T d / (hbar c) equals x at d = 1 um.
double temperature_for(double x) {
    return x * si::hbar * si::c_light /
           (2.0 * std::numbers::pi * si::k_boltzmann * 1e-6);
}

EngineOptions tight() {
    EngineOptions opt;
    opt.tol = 1e-10;
    return opt;
}

}  // namespace

TEST_SUITE("lifshitz-engine") {

TEST_CASE("ideal mirrors at 1 um / 300 K hit the frozen reference") {
    const PlanarScenario s{IdealMetal{}, Vacuum{}, 1e-6, 300.0};
    const EnergyResult r = free_energy(s, tight());
    // reference from an independent arbitrary-precision evaluation
    CHECK(r.value == doctest::Approx(-4.4493332821712748e-10).epsilon(1e-11));
    CHECK(r.abs_error < 1e-10 * std::abs(r.value) * 100);
    CHECK(r.n_terms_used > 5);
    CHECK(r.quad_evals > 0);
}

TEST_CASE("ideal mirrors across the gap-parameter range") {
    // same independent reference values, d = 1 um, x = 2 pi kTd / hbar c
    const struct {
        double x;
        double value;
    } table[] = {
        {0.1, -4.3339919670367618e-10},
        {0.5, -4.3614517605713386e-10},
        {2.0, -5.5744424937986076e-10},
    };
    for (const auto& row : table) {
        const PlanarScenario s{IdealMetal{}, Vacuum{}, 1e-6,
                               temperature_for(row.x)};
        const EnergyResult r = free_energy(s, tight());
        CHECK(r.value == doctest::Approx(row.value).epsilon(1e-10));
    }
}

TEST_CASE("zero-temperature path matches the closed form") {
    const double d = 1e-6;
    const PlanarScenario s{IdealMetal{}, Vacuum{}, d, 0.0};
    const EnergyResult r = free_energy_zero_temperature(s, tight());
    const double exact = -std::numbers::pi * std::numbers::pi * si::hbar *
                         si::c_light / (720.0 * d * d * d);
    CHECK(r.value == doctest::Approx(exact).epsilon(1e-9));
    CHECK(r.n_terms_used == 0);

    // the two polarizations contribute equally for ideal mirrors
    REQUIRE(r.breakdown.size() == 1);
    CHECK(r.breakdown[0].n == -1);
    CHECK(r.breakdown[0].tm ==
          doctest::Approx(r.breakdown[0].te).epsilon(1e-10));
}

TEST_CASE("low-temperature free energy approaches the zero-T value") {
    const PlanarScenario cold{IdealMetal{}, Vacuum{}, 1e-6, 0.0};
    const double f0 = free_energy_zero_temperature(cold, tight()).value;
    double prev_gap = 1e300;
    for (const double x : {0.4, 0.2, 0.1}) {
        const PlanarScenario s{IdealMetal{}, Vacuum{}, 1e-6,
                               temperature_for(x)};
        const double gap = std::abs(free_energy(s, tight()).value - f0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    // at x = 0.1 the thermal correction is ~1e-5 relative
    CHECK(prev_gap < 1e-4 * std::abs(f0));
}

TEST_CASE("breakdown terms add up to the reported value") {
    const PlanarScenario s{Drude{1.37e16, 1.37e14}, Vacuum{}, 1e-6, 300.0};
    EngineOptions opt = tight();
    opt.keep_breakdown = true;
    const EnergyResult r = free_energy(s, opt);
    REQUIRE(!r.breakdown.empty());
    double sum = 0.0;
    for (const TermBreakdown& t : r.breakdown) {
        sum += t.tm + t.te;
    }
    CHECK(sum == doctest::Approx(r.value).epsilon(1e-12));
    CHECK(static_cast<int>(r.breakdown.size()) == r.n_terms_used);
    CHECK(r.grid.n_max + 1 == r.n_terms_used);
    CHECK(r.grid.tail_estimate >= 0.0);
    CHECK(r.grid.tail_estimate <= r.abs_error);
}

TEST_CASE("results do not depend on the thread count") {
    const PlanarScenario s{Plasma{1.37e16}, Vacuum{}, 1e-6, 300.0};
    EngineOptions one = tight();
    one.threads = 1;
    EngineOptions four = tight();
    four.threads = 4;
    const EnergyResult a = free_energy(s, one);
    const EnergyResult b = free_energy(s, four);
    CHECK(a.value == b.value);
    CHECK(a.abs_error == b.abs_error);
    CHECK(a.n_terms_used == b.n_terms_used);
}

TEST_CASE("drude to plasma ratio: dissipation discontinuity at gamma = 0") {
    const double wp = 1.37e16;
    // gamma exactly zero takes the plasma path bitwise
    CHECK(drude_plasma_ratio(1e-6, 300.0, wp, 0.0, 1e-8) == 1.0);
    // any positive gamma loses the static te term and lands strictly below 1
    const double r_small = drude_plasma_ratio(1e-6, 300.0, wp, wp / 1000.0, 1e-8);
    const double r_large = drude_plasma_ratio(1e-6, 300.0, wp, wp / 100.0, 1e-8);
    CHECK(r_small < 1.0);
    CHECK(r_small > 0.5);
    CHECK(r_large < r_small);
}

TEST_CASE("engine input validation") {
    const PlanarScenario s{IdealMetal{}, Vacuum{}, 1e-6, 300.0};
    EngineOptions opt;
    opt.tol = 1e-15;
    CHECK_THROWS_AS(free_energy(s, opt), InputError);
    opt.tol = 0.5;
    CHECK_THROWS_AS(free_energy(s, opt), InputError);

    const PlanarScenario zero_t{IdealMetal{}, Vacuum{}, 1e-6, 0.0};
    CHECK_THROWS_AS(free_energy(zero_t), InputError);

    const PlanarScenario bad_gap{Vacuum{}, IdealMetal{}, 1e-6, 300.0};
    CHECK_THROWS_AS(free_energy(bad_gap), InputError);
}

TEST_CASE("attraction weakens with distance for every material family") {
    EngineOptions opt;
    opt.tol = 1e-6;
    const DielectricModel models[] = {
        IdealMetal{}, ConstantEps{2.5}, Plasma{1.37e16},
        Drude{1.37e16, 1.37e14}, Oscillator{{{1.5, 1.2e16}}}};
    for (const DielectricModel& m : models) {
        const double near =
            free_energy(PlanarScenario{m, Vacuum{}, 1e-6, 300.0}, opt).value;
        const double far =
            free_energy(PlanarScenario{m, Vacuum{}, 2e-6, 300.0}, opt).value;
        CHECK(near < 0.0);
        CHECK(far < 0.0);
        CHECK(std::abs(far) < std::abs(near));
    }
}

}  // TEST_SUITE
