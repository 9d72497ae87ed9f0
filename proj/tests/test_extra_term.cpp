#include <doctest.h>

#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"

using namespace casimir;

TEST_SUITE("extra-term") {

TEST_CASE("drude asymmetry series hits the frozen reference") {
    // Partial sum pinned at exactly n_cap = 12 terms; the series converges
    // too slowly in n for a tolerance-driven stop, so the reference is the
    // 12-term value from an independent arbitrary-precision evaluation.
    const PlanarScenario s{Drude{1.37e16, 5e13}, Vacuum{}, 1e-6, 300.0};
    const ExtraTermResult et = extra_term(s, 1e-4, 12);

    CHECK(et.n_series_terms == 12);
    CHECK(std::abs(et.value_real / 1.848785061e-11 - 1.0) < 1e-2);
    CHECK(std::abs(et.value_imag_part / -1.700601722e-11 - 1.0) < 3e-2);

    // the remainder estimate must admit how slow the series is
    CHECK(et.remainder_estimate > 0.1 * std::abs(et.value_real));
    CHECK(et.quad_error > 0.0);
    CHECK(et.quad_evals > 0);

    // the continued eps has a real pole at xi = gamma, so every series term
    // carries a principal-value exclusion window straddling it
    REQUIRE(et.pv_windows.size() == 12);
    for (const auto& [lo, hi] : et.pv_windows) {
        CHECK(lo < 5e13);
        CHECK(hi > 5e13);
        CHECK(hi - lo < 5e13);
    }
}

TEST_CASE("even-in-omega response cancels to exactly zero") {
    const PlanarScenario s{Plasma{1.37e16}, Vacuum{}, 5e-7, 300.0};
    const ExtraTermResult et = extra_term(s, 1e-6, 4);
    CHECK(et.value_real == 0.0);
    CHECK(et.value_imag_part == 0.0);
    CHECK(et.pv_windows.empty());
}

TEST_CASE("series term count follows the cap") {
    const PlanarScenario s{Plasma{1.37e16}, Vacuum{}, 1e-6, 300.0};
    CHECK(extra_term(s, 1e-6, 1).n_series_terms == 1);
    CHECK(extra_term(s, 1e-6, 3).n_series_terms == 3);
}

TEST_CASE("input validation") {
    const PlanarScenario ok{Drude{1.37e16, 5e13}, Vacuum{}, 1e-6, 300.0};
    CHECK_THROWS_AS(extra_term(ok, 1e-4, 0), InputError);
    CHECK_THROWS_AS(extra_term(ok, 1.0, 12), InputError);

    const PlanarScenario cold{Drude{1.37e16, 5e13}, Vacuum{}, 1e-6, 0.0};
    CHECK_THROWS_AS(extra_term(cold, 1e-4, 2), InputError);

    const PlanarScenario dielectric_hs{ConstantEps{2.5}, Vacuum{}, 1e-6,
                                       300.0};
    CHECK_THROWS_AS(extra_term(dielectric_hs, 1e-4, 2), InputError);

    const PlanarScenario filled_gap{Drude{1.37e16, 5e13}, ConstantEps{2.0},
                                    1e-6, 300.0};
    CHECK_THROWS_AS(extra_term(filled_gap, 1e-4, 2), InputError);
}

}  // TEST_SUITE
