#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "adas/adas.hpp"
#include "oracles.hpp"

using namespace adas;

TEST_CASE("unemployment-vacancy elasticity along the Beveridge curve", "[efficiency]") {
    const MatchingParams m = default_params().matching;
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> dist(0.05, 20.0);
    for (int k = 0; k < 50; ++k) {
        const double theta = dist(rng);
        const double f = job_finding_rate(theta, m);
        REQUIRE(beveridge_elasticity(theta, m) ==
                Catch::Approx((m.eta + m.lambda / f) / (1.0 - m.eta)).epsilon(1e-14));
    }
    // Elasticity grows without bound as the market empties out and shrinks
    // towards eta/(1-eta) as finding rates explode.
    REQUIRE(beveridge_elasticity(1e-6, m) > 1e2);
    REQUIRE(beveridge_elasticity(1e9, m) ==
            Catch::Approx(m.eta / (1.0 - m.eta)).epsilon(1e-3));
}

TEST_CASE("efficient tightness satisfies its first-order condition", "[efficiency]") {
    const MatchingParams m = default_params().matching;
    const double star = efficient_tightness(m);

    REQUIRE(star == Catch::Approx(0.971906).epsilon(1e-4));
    REQUIRE(star > 0.0);
    REQUIRE(star < theta_tau(m));

    const double foc = m.kappa / (1.0 - m.eta) *
                           (m.eta * star + m.lambda / vacancy_filling_rate(star, m)) -
                       1.0;
    REQUIRE(std::fabs(foc) < 1e-12);

    // Equivalent statement: recruiting cost times elasticity times tightness
    // equals one at the optimum.
    REQUIRE(m.kappa * beveridge_elasticity(star, m) * star ==
            Catch::Approx(1.0).epsilon(1e-10));

    MatchingParams free = m;
    free.kappa = 0.0;
    REQUIRE_THROWS_AS(efficient_tightness(free), config_error);
}

TEST_CASE("efficient allocation maximises consumption on the Beveridge curve",
          "[efficiency]") {
    std::mt19937_64 rng(32);
    const EndowmentParams e{1.0, 1.0};
    for (int trial = 0; trial < 10; ++trial) {
        const MatchingParams m = oracle::random_matching(rng);
        const double star = efficient_tightness(m);
        const double u_star = beveridge_unemployment(star, m);
        const auto grid_best = oracle::consumption_argmax(m, e, 200000);
        REQUIRE(std::fabs(u_star - grid_best.u) <= grid_best.cell * 1.5);
    }
}

TEST_CASE("efficiency report ties together tightness, rates, and the gap",
          "[efficiency]") {
    const ModelParams p = default_params();
    const EfficiencyReport rep = efficiency_report(p);

    REQUIRE(rep.theta_star == efficient_tightness(p.matching));
    REQUIRE(rep.u_star == beveridge_unemployment(rep.theta_star, p.matching));
    REQUIRE(rep.v_star ==
            vacancies_on_beveridge(rep.u_star, p.matching, p.endow.l));
    REQUIRE(rep.epsilon_at_star == beveridge_elasticity(rep.theta_star, p.matching));

    REQUIRE(rep.u_star == Catch::Approx(0.0558648).epsilon(1e-4));
    // The default economy runs a touch slack of efficient.
    REQUIRE(rep.gap == Catch::Approx(solve(p).u - rep.u_star).margin(1e-12));
    REQUIRE(rep.gap == Catch::Approx(0.0041352).margin(2e-4));
    REQUIRE(rep.gap > 0.0);
}

TEST_CASE("first-order condition holds across random matching calibrations",
          "[efficiency]") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 50; ++trial) {
        const MatchingParams m = oracle::random_matching(rng);
        const double star = efficient_tightness(m);
        REQUIRE(star > 0.0);
        REQUIRE(star < theta_tau(m));
        const double foc = m.kappa / (1.0 - m.eta) *
                               (m.eta * star + m.lambda / vacancy_filling_rate(star, m)) -
                           1.0;
        REQUIRE(std::fabs(foc) < 1e-10);
        REQUIRE(m.kappa * beveridge_elasticity(star, m) * star ==
                Catch::Approx(1.0).epsilon(1e-10));
    }
}
