#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "adas/adas.hpp"
#include "identity.hpp"
#include "oracles.hpp"

using namespace adas;

TEST_CASE("default calibration clears the market where it was told to", "[equilibrium]") {
    const ModelParams p = default_params();
    const Equilibrium eq = solve(p);

    // mu_wealth was backed out to put unemployment at 6%.
    REQUIRE(eq.u == Catch::Approx(0.06).epsilon(1e-9));
    REQUIRE(eq.theta == Catch::Approx(0.8351929).epsilon(1e-5));
    REQUIRE(eq.wedge == Catch::Approx(0.0515749).epsilon(1e-4));
    REQUIRE(eq.residual < 1e-9);
    REQUIRE(eq.r == p.policy.real_rate());
    REQUIRE(eq.gamma0 == p.prefs.mu_wealth / demand_shifter(p.prefs, p.policy));
    REQUIRE(oracle::identity_violation(eq, p) < 1e-10);
    REQUIRE(eq.welfare_flow ==
            Catch::Approx(flow_welfare(eq, p.prefs, p.endow, p.matching)));
}

TEST_CASE("solver agrees with a brute-force grid scan", "[equilibrium]") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const ModelParams p = oracle::random_params(rng);
        const Equilibrium eq = solve(p);
        const double theta_scan = oracle::solve_by_scan(p, 100000);
        // The scan bracket is coarse; refinement narrows it to ~1e-12.
        REQUIRE(eq.theta == Catch::Approx(theta_scan).epsilon(1e-9));
        REQUIRE(oracle::identity_violation(eq, p) < 1e-10);
    }
}

TEST_CASE("demand calibration round-trips through the solver", "[equilibrium]") {
    for (double target : {0.04, 0.06, 0.10, 0.20}) {
        ModelParams p = default_params();
        p.prefs.mu_wealth = calibrate_demand(target, p);
        REQUIRE(solve(p).u == Catch::Approx(target).epsilon(1e-9));
    }
}

TEST_CASE("demand calibration rejects unreachable targets", "[equilibrium]") {
    const ModelParams p = default_params();
    REQUIRE_THROWS_AS(calibrate_demand(0.0, p), domain_error);
    REQUIRE_THROWS_AS(calibrate_demand(1.0, p), domain_error);
    REQUIRE_THROWS_AS(calibrate_demand(-0.05, p), domain_error);
    // Below the unemployment rate at the recruiting pole: not reachable.
    REQUIRE_THROWS_AS(calibrate_demand(0.001, p), domain_error);

    ModelParams bad = p;
    bad.prefs.sigma = 1.0;
    REQUIRE_THROWS_AS(calibrate_demand(0.06, bad), config_error);
    bad = p;
    bad.prefs.delta = 0.0;
    REQUIRE_THROWS_AS(calibrate_demand(0.06, bad), config_error);
    bad = p;
    bad.policy.i = 0.1; // after-tax real return above discounting: no demand
    REQUIRE_THROWS_AS(calibrate_demand(0.06, bad), config_error);
}

TEST_CASE("solver rejects configurations with no crossing", "[equilibrium]") {
    ModelParams p = default_params();
    p.policy.i = 0.1;
    REQUIRE_THROWS_AS(solve(p), config_error);

    // Free recruiting flattens demand; if it sits above capacity a*l the
    // curves never meet.
    p = default_params();
    p.matching.kappa = 0.0;
    p.prefs.mu_wealth = 1e-6;
    REQUIRE_THROWS_AS(solve(p), config_error);
}

TEST_CASE("unemployment splits into slack demand and matching friction", "[equilibrium]") {
    const ModelParams p = default_params();
    const UnemploymentSplit split = decompose_unemployment(p);
    const Equilibrium eq = solve(p);

    REQUIRE(split.keynesian >= 0.0);
    REQUIRE(split.frictional > 0.0);
    REQUIRE(split.keynesian + split.frictional ==
            Catch::Approx(eq.u).epsilon(1e-14));
    const double capacity = p.endow.a * p.endow.l;
    REQUIRE(split.keynesian ==
            Catch::Approx(1.0 - oracle::ad_ref(0.0, p) / capacity).epsilon(1e-12));

    // With free recruiting the demand curve is flat, so all unemployment in
    // excess of zero tightness slack is gone: u collapses to its Keynesian part.
    ModelParams free = default_params();
    free.matching.kappa = 0.0;
    free.prefs.mu_wealth =
        demand_shifter(free.prefs, free.policy) / std::sqrt(0.9); // AD = 0.9 * capacity
    const UnemploymentSplit fs = decompose_unemployment(free);
    const Equilibrium feq = solve(free);
    REQUIRE(feq.u == Catch::Approx(0.1).epsilon(1e-9));
    REQUIRE(std::fabs(fs.frictional) < 1e-9);
    REQUIRE(fs.keynesian == Catch::Approx(feq.u).epsilon(1e-8));
}

TEST_CASE("both sides gain from matches in equilibrium", "[equilibrium]") {
    const ModelParams p = default_params();
    const Equilibrium eq = solve(p);
    const SurplusCheck s = bilateral_surplus_check(eq, p.prefs);
    REQUIRE(s.positive);
    REQUIRE(s.margin > 0.0);
    REQUIRE(s.margin == std::pow(eq.c, -1.0 / p.prefs.sigma) - eq.gamma0);
    REQUIRE(s.euler_gap < 1e-10);

    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        const ModelParams q = oracle::random_params(rng);
        const SurplusCheck sq = bilateral_surplus_check(solve(q), q.prefs);
        REQUIRE(sq.positive);
        REQUIRE(sq.euler_gap < 1e-10);
    }
}

TEST_CASE("pure demand-side rescaling leaves tightness bit-identical", "[equilibrium]") {
    // Doubling delta, i, pi, and mu_wealth doubles the demand shifter and
    // the wealth taste by the same exact power of two, so every curve
    // evaluation, and hence the whole bisection path, is unchanged.
    ModelParams base = default_params();
    base.prefs.delta = 0.004;
    base.policy.i = 0.004;
    base.policy.pi = 0.002;
    base.policy.tau_w = 0.0;

    ModelParams doubled = base;
    doubled.prefs.delta = 0.008;
    doubled.policy.i = 0.008;
    doubled.policy.pi = 0.004;
    doubled.prefs.mu_wealth = 2.0 * base.prefs.mu_wealth;

    REQUIRE(demand_shifter(doubled.prefs, doubled.policy) ==
            2.0 * demand_shifter(base.prefs, base.policy));
    REQUIRE(solve(doubled).theta == solve(base).theta);
}

TEST_CASE("tighter money weakens demand and raises unemployment", "[equilibrium]") {
    ModelParams p = default_params();
    const Equilibrium base = solve(p);
    p.policy.i = 0.0045;
    const Equilibrium tighter = solve(p);
    REQUIRE(tighter.theta < base.theta);
    REQUIRE(tighter.u > base.u);
    REQUIRE(tighter.y < base.y);
}

TEST_CASE("flow utility needs positive consumption", "[equilibrium]") {
    const ModelParams p = default_params();
    // Vacancies so large that recruiting eats all of output.
    REQUIRE_THROWS_AS(flow_welfare(0.05, 10.0, p.prefs, p.endow, p.matching),
                      domain_error);
}

TEST_CASE("solver honours the requested tolerance", "[equilibrium]") {
    const ModelParams p = default_params();
    const Equilibrium fine = solve(p, 1e-14);
    const Equilibrium coarse = solve(p, 1e-6);
    REQUIRE(std::fabs(fine.theta - coarse.theta) <= 1e-5 * fine.theta);
    REQUIRE(fine.residual <= coarse.residual + 1e-12);
}
