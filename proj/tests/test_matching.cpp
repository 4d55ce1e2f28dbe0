#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "adas/adas.hpp"
#include "oracles.hpp"

using namespace adas;

static MatchingParams base_matching() { return MatchingParams{0.60, 0.5, 0.035, 0.92}; }

TEST_CASE("matching parameter validation", "[matching]") {
    MatchingParams m = base_matching();
    REQUIRE_NOTHROW(m.validate());

    SECTION("efficiency scale must be positive") {
        m.mu = 0.0;
        REQUIRE_THROWS_AS(m.validate(), config_error);
        m.mu = -0.3;
        REQUIRE_THROWS_AS(m.validate(), config_error);
    }
    SECTION("elasticity must lie strictly inside the unit interval") {
        m.eta = 0.0;
        REQUIRE_THROWS_AS(m.validate(), config_error);
        m.eta = 1.0;
        REQUIRE_THROWS_AS(m.validate(), config_error);
    }
    SECTION("separation rate must be positive") {
        m.lambda = 0.0;
        REQUIRE_THROWS_AS(m.validate(), config_error);
    }
    SECTION("recruiting cost may be zero but not negative") {
        m.kappa = 0.0;
        REQUIRE_NOTHROW(m.validate());
        m.kappa = -0.1;
        REQUIRE_THROWS_AS(m.validate(), config_error);
    }
}

TEST_CASE("finding and filling rates follow the constant-returns form", "[matching]") {
    const MatchingParams m = base_matching();

    // At theta = 1 both rates collapse to the efficiency scale, exactly.
    REQUIRE(job_finding_rate(1.0, m) == m.mu);
    REQUIRE(vacancy_filling_rate(1.0, m) == m.mu);

    // No searchers matched when no vacancies are posted.
    REQUIRE(job_finding_rate(0.0, m) == 0.0);

    std::mt19937_64 rng(811);
    std::uniform_real_distribution<double> dist(0.01, 50.0);
    for (int k = 0; k < 200; ++k) {
        const double theta = dist(rng);
        const double f = job_finding_rate(theta, m);
        const double q = vacancy_filling_rate(theta, m);
        REQUIRE(f == Catch::Approx(m.mu * std::pow(theta, 1.0 - m.eta)).epsilon(1e-14));
        REQUIRE(q == Catch::Approx(m.mu * std::pow(theta, -m.eta)).epsilon(1e-14));
        // One market, two sides: f = theta q.
        REQUIRE(f == Catch::Approx(theta * q).epsilon(1e-14));
    }

    REQUIRE_THROWS_AS(job_finding_rate(-1e-9, m), domain_error);
    REQUIRE_THROWS_AS(vacancy_filling_rate(0.0, m), domain_error);
    REQUIRE_THROWS_AS(vacancy_filling_rate(-2.0, m), domain_error);
}

TEST_CASE("flow-balance unemployment and its inverse", "[matching]") {
    const MatchingParams m = base_matching();

    std::mt19937_64 rng(812);
    std::uniform_real_distribution<double> dist(1e-6, 40.0);
    double prev_u = 1.0;
    for (int k = 0; k < 100; ++k) {
        const double theta = dist(rng);
        const double f = job_finding_rate(theta, m);
        const double u = beveridge_unemployment(theta, m);
        REQUIRE(u == Catch::Approx(m.lambda / (m.lambda + f)).epsilon(1e-14));
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
        REQUIRE(beveridge_tightness(u, m) == Catch::Approx(theta).epsilon(1e-12));
    }

    // More tightness, less unemployment.
    for (double theta = 0.1; theta < 10.0; theta *= 1.7) {
        const double u = beveridge_unemployment(theta, m);
        REQUIRE(u < prev_u);
        prev_u = u;
    }

    REQUIRE_THROWS_AS(beveridge_tightness(0.0, m), domain_error);
    REQUIRE_THROWS_AS(beveridge_tightness(1.0, m), domain_error);
    REQUIRE_THROWS_AS(beveridge_tightness(-0.1, m), domain_error);
}

TEST_CASE("recruiting capacity bound", "[matching]") {
    const MatchingParams m = base_matching();
    const double cap = theta_tau(m);

    // At the bound, one filled vacancy per hire goes straight back into
    // recruiting: q(theta_tau) = kappa * lambda.
    REQUIRE(vacancy_filling_rate(cap, m) ==
            Catch::Approx(m.kappa * m.lambda).epsilon(1e-12));

    MatchingParams free = m;
    free.kappa = 0.0;
    REQUIRE(std::isinf(theta_tau(free)));
}

TEST_CASE("recruiting wedge", "[matching]") {
    const MatchingParams m = base_matching();
    const double cap = theta_tau(m);

    REQUIRE(recruiting_wedge(0.0, m) == 0.0);

    std::mt19937_64 rng(813);
    std::uniform_real_distribution<double> dist(1e-8, 1.0 - 1e-9);
    double prev = -1.0;
    for (int k = 0; k < 100; ++k) {
        const double theta = dist(rng) * cap;
        const double q = vacancy_filling_rate(theta, m);
        const double tau = recruiting_wedge(theta, m);
        REQUIRE(tau == Catch::Approx(m.kappa * m.lambda / (q - m.kappa * m.lambda))
                           .epsilon(1e-13));
        REQUIRE(tau >= 0.0);
    }

    // Monotone increasing toward the capacity bound, exploding at it.
    for (double s = 0.1; s < 0.999; s += 0.1) {
        const double tau = recruiting_wedge(s * cap, m);
        REQUIRE(tau > prev);
        prev = tau;
    }
    REQUIRE(recruiting_wedge(cap * (1.0 - 1e-12), m) > 1e6);
    REQUIRE_THROWS_AS(recruiting_wedge(cap * 1.01, m), domain_error);

    // Free recruiting never eats output.
    MatchingParams free = m;
    free.kappa = 0.0;
    REQUIRE(recruiting_wedge(5.0, free) == 0.0);
    REQUIRE(recruiting_wedge(1e12, free) == 0.0);
}

TEST_CASE("vacancies consistent with flow balance", "[matching]") {
    const MatchingParams m = base_matching();
    const double l = 1.0;
    std::mt19937_64 rng(814);
    std::uniform_real_distribution<double> dist(0.02, 0.5);
    for (int k = 0; k < 50; ++k) {
        const double u = dist(rng);
        const double v = vacancies_on_beveridge(u, m, l);
        REQUIRE(v == Catch::Approx(oracle::v_ref(u, m, l)).epsilon(1e-12));
        REQUIRE(v == Catch::Approx(beveridge_tightness(u, m) * u * l).epsilon(1e-13));
    }
}
