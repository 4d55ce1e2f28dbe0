#pragma once

#include <cmath>
#include <limits>

#include "adas/errors.hpp"

namespace adas {

// Labour market with Cobb-Douglas matching. Hiring one worker ties up
// kappa recruiters for 1/q(theta) months, which is what makes demand
// shortfalls show up as unemployment instead of pure price movements.
// All rates are monthly.
struct MatchingParams {
    double mu;     // matching efficacy
    double eta;    // elasticity of matching with respect to jobseekers
    double lambda; // job-separation rate
    double kappa;  // recruiters tied up per vacancy; 0 means free recruiting

    void validate() const {
        if (!(std::isfinite(mu) && mu > 0.0))
            throw config_error("matching efficacy mu must be positive and finite");
        if (!(std::isfinite(eta) && eta > 0.0 && eta < 1.0))
            throw config_error("matching elasticity eta must lie strictly inside (0,1)");
        if (!(std::isfinite(lambda) && lambda > 0.0))
            throw config_error("separation rate lambda must be positive and finite");
        if (!(std::isfinite(kappa) && kappa >= 0.0))
            throw config_error("recruiting cost kappa must be non-negative and finite");
    }
};

// Monthly rate at which a jobseeker finds work, f(theta) = mu * theta^(1-eta).
inline double job_finding_rate(double theta, const MatchingParams& p) {
    if (!(theta >= 0.0))
        throw domain_error("job-finding rate needs non-negative tightness");
    return p.mu * std::pow(theta, 1.0 - p.eta);
}

// Monthly rate at which a vacancy is filled, q(theta) = mu * theta^(-eta).
// Diverges as theta -> 0, so zero tightness is out of domain.
inline double vacancy_filling_rate(double theta, const MatchingParams& p) {
    if (!(theta > 0.0))
        throw domain_error("vacancy-filling rate needs strictly positive tightness");
    return p.mu * std::pow(theta, -p.eta);
}

// Unemployment rate on the Beveridge curve: inflows lambda*(1-u) equal
// outflows f(theta)*u, so u = lambda / (lambda + f(theta)).
inline double beveridge_unemployment(double theta, const MatchingParams& p) {
    const double f = job_finding_rate(theta, p);
    return p.lambda / (p.lambda + f);
}

// Tightness that sustains unemployment rate u on the Beveridge curve
// (inverse of beveridge_unemployment).
inline double beveridge_tightness(double u, const MatchingParams& p) {
    if (!(u > 0.0 && u < 1.0))
        throw domain_error("unemployment rate must lie strictly inside (0,1)");
    const double f = p.lambda * (1.0 - u) / u;
    return std::pow(f / p.mu, 1.0 / (1.0 - p.eta));
}

// Tightness at which recruiting absorbs the entire hiring flow:
// q(theta_tau) = kappa * lambda. Economic activity cannot be sustained
// beyond it. Infinite when recruiting is free.
inline double theta_tau(const MatchingParams& p) {
    p.validate();
    if (p.kappa == 0.0) return std::numeric_limits<double>::infinity();
    return std::pow(p.mu / (p.kappa * p.lambda), 1.0 / p.eta);
}

// Recruiting wedge tau(theta): maintaining one filled job requires
// kappa*lambda/q(theta) recruiters per producer, so output y splits into
// consumption y/(1+tau) and recruiting services. Zero at theta = 0,
// diverges at theta_tau.
inline double recruiting_wedge(double theta, const MatchingParams& p) {
    if (!(theta >= 0.0))
        throw domain_error("recruiting wedge needs non-negative tightness");
    if (theta == 0.0 || p.kappa == 0.0) return 0.0;
    const double hire_cost = p.kappa * p.lambda;
    const double q = vacancy_filling_rate(theta, p);
    if (q <= hire_cost)
        throw domain_error("tightness at or beyond the recruiting capacity theta_tau");
    return hire_cost / (q - hire_cost);
}

// Vacancies consistent with unemployment u on the Beveridge curve, for a
// labour force of size l. Obtained from theta = v/(u*l).
inline double vacancies_on_beveridge(double u, const MatchingParams& p, double labour_force) {
    if (!(labour_force > 0.0))
        throw domain_error("labour force must be positive");
    return beveridge_tightness(u, p) * u * labour_force;
}

} // namespace adas
