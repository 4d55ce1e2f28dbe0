#pragma once

#include <cmath>

#include "adas/equilibrium.hpp"
#include "adas/errors.hpp"
#include "adas/matching.hpp"
#include "adas/root_finding.hpp"

namespace adas {

// Elasticity of Beveridge-curve vacancies with respect to unemployment
// (in absolute value): (1/(1-eta)) * (eta + lambda/f(theta)).
inline double beveridge_elasticity(double theta, const MatchingParams& m) {
    if (!(theta > 0.0))
        throw domain_error("Beveridge elasticity needs strictly positive tightness");
    const double f = job_finding_rate(theta, m);
    return (m.eta + m.lambda / f) / (1.0 - m.eta);
}

// Tightness maximising steady-state consumption over the Beveridge curve.
// First-order condition: (kappa/(1-eta)) * (eta*theta + lambda/q(theta)) = 1.
// The left side climbs from 0 past 1 on (0, theta_tau), so the root is
// unique and interior. Without recruiting costs there is nothing to trade
// off and no interior optimum.
inline double efficient_tightness(const MatchingParams& m) {
    m.validate();
    if (m.kappa == 0.0)
        throw config_error("efficient tightness is undefined when recruiting is free (kappa = 0)");

    auto foc = [&m](double theta) {
        return m.kappa / (1.0 - m.eta) *
                   (m.eta * theta + m.lambda / vacancy_filling_rate(theta, m)) -
               1.0;
    };

    const double cap = theta_tau(m);
    double lo = cap * 1e-12;
    while (foc(lo) >= 0.0 && lo > 1e-290) lo /= 16.0;
    return bisect(foc, lo, cap, {1e-14, 200});
}

struct EfficiencyReport {
    double theta_star;      // welfare-maximising tightness
    double u_star;          // efficient unemployment rate
    double v_star;          // efficient vacancy level
    double epsilon_at_star; // Beveridge elasticity at the optimum
    double gap;             // actual minus efficient unemployment rate
};

// The unemployment gap is the single number policy tries to close. At the
// optimum the sufficient-statistic form kappa * epsilon * theta_star = 1
// holds, which the tests exploit as an independent cross-check.
inline EfficiencyReport efficiency_report(const ModelParams& p) {
    EfficiencyReport r;
    r.theta_star = efficient_tightness(p.matching);
    r.u_star = beveridge_unemployment(r.theta_star, p.matching);
    r.v_star = vacancies_on_beveridge(r.u_star, p.matching, p.endow.l);
    r.epsilon_at_star = beveridge_elasticity(r.theta_star, p.matching);
    r.gap = solve(p).u - r.u_star;
    return r;
}

} // namespace adas
