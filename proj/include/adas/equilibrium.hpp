#pragma once

#include <cmath>
#include <limits>

#include "adas/curves.hpp"
#include "adas/errors.hpp"
#include "adas/matching.hpp"
#include "adas/root_finding.hpp"

namespace adas {

struct ModelParams {
    MatchingParams matching;
    PreferenceParams prefs;
    EndowmentParams endow;
    PolicyParams policy;

    void validate() const {
        matching.validate();
        prefs.validate();
        endow.validate();
        policy.validate();
        if (!(demand_shifter(prefs, policy) > 0.0))
            throw config_error("discount rate must exceed the after-tax real return (delta > r - tau_w)");
    }
};

struct Equilibrium {
    double theta;        // labour-market tightness clearing output
    double y;            // output
    double u;            // unemployment rate
    double n;            // employment
    double v;            // vacancies
    double c;            // consumption of produced services
    double wedge;        // recruiting wedge tau(theta)
    double r;            // real interest rate
    double gamma0;       // stationary marginal utility of consumption
    double welfare_flow; // flow utility at the equilibrium allocation
    double residual;     // |AS - AD| at the solved tightness
};

// Flow utility of an allocation on the Beveridge curve: consumption is
// what remains of output after recruiting, a*((1-u)l - kappa*v).
inline double flow_welfare(double u, double v, const PreferenceParams& pr,
                           const EndowmentParams& e, const MatchingParams& m) {
    const double c = e.a * ((1.0 - u) * e.l - m.kappa * v);
    if (!(c > 0.0))
        throw domain_error("recruiting absorbs all output; consumption must stay positive");
    return pr.sigma / (pr.sigma - 1.0) * std::pow(c, (pr.sigma - 1.0) / pr.sigma) + pr.x0;
}

inline double flow_welfare(const Equilibrium& eq, const PreferenceParams& pr,
                           const EndowmentParams& e, const MatchingParams& m) {
    return flow_welfare(eq.u, eq.v, pr, e, m);
}

// Market-clearing tightness: unique crossing of the supply and demand
// curves. Supply rises from 0 to a*l, demand falls from its intercept to 0
// at theta_tau, so a sign change always exists and bisection is safe.
inline Equilibrium solve(const ModelParams& p, double rel_tol = 1e-12) {
    p.validate();

    auto excess_supply = [&p](double theta) {
        return as_output(theta, p.matching, p.endow) -
               ad_output(theta, p.prefs, p.policy, p.matching);
    };

    const double cap = theta_tau(p.matching);
    double hi;
    if (std::isfinite(cap)) {
        hi = cap * (1.0 - 1e-9);
    } else {
        // Free recruiting: demand is flat, so expand until supply overtakes it.
        hi = 1.0;
        while (excess_supply(hi) <= 0.0 && hi < 1e15) hi *= 4.0;
        if (excess_supply(hi) <= 0.0)
            throw config_error("demand exceeds capacity a*l at every tightness; no market clearing");
    }

    // Depressed calibrations can clear at tiny tightness; push the floor
    // down geometrically until it sits below the crossing.
    double lo = 1e-12;
    while (excess_supply(lo) >= 0.0 && lo > 1e-290) lo /= 16.0;

    const double theta = bisect(excess_supply, lo, hi, {rel_tol, 200});

    Equilibrium eq;
    eq.theta = theta;
    eq.u = beveridge_unemployment(theta, p.matching);
    eq.n = (1.0 - eq.u) * p.endow.l;
    eq.y = p.endow.a * eq.n;
    eq.v = theta * (p.endow.l - eq.n);
    eq.wedge = recruiting_wedge(theta, p.matching);
    eq.c = eq.y / (1.0 + eq.wedge);
    eq.r = p.policy.real_rate();
    eq.gamma0 = p.prefs.mu_wealth / demand_shifter(p.prefs, p.policy);
    eq.welfare_flow = flow_welfare(eq.u, eq.v, p.prefs, p.endow, p.matching);
    eq.residual = std::fabs(excess_supply(theta));
    return eq;
}

// Marginal utility of wealth needed for the demand curve to cross supply
// at the tightness sustaining target_u. Closed form: on the Euler
// equation, c^(-1/sigma) = gamma0 * (1 + tau), with c read off supply.
inline double calibrate_demand(double target_u, const ModelParams& p) {
    p.matching.validate();
    p.endow.validate();
    p.policy.validate();
    if (!(std::isfinite(p.prefs.sigma) && p.prefs.sigma > 1.0))
        throw config_error("elasticity of substitution sigma must exceed 1");
    if (!(std::isfinite(p.prefs.delta) && p.prefs.delta > 0.0))
        throw config_error("discount rate delta must be positive");
    if (!(target_u > 0.0 && target_u < 1.0))
        throw domain_error("target unemployment rate must lie strictly inside (0,1)");

    const double k = demand_shifter(p.prefs, p.policy);
    if (!(k > 0.0))
        throw config_error("discount rate must exceed the after-tax real return (delta > r - tau_w)");

    const double theta = beveridge_tightness(target_u, p.matching);
    const double cap = theta_tau(p.matching);
    if (std::isfinite(cap) && theta > cap * (1.0 - 1e-9))
        throw domain_error("target unemployment rate needs tightness beyond the recruiting pole");

    const double supply = as_output(theta, p.matching, p.endow);
    const double tau = recruiting_wedge(theta, p.matching);
    const double c = supply / (1.0 + tau);
    return k * std::pow(c, -1.0 / p.prefs.sigma) / (1.0 + tau);
}

// Split of the unemployment rate into a Keynesian part (output demanded at
// zero tightness falling short of capacity) and a frictional remainder.
struct UnemploymentSplit {
    double keynesian;
    double frictional;
};

inline UnemploymentSplit decompose_unemployment(const ModelParams& p) {
    const Equilibrium eq = solve(p);
    const double capacity = p.endow.a * p.endow.l;
    const double u_k = std::fmax(0.0, 1.0 - ad_intercept(p.prefs, p.policy) / capacity);
    return {u_k, eq.u - u_k};
}

// In equilibrium each match must be worth forming for both sides. The
// worker's side is free (leisure is worth nothing here); the firm's side
// holds when consuming marginal output beats holding wealth, i.e.
// c^(-1/sigma) > gamma0.
struct SurplusCheck {
    double margin;       // c^(-1/sigma) - gamma0
    double euler_gap;    // relative error in c^(-1/sigma) = gamma0*(1+tau)
    bool positive;
};

inline SurplusCheck bilateral_surplus_check(const Equilibrium& eq, const PreferenceParams& pr) {
    const double mu_c = std::pow(eq.c, -1.0 / pr.sigma);
    SurplusCheck s;
    s.margin = mu_c - eq.gamma0;
    s.euler_gap = std::fabs(mu_c - eq.gamma0 * (1.0 + eq.wedge)) / mu_c;
    s.positive = s.margin > 0.0;
    return s;
}

} // namespace adas
