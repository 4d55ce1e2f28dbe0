#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "adas/errors.hpp"
#include "adas/matching.hpp"

namespace adas {

// Households hold wealth for its own sake; marginal utility of the first
// unit of real wealth, mu_wealth, anchors aggregate demand. x0 is the
// utility level of zero wealth and only shifts welfare, never behaviour.
struct PreferenceParams {
    double sigma;     // elasticity of intertemporal substitution, > 1
    double delta;     // subjective discount rate, monthly
    double mu_wealth; // marginal utility of wealth at zero, x'(0)
    double x0;        // utility of zero wealth, x(0)

    void validate() const {
        if (!(std::isfinite(sigma) && sigma > 1.0))
            throw config_error("elasticity of substitution sigma must exceed 1");
        if (!(std::isfinite(delta) && delta > 0.0))
            throw config_error("discount rate delta must be positive");
        if (!(std::isfinite(mu_wealth) && mu_wealth > 0.0))
            throw config_error("marginal utility of wealth mu_wealth must be positive");
        if (!std::isfinite(x0))
            throw config_error("baseline wealth utility x0 must be finite");
    }
};

struct EndowmentParams {
    double a; // labour productivity
    double l; // labour force

    void validate() const {
        if (!(std::isfinite(a) && a > 0.0))
            throw config_error("productivity a must be positive");
        if (!(std::isfinite(l) && l > 0.0))
            throw config_error("labour force l must be positive");
    }
};

struct PolicyParams {
    double i;     // nominal interest rate, monthly
    double pi;    // inflation rate, fixed
    double tau_w; // linear tax on wealth returns

    // Inflation is rigid here, so the central bank controls the real rate
    // one for one until i hits zero.
    double real_rate() const { return i - pi; }

    void validate() const {
        if (!(std::isfinite(i) && i >= 0.0))
            throw config_error("nominal rate i must be non-negative (zero lower bound)");
        if (!std::isfinite(pi))
            throw config_error("inflation rate pi must be finite");
        if (!(std::isfinite(tau_w) && tau_w >= 0.0))
            throw config_error("wealth tax tau_w must be non-negative");
    }
};

// Output produced when the labour market sits on the Beveridge curve at
// tightness theta: y = a * (1-u(theta)) * l. Rises from 0 towards a*l.
inline double as_output(double theta, const MatchingParams& m, const EndowmentParams& e) {
    const double u = beveridge_unemployment(theta, m);
    return e.a * (1.0 - u) * e.l;
}

// Demand shifter delta - r + tau_w. Demand only exists when holding wealth
// costs something relative to impatience, i.e. when this is positive.
inline double demand_shifter(const PreferenceParams& pr, const PolicyParams& pol) {
    return pr.delta - pol.real_rate() + pol.tau_w;
}

// Output demanded at zero tightness, [(delta - r + tau_w)/mu_wealth]^sigma.
inline double ad_intercept(const PreferenceParams& pr, const PolicyParams& pol) {
    const double k = demand_shifter(pr, pol);
    if (!(k > 0.0))
        throw config_error("discount rate must exceed the after-tax real return (delta > r - tau_w)");
    return std::pow(k / pr.mu_wealth, pr.sigma);
}

// Output demanded at tightness theta. Households equate the marginal rate
// of substitution between consumption and wealth to the cost of holding
// wealth; recruiting inflates the price of consumption by 1+tau(theta), so
// demand falls in theta and vanishes at theta_tau. The curve is evaluated
// only up to a hair below the pole.
inline double ad_output(double theta, const PreferenceParams& pr, const PolicyParams& pol,
                        const MatchingParams& m) {
    if (!(theta >= 0.0))
        throw domain_error("aggregate demand needs non-negative tightness");
    const double cap = theta_tau(m);
    if (std::isfinite(cap) && theta > cap * (1.0 - 1e-9))
        throw domain_error("tightness beyond the demand curve's domain (recruiting pole)");
    const double tau = recruiting_wedge(theta, m);
    return ad_intercept(pr, pol) * std::pow(1.0 + tau, 1.0 - pr.sigma);
}

// Demand when monetary policy is pinned at the zero lower bound: same
// curve with i = 0, so r = -pi.
inline double zlb_ad_output(double theta, const PreferenceParams& pr, const PolicyParams& pol,
                            const MatchingParams& m) {
    PolicyParams floor = pol;
    floor.i = 0.0;
    return ad_output(theta, pr, floor, m);
}

struct CurvePoint {
    double theta;
    double as;
    double ad;
    double zlb_ad;
    bool valid; // false where theta fell outside the demand curve's domain
};

// Evaluate all three curves on an arbitrary tightness grid. Grid points
// beyond theta_tau produce invalid rows rather than aborting the sweep.
inline std::vector<CurvePoint> sample_curves(std::span<const double> grid,
                                             const MatchingParams& m,
                                             const PreferenceParams& pr,
                                             const PolicyParams& pol,
                                             const EndowmentParams& e) {
    m.validate();
    pr.validate();
    pol.validate();
    e.validate();
    if (!(demand_shifter(pr, pol) > 0.0))
        throw config_error("discount rate must exceed the after-tax real return (delta > r - tau_w)");
    std::vector<CurvePoint> out;
    out.reserve(grid.size());
    for (double theta : grid) {
        CurvePoint p{theta, 0.0, 0.0, 0.0, true};
        try {
            p.as = as_output(theta, m, e);
            p.ad = ad_output(theta, pr, pol, m);
            p.zlb_ad = zlb_ad_output(theta, pr, pol, m);
        } catch (const domain_error&) {
            p.valid = false;
            p.as = p.ad = p.zlb_ad = std::numeric_limits<double>::quiet_NaN();
        }
        out.push_back(p);
    }
    return out;
}

} // namespace adas
