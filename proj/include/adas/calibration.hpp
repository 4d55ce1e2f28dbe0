#pragma once

#include "adas/equilibrium.hpp"

namespace adas {

// Monthly US calibration. The marginal utility of wealth is backed out so
// the economy sits at 6% unemployment, which is why it is filled in last.
inline ModelParams default_params() {
    ModelParams p;
    p.matching = {0.60, 0.5, 0.035, 0.92};   // mu, eta, lambda, kappa
    p.prefs = {2.0, 0.004, 0.0, 0.0};        // sigma, delta, mu_wealth (set below), x0
    p.endow = {1.0, 1.0};                    // a, l
    p.policy = {0.004, 0.002, 0.0};          // i, pi, tau_w
    p.prefs.mu_wealth = calibrate_demand(0.06, p);
    return p;
}

} // namespace adas
