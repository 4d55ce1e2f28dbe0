#pragma once

#include <string>
#include <vector>

namespace adas {

// One classic fourth-order Runge-Kutta step for a scalar ODE y' = f(t, y).
template <class F>
double rk4_step(F&& f, double t, double y, double dt) {
    const double k1 = f(t, y);
    const double k2 = f(t + 0.5 * dt, y + 0.5 * dt * k1);
    const double k3 = f(t + 0.5 * dt, y + 0.5 * dt * k2);
    const double k4 = f(t + dt, y + dt * k3);
    return y + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// A sampled trajectory. Integrators that hit their truncation bound stop
// early and flag it instead of emitting non-finite samples.
struct TimePath {
    std::string state_label;
    std::vector<double> times;
    std::vector<double> values;
    bool truncated = false;
};

} // namespace adas
