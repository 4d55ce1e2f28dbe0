#pragma once

#include <cmath>
#include <string>

#include "adas/curves.hpp"
#include "adas/equilibrium.hpp"
#include "adas/errors.hpp"
#include "adas/matching.hpp"
#include "adas/ode.hpp"

namespace adas {

namespace detail {

inline long step_count(double horizon, double dt) {
    if (!(std::isfinite(horizon) && horizon > 0.0))
        throw domain_error("horizon must be positive");
    if (!(std::isfinite(dt) && dt > 0.0))
        throw domain_error("time step must be positive");
    const long n = std::lround(horizon / dt);
    if (n < 1)
        throw domain_error("horizon shorter than one time step");
    return n;
}

} // namespace detail

// Unemployment off the Beveridge curve converges back at rate lambda +
// f(theta): du/dt = lambda*(1-u) - f(theta)*u, holding tightness fixed.
inline TimePath integrate_unemployment(double u0, double theta, const MatchingParams& m,
                                       double horizon, double dt = 0.01) {
    m.validate();
    if (!(u0 > 0.0 && u0 < 1.0))
        throw domain_error("initial unemployment rate must lie strictly inside (0,1)");
    const double f = job_finding_rate(theta, m);
    if (dt * (m.lambda + f) > 0.5)
        throw domain_error("time step too coarse for the flow rates (dt*(lambda+f) > 0.5)");
    const long n = detail::step_count(horizon, dt);

    auto du = [&](double, double u) { return m.lambda * (1.0 - u) - f * u; };

    TimePath path;
    path.state_label = "u";
    path.times.reserve(n + 1);
    path.values.reserve(n + 1);
    double u = u0;
    path.times.push_back(0.0);
    path.values.push_back(u);
    for (long k = 0; k < n; ++k) {
        u = rk4_step(du, k * dt, u, dt);
        path.times.push_back((k + 1) * dt);
        path.values.push_back(u);
    }
    return path;
}

enum class PhaseClass { stationary, diverges_up, diverges_down };

struct PhasePath {
    TimePath path;
    PhaseClass classification;
    double critical_point; // the stationary marginal utility gamma0
};

inline const char* to_string(PhaseClass c) {
    switch (c) {
        case PhaseClass::stationary: return "stationary";
        case PhaseClass::diverges_up: return "diverges_up";
        case PhaseClass::diverges_down: return "diverges_down";
    }
    return "stationary";
}

// Phase line of the marginal utility of consumption along the Euler
// equation: dgamma/dt = (delta - r + tau_w)*gamma - mu_wealth. The
// critical point gamma0 is a source, so anything off it diverges; paths
// are truncated once they pass 1e9 * gamma0 in magnitude. Only the
// stationary solution is a valid equilibrium path.
inline PhasePath costate_phase_line(double gamma_init, const PreferenceParams& pr,
                                    const PolicyParams& pol, double horizon, double dt = 0.01) {
    pr.validate();
    pol.validate();
    const double k = demand_shifter(pr, pol);
    if (!(k > 0.0))
        throw config_error("discount rate must exceed the after-tax real return (delta > r - tau_w)");
    if (!(std::isfinite(gamma_init) && gamma_init > 0.0))
        throw domain_error("initial marginal utility must be positive");
    if (dt * k > 0.5)
        throw domain_error("time step too coarse for the costate dynamics (dt*(delta-r+tau_w) > 0.5)");
    const long n = detail::step_count(horizon, dt);

    PhasePath out;
    out.critical_point = pr.mu_wealth / k;
    if (std::fabs(gamma_init - out.critical_point) <= 1e-12 * out.critical_point)
        out.classification = PhaseClass::stationary;
    else if (gamma_init > out.critical_point)
        out.classification = PhaseClass::diverges_up;
    else
        out.classification = PhaseClass::diverges_down;

    auto dgamma = [&](double, double g) { return k * g - pr.mu_wealth; };
    const double bound = 1e9 * out.critical_point;

    out.path.state_label = "gamma";
    out.path.times.reserve(n + 1);
    out.path.values.reserve(n + 1);
    double g = gamma_init;
    out.path.times.push_back(0.0);
    out.path.values.push_back(g);
    for (long kstep = 0; kstep < n; ++kstep) {
        g = rk4_step(dgamma, kstep * dt, g, dt);
        if (std::fabs(g) > bound) {
            out.path.truncated = true;
            break;
        }
        out.path.times.push_back((kstep + 1) * dt);
        out.path.values.push_back(g);
    }
    return out;
}

struct FiscalRule {
    enum class Mode { balance_debt, explicit_path };
    Mode mode = Mode::balance_debt;
    double real_tax = 0.0; // constant real lump-sum tax T/p, explicit_path only

    // The tax that services the return on the initial wealth position,
    // keeping real wealth flat at w0.
    static FiscalRule balance_debt() { return {Mode::balance_debt, 0.0}; }
    static FiscalRule explicit_path(double real_tax) { return {Mode::explicit_path, real_tax}; }
};

struct WealthPaths {
    TimePath w; // real wealth
    TimePath b; // nominal wealth, b = p * w
    TimePath p; // price level, p(t) = exp(pi * t)
};

// Household budget at a fixed equilibrium allocation: dw/dt =
// (r - tau_w)*w + y - (1+tau)*c - T/p. Output equals spending in
// equilibrium, so wealth only moves with the return and the tax.
inline WealthPaths wealth_path(double w0, const Equilibrium& eq, const FiscalRule& fiscal,
                               const PolicyParams& pol, double horizon, double dt = 0.01) {
    pol.validate();
    if (!std::isfinite(w0))
        throw domain_error("initial wealth must be finite");
    const double ret = eq.r - pol.tau_w;
    if (dt * std::fabs(ret) > 0.5)
        throw domain_error("time step too coarse for the wealth dynamics");
    const long n = detail::step_count(horizon, dt);

    const double tax =
        fiscal.mode == FiscalRule::Mode::balance_debt ? ret * w0 : fiscal.real_tax;
    const double net_income = eq.y - (1.0 + eq.wedge) * eq.c;
    auto dw = [&](double, double w) { return ret * w + net_income - tax; };

    WealthPaths out;
    out.w.state_label = "w";
    out.b.state_label = "b";
    out.p.state_label = "p";
    double w = w0;
    for (long k = 0; k <= n; ++k) {
        const double t = k * dt;
        const double price = std::exp(pol.pi * t);
        out.w.times.push_back(t);
        out.w.values.push_back(w);
        out.p.times.push_back(t);
        out.p.values.push_back(price);
        out.b.times.push_back(t);
        out.b.values.push_back(price * w);
        if (k < n) w = rk4_step(dw, t, w, dt);
    }
    return out;
}

} // namespace adas
