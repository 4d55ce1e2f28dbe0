#pragma once

#include <cmath>
#include <limits>

#include "adas/efficiency.hpp"
#include "adas/equilibrium.hpp"
#include "adas/errors.hpp"
#include "adas/root_finding.hpp"

namespace adas {

enum class Instrument { nominal_rate, wealth_tax };

struct PolicyPrescription {
    Instrument instrument;
    double current_value;
    double optimal_value;
    double gap_before;          // unemployment gap before the move
    double gap_after_predicted; // residual gap the prescription expects to leave
    double multiplier_used;     // NaN when the prescription came from an exact search
    bool zlb_binding;
};

struct Multiplier {
    double value;
    double step;    // finite-difference step the estimate settled on
    bool one_sided; // true when a boundary blocked the centred stencil
};

namespace detail {

// Difference u(instrument) with a second-order stencil, halving the step
// until two successive estimates agree to 1e-6 relative. can_down/can_up
// say how much room the instrument has in each direction before it leaves
// the valid parameter space.
template <class UAt>
Multiplier differentiate(UAt&& u_at, double x0, double h, double room_down, double room_up) {
    if (!(h > 0.0) || !std::isfinite(h))
        throw domain_error("finite-difference step must be positive");

    // Shrink until at least one second-order stencil fits.
    while (2.0 * h > room_down && 2.0 * h > room_up) {
        h *= 0.5;
        if (h < 1e-12)
            throw domain_error("no room to differentiate: instrument is boxed in");
    }

    double u0 = std::numeric_limits<double>::quiet_NaN();
    auto estimate = [&](double step, bool& one_sided) {
        if (step <= room_down && step <= room_up) {
            one_sided = false;
            return (u_at(x0 + step) - u_at(x0 - step)) / (2.0 * step);
        }
        if (std::isnan(u0)) u0 = u_at(x0);
        one_sided = true;
        if (2.0 * step <= room_up)
            return (-3.0 * u0 + 4.0 * u_at(x0 + step) - u_at(x0 + 2.0 * step)) / (2.0 * step);
        return (3.0 * u0 - 4.0 * u_at(x0 - step) + u_at(x0 - 2.0 * step)) / (2.0 * step);
    };

    bool side = false;
    double prev = estimate(h, side);
    for (int it = 0; it < 40; ++it) {
        const double half = 0.5 * h;
        bool side2 = false;
        const double next = estimate(half, side2);
        if (std::fabs(next - prev) <= 1e-6 * std::fabs(next))
            return {next, half, side2};
        h = half;
        prev = next;
        side = side2;
        if (h < 1e-9) break;
    }
    return {prev, h, side};
}

} // namespace detail

// du/di: how much unemployment a rate hike creates. Positive, since a
// higher nominal rate raises the return on wealth and crowds out
// consumption. Steps that would cross the ZLB or push the real rate past
// the discount rate fall back to a one-sided stencil.
inline Multiplier monetary_multiplier(const ModelParams& p, double h = 1e-4) {
    p.validate();
    auto u_at = [&p](double i) {
        ModelParams q = p;
        q.policy.i = i;
        return solve(q).u;
    };
    const double room_down = p.policy.i;
    const double room_up = 0.5 * demand_shifter(p.prefs, p.policy);
    return detail::differentiate(u_at, p.policy.i, h, room_down, room_up);
}

// -du/dtau_w: the wealth tax works through the exact same demand shifter
// as the nominal rate, with the opposite sign and no lower bound above.
inline Multiplier tax_multiplier(const ModelParams& p, double h = 1e-4) {
    p.validate();
    auto u_at = [&p](double tau) {
        ModelParams q = p;
        q.policy.tau_w = tau;
        return -solve(q).u;
    };
    const double room_down = p.policy.tau_w;
    const double room_up = std::numeric_limits<double>::infinity();
    return detail::differentiate(u_at, p.policy.tau_w, h, room_down, room_up);
}

// First-order prescription: cut the rate by gap/multiplier, clipped at the
// zero lower bound. When the ZLB binds the residual gap is what the cut
// down to zero cannot absorb.
inline PolicyPrescription optimal_rate_sufficient_statistic(double gap, double multiplier,
                                                            double i_current) {
    if (!std::isfinite(gap))
        throw domain_error("unemployment gap must be finite");
    if (!(std::isfinite(multiplier) && multiplier > 0.0))
        throw domain_error("policy multiplier must be positive");
    if (!(std::isfinite(i_current) && i_current >= 0.0))
        throw domain_error("current nominal rate must be non-negative");

    PolicyPrescription out;
    out.instrument = Instrument::nominal_rate;
    out.current_value = i_current;
    out.gap_before = gap;
    out.multiplier_used = multiplier;
    const double target = i_current - gap / multiplier;
    out.zlb_binding = target < 0.0;
    out.optimal_value = out.zlb_binding ? 0.0 : target;
    out.gap_after_predicted = out.zlb_binding ? gap - multiplier * i_current : 0.0;
    return out;
}

// Same first-order logic for the wealth tax: raise it by gap/multiplier.
// No bound gets in the way, so the predicted residual gap is zero.
inline PolicyPrescription optimal_wealth_tax(double gap, double multiplier, double tau_current) {
    if (!std::isfinite(gap))
        throw domain_error("unemployment gap must be finite");
    if (!(std::isfinite(multiplier) && multiplier > 0.0))
        throw domain_error("policy multiplier must be positive");
    if (!(std::isfinite(tau_current) && tau_current >= 0.0))
        throw domain_error("current wealth tax must be non-negative");

    PolicyPrescription out;
    out.instrument = Instrument::wealth_tax;
    out.current_value = tau_current;
    out.optimal_value = tau_current + gap / multiplier;
    out.gap_before = gap;
    out.gap_after_predicted = 0.0;
    out.multiplier_used = multiplier;
    out.zlb_binding = false;
    return out;
}

// Exact search for the rate that closes the gap: u is increasing in i, so
// bisect u(i) = u_star over [0, i_max]. If even i = 0 leaves unemployment
// above u_star, the ZLB binds and zero is the best the rate can do.
inline PolicyPrescription optimal_rate_exact(const ModelParams& p, double rel_tol = 1e-12) {
    p.validate();
    const double u_star =
        beveridge_unemployment(efficient_tightness(p.matching), p.matching);
    auto u_at = [&p](double i) {
        ModelParams q = p;
        q.policy.i = i;
        return solve(q).u;
    };

    PolicyPrescription out;
    out.instrument = Instrument::nominal_rate;
    out.current_value = p.policy.i;
    out.gap_before = solve(p).u - u_star;
    out.multiplier_used = std::numeric_limits<double>::quiet_NaN();

    const double u_floor = u_at(0.0);
    if (u_floor > u_star) {
        out.optimal_value = 0.0;
        out.zlb_binding = true;
        out.gap_after_predicted = u_floor - u_star;
        return out;
    }

    const double i_max = p.prefs.delta + p.policy.pi - 1e-9;
    if (!(i_max > 0.0) || u_at(i_max) < u_star)
        throw domain_error("efficient unemployment is unreachable by the nominal rate alone");

    auto g = [&](double i) { return u_at(i) - u_star; };
    const double i_opt = bisect(g, 0.0, i_max, {rel_tol, 200});
    out.optimal_value = i_opt;
    out.zlb_binding = false;
    out.gap_after_predicted = u_at(i_opt) - u_star;
    return out;
}

// Exact search for the wealth tax closing the gap, holding i fixed. u is
// decreasing in tau_w and tends to the Beveridge-curve minimum as the tax
// grows, which lies below u_star, so an upper bracket always exists.
inline PolicyPrescription optimal_wealth_tax_exact(const ModelParams& p, double rel_tol = 1e-12) {
    p.validate();
    const double u_star =
        beveridge_unemployment(efficient_tightness(p.matching), p.matching);
    auto u_at = [&p](double tau) {
        ModelParams q = p;
        q.policy.tau_w = tau;
        return solve(q).u;
    };

    PolicyPrescription out;
    out.instrument = Instrument::wealth_tax;
    out.current_value = p.policy.tau_w;
    out.gap_before = solve(p).u - u_star;
    out.multiplier_used = std::numeric_limits<double>::quiet_NaN();
    out.zlb_binding = false;

    auto g = [&](double tau) { return u_at(tau) - u_star; };
    if (g(0.0) < 0.0)
        throw domain_error("closing the gap would need a wealth subsidy (tau_w < 0)");

    double hi = std::fmax(1e-3, 2.0 * p.policy.tau_w);
    while (g(hi) > 0.0 && hi < 1e9) hi *= 2.0;
    if (g(hi) > 0.0)
        throw numeric_error("failed to bracket the gap-closing wealth tax");

    const double tau_opt = bisect(g, 0.0, hi, {rel_tol, 200});
    out.optimal_value = tau_opt;
    out.gap_after_predicted = u_at(tau_opt) - u_star;
    return out;
}

} // namespace adas
