#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "adas/efficiency.hpp"
#include "adas/equilibrium.hpp"
#include "adas/errors.hpp"

namespace adas {

// Parameters a one-off shock can hit. Preference and endowment shocks move
// the curves; policy shocks move only demand.
enum class ShockTarget { delta, mu_wealth, a, l, i, tau_w };

enum class ShockDirection { increase, decrease };

enum class ShockKind { relative, absolute };

struct Shock {
    ShockTarget target;
    ShockDirection direction;
    double magnitude; // positive; fraction for relative, level for absolute
    ShockKind kind;
};

inline const char* to_string(ShockTarget t) {
    switch (t) {
        case ShockTarget::delta: return "delta";
        case ShockTarget::mu_wealth: return "mu_wealth";
        case ShockTarget::a: return "a";
        case ShockTarget::l: return "l";
        case ShockTarget::i: return "i";
        case ShockTarget::tau_w: return "tau_w";
    }
    return "delta";
}

inline const char* to_string(ShockDirection d) {
    return d == ShockDirection::increase ? "increase" : "decrease";
}

inline const char* to_string(ShockKind k) {
    return k == ShockKind::relative ? "relative" : "absolute";
}

inline ShockTarget shock_target_from_string(const std::string& s) {
    if (s == "delta") return ShockTarget::delta;
    if (s == "mu_wealth") return ShockTarget::mu_wealth;
    if (s == "a") return ShockTarget::a;
    if (s == "l") return ShockTarget::l;
    if (s == "i") return ShockTarget::i;
    if (s == "tau_w") return ShockTarget::tau_w;
    throw domain_error("unknown shock target: " + s);
}

// Default sizes: 10% for parameters with a natural scale, 25 basis points
// per month for the two policy rates.
inline Shock default_shock(ShockTarget target, ShockDirection direction) {
    switch (target) {
        case ShockTarget::i:
        case ShockTarget::tau_w:
            return {target, direction, 0.0025, ShockKind::absolute};
        default:
            return {target, direction, 0.10, ShockKind::relative};
    }
}

inline ModelParams apply_to_params(const ModelParams& p, const Shock& s) {
    if (!(std::isfinite(s.magnitude) && s.magnitude >= 0.0))
        throw domain_error("shock magnitude must be non-negative");
    ModelParams q = p;
    auto bump = [&](double x) {
        const double sign = s.direction == ShockDirection::increase ? 1.0 : -1.0;
        return s.kind == ShockKind::relative ? x * (1.0 + sign * s.magnitude)
                                             : x + sign * s.magnitude;
    };
    switch (s.target) {
        case ShockTarget::delta: q.prefs.delta = bump(q.prefs.delta); break;
        case ShockTarget::mu_wealth: q.prefs.mu_wealth = bump(q.prefs.mu_wealth); break;
        case ShockTarget::a: q.endow.a = bump(q.endow.a); break;
        case ShockTarget::l: q.endow.l = bump(q.endow.l); break;
        case ShockTarget::i: q.policy.i = bump(q.policy.i); break;
        case ShockTarget::tau_w: q.policy.tau_w = bump(q.policy.tau_w); break;
    }
    q.validate(); // shocked parameters must still describe a scenario
    return q;
}

// Comparative-statics row: the sign pattern is the economics, the deltas
// carry the magnitudes. Signs use a dead zone of 1e-12 so that quantities
// a shock provably leaves alone report exactly 0.
struct StaticsRow {
    Shock shock;
    int sign_theta;
    int sign_y;
    int sign_n;
    int sign_u;
    int sign_u_star;
    double d_theta;
    double d_y;
    double d_n;
    double d_u;
    double d_u_star;
};

struct ShockResult {
    Equilibrium before;
    Equilibrium after;
    double u_star_before;
    double u_star_after;
    StaticsRow row;
};

namespace detail {

inline int sign_with_dead_zone(double x) {
    if (std::fabs(x) <= 1e-12) return 0;
    return x > 0.0 ? 1 : -1;
}

} // namespace detail

inline ShockResult apply_shock(const ModelParams& p, const Shock& s) {
    const ModelParams q = apply_to_params(p, s);

    ShockResult r;
    r.before = solve(p);
    r.after = solve(q);
    const double theta_star = efficient_tightness(p.matching);
    r.u_star_before = beveridge_unemployment(theta_star, p.matching);
    // None of the six targets touches the matching market, so the
    // efficient allocation is computed from the same parameters.
    r.u_star_after = beveridge_unemployment(efficient_tightness(q.matching), q.matching);

    r.row.shock = s;
    r.row.d_theta = r.after.theta - r.before.theta;
    r.row.d_y = r.after.y - r.before.y;
    r.row.d_n = r.after.n - r.before.n;
    r.row.d_u = r.after.u - r.before.u;
    r.row.d_u_star = r.u_star_after - r.u_star_before;
    r.row.sign_theta = detail::sign_with_dead_zone(r.row.d_theta);
    r.row.sign_y = detail::sign_with_dead_zone(r.row.d_y);
    r.row.sign_n = detail::sign_with_dead_zone(r.row.d_n);
    r.row.sign_u = detail::sign_with_dead_zone(r.row.d_u);
    r.row.sign_u_star = detail::sign_with_dead_zone(r.row.d_u_star);
    return r;
}

// The six textbook recession scenarios, in presentation order: more
// patience, stronger taste for wealth, lower productivity, a smaller
// labour force, a rate cut, a higher wealth tax.
inline std::array<Shock, 6> canonical_shocks() {
    return {
        default_shock(ShockTarget::delta, ShockDirection::decrease),
        default_shock(ShockTarget::mu_wealth, ShockDirection::increase),
        default_shock(ShockTarget::a, ShockDirection::decrease),
        default_shock(ShockTarget::l, ShockDirection::decrease),
        default_shock(ShockTarget::i, ShockDirection::decrease),
        default_shock(ShockTarget::tau_w, ShockDirection::increase),
    };
}

inline std::vector<StaticsRow> table1(const ModelParams& p,
                                      const std::array<Shock, 6>& shocks = canonical_shocks()) {
    std::vector<StaticsRow> rows;
    rows.reserve(shocks.size());
    for (const Shock& s : shocks) rows.push_back(apply_shock(p, s).row);
    return rows;
}

} // namespace adas
