#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "adas/curves.hpp"
#include "adas/dynamics.hpp"
#include "adas/efficiency.hpp"
#include "adas/equilibrium.hpp"
#include "adas/policy.hpp"
#include "adas/statics.hpp"

namespace adas {

// Shortest decimal string that round-trips the double, so repeated runs
// produce byte-identical files.
inline std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

inline nlohmann::json to_json(const Equilibrium& eq) {
    return nlohmann::json{
        {"theta", eq.theta},   {"y", eq.y},
        {"u", eq.u},           {"n", eq.n},
        {"v", eq.v},           {"c", eq.c},
        {"wedge", eq.wedge},   {"r", eq.r},
        {"gamma0", eq.gamma0}, {"welfare_flow", eq.welfare_flow},
        {"residual", eq.residual},
    };
}

inline nlohmann::json to_json(const EfficiencyReport& r) {
    return nlohmann::json{
        {"theta_star", r.theta_star},
        {"u_star", r.u_star},
        {"v_star", r.v_star},
        {"epsilon_at_star", r.epsilon_at_star},
        {"gap", r.gap},
    };
}

inline nlohmann::json to_json(const PolicyPrescription& p) {
    return nlohmann::json{
        {"instrument", p.instrument == Instrument::nominal_rate ? "nominal_rate" : "wealth_tax"},
        {"current_value", p.current_value},
        {"optimal_value", p.optimal_value},
        {"gap_before", p.gap_before},
        {"gap_after_predicted", p.gap_after_predicted},
        // Exact searches carry no multiplier; render the absence as null
        // rather than NaN so the file stays valid JSON either way.
        {"multiplier_used", std::isnan(p.multiplier_used)
                                ? nlohmann::json()
                                : nlohmann::json(p.multiplier_used)},
        {"zlb_binding", p.zlb_binding},
    };
}

inline std::string curves_csv(const std::vector<CurvePoint>& points) {
    std::string out = "theta,as,ad,zlb_ad\n";
    for (const CurvePoint& p : points) {
        out += format_double(p.theta);
        out += ',';
        out += p.valid ? format_double(p.as) : "nan";
        out += ',';
        out += p.valid ? format_double(p.ad) : "nan";
        out += ',';
        out += p.valid ? format_double(p.zlb_ad) : "nan";
        out += '\n';
    }
    return out;
}

inline std::string statics_csv(const std::vector<StaticsRow>& rows) {
    std::string out =
        "target,direction,magnitude,kind,sign_theta,sign_y,sign_n,sign_u,sign_u_star,"
        "d_theta,d_y,d_n,d_u,d_u_star\n";
    auto sign_char = [](int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); };
    for (const StaticsRow& r : rows) {
        out += to_string(r.shock.target);
        out += ',';
        out += to_string(r.shock.direction);
        out += ',';
        out += format_double(r.shock.magnitude);
        out += ',';
        out += to_string(r.shock.kind);
        out += ',';
        out += sign_char(r.sign_theta);
        out += ',';
        out += sign_char(r.sign_y);
        out += ',';
        out += sign_char(r.sign_n);
        out += ',';
        out += sign_char(r.sign_u);
        out += ',';
        out += sign_char(r.sign_u_star);
        out += ',';
        out += format_double(r.d_theta);
        out += ',';
        out += format_double(r.d_y);
        out += ',';
        out += format_double(r.d_n);
        out += ',';
        out += format_double(r.d_u);
        out += ',';
        out += format_double(r.d_u_star);
        out += '\n';
    }
    return out;
}

inline std::string timepath_csv(const TimePath& path) {
    std::string out = "t,value\n";
    for (std::size_t k = 0; k < path.times.size(); ++k) {
        out += format_double(path.times[k]);
        out += ',';
        out += format_double(path.values[k]);
        out += '\n';
    }
    return out;
}

} // namespace adas
