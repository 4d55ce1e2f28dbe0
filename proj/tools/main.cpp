// Command-line front end: loads a flat key=value calibration, runs one of
// the analysis commands, and writes CSV/JSON artifacts to --out.
//
// Exit codes: 0 success, 1 I/O failure, 2 bad configuration or usage,
// 3 numerical failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adas/adas.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// File-system failure distinct from the model's own error taxonomy.
struct io_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    adas::ModelParams params = adas::default_params();
    std::optional<double> target_u; // recalibrates mu_wealth when set
    double theta_min = 0.0;
    double theta_max = 2.0;
    long theta_count = 200;
    double horizon = 120.0;
    double dt = 0.01;
};

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "mu", "eta",    "lambda",    "kappa",     "sigma",       "delta",   "mu_wealth",
        "x0", "a",      "l",         "i",         "pi",          "tau_w",   "target_u",
        "theta_min",    "theta_max", "theta_count", "horizon",   "dt",
    };
    return keys;
}

double parse_double(const std::string& key, const std::string& text) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw adas::config_error("cannot parse value for '" + key + "': " + text);
    }
}

long parse_count(const std::string& key, const std::string& text) {
    const double v = parse_double(key, text);
    const long n = std::lround(v);
    if (n != v) throw adas::config_error("'" + key + "' must be an integer: " + text);
    return n;
}

void set_model_key(adas::ModelParams& p, const std::string& key, double v) {
    if (key == "mu") p.matching.mu = v;
    else if (key == "eta") p.matching.eta = v;
    else if (key == "lambda") p.matching.lambda = v;
    else if (key == "kappa") p.matching.kappa = v;
    else if (key == "sigma") p.prefs.sigma = v;
    else if (key == "delta") p.prefs.delta = v;
    else if (key == "mu_wealth") p.prefs.mu_wealth = v;
    else if (key == "x0") p.prefs.x0 = v;
    else if (key == "a") p.endow.a = v;
    else if (key == "l") p.endow.l = v;
    else if (key == "i") p.policy.i = v;
    else if (key == "pi") p.policy.pi = v;
    else if (key == "tau_w") p.policy.tau_w = v;
    else throw adas::config_error("unknown model parameter: " + key);
}

bool is_model_key(const std::string& key) {
    static const std::set<std::string> keys = {"mu", "eta",   "lambda", "kappa", "sigma",
                                               "delta", "mu_wealth", "x0", "a", "l",
                                               "i", "pi", "tau_w"};
    return keys.count(key) > 0;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Flat key=value file; '#' starts a comment; blank lines ignored; unknown
// and duplicate keys rejected.
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_failure("cannot open config file: " + path);
    std::map<std::string, std::string> raw;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw adas::config_error("config line " + std::to_string(lineno) +
                                     " is not key=value: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!known_keys().count(key))
            throw adas::config_error("unknown config key '" + key + "' on line " +
                                     std::to_string(lineno));
        if (raw.count(key))
            throw adas::config_error("duplicate config key '" + key + "'");
        if (value.empty())
            throw adas::config_error("config key '" + key + "' has no value");
        raw[key] = value;
    }
    return raw;
}

Config build_config(const std::string& config_path, const std::vector<std::string>& overrides,
                    const std::optional<double>& target_u_flag) {
    std::map<std::string, std::string> raw;
    if (!config_path.empty()) raw = read_config_file(config_path);

    // Command-line --set pairs win over the file.
    for (const std::string& kv : overrides) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos)
            throw adas::config_error("--set expects key=value, got: " + kv);
        const std::string key = trim(kv.substr(0, eq));
        const std::string value = trim(kv.substr(eq + 1));
        if (!known_keys().count(key)) throw adas::config_error("unknown config key '" + key + "'");
        if (value.empty()) throw adas::config_error("config key '" + key + "' has no value");
        raw[key] = value;
    }

    Config cfg;
    std::vector<std::string> defaulted;
    for (const std::string& key : known_keys()) {
        if (key == "target_u" || key == "mu_wealth") continue;
        if (!raw.count(key)) defaulted.push_back(key);
    }

    for (const auto& [key, value] : raw) {
        if (key == "target_u") cfg.target_u = parse_double(key, value);
        else if (key == "theta_min") cfg.theta_min = parse_double(key, value);
        else if (key == "theta_max") cfg.theta_max = parse_double(key, value);
        else if (key == "theta_count") cfg.theta_count = parse_count(key, value);
        else if (key == "horizon") cfg.horizon = parse_double(key, value);
        else if (key == "dt") cfg.dt = parse_double(key, value);
        else set_model_key(cfg.params, key, parse_double(key, value));
    }
    if (target_u_flag) cfg.target_u = *target_u_flag;

    // The demand anchor: explicit target_u wins, then explicit mu_wealth,
    // then the built-in 6% calibration under whatever parameters resulted.
    if (cfg.target_u) {
        cfg.params.prefs.mu_wealth = adas::calibrate_demand(*cfg.target_u, cfg.params);
    } else if (!raw.count("mu_wealth")) {
        cfg.params.prefs.mu_wealth = adas::calibrate_demand(0.06, cfg.params);
        defaulted.push_back("mu_wealth(target_u=0.06)");
    }

    if (!defaulted.empty()) {
        std::string note = "note: using defaults for:";
        for (const std::string& k : defaulted) note += " " + k;
        std::fprintf(stderr, "%s\n", note.c_str());
    }

    if (!(cfg.theta_min >= 0.0)) throw adas::config_error("theta_min must be non-negative");
    if (!(cfg.theta_max > cfg.theta_min))
        throw adas::config_error("theta_max must exceed theta_min");
    if (cfg.theta_count < 1) throw adas::config_error("theta_count must be at least 1");
    if (!(cfg.horizon > 0.0)) throw adas::config_error("horizon must be positive");
    if (!(cfg.dt > 0.0)) throw adas::config_error("dt must be positive");
    return cfg;
}

void write_file(const fs::path& dir, const std::string& name, const std::string& content) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw io_failure("cannot create output directory: " + dir.string());
    const fs::path target = dir / name;
    std::ofstream out(target, std::ios::binary);
    if (!out) throw io_failure("cannot open for writing: " + target.string());
    out << content;
    out.flush();
    if (!out.good()) throw io_failure("write failed: " + target.string());
}

std::string key_value_csv(const json& j) {
    std::string out = "key,value\n";
    for (const auto& [key, value] : j.items()) {
        out += key;
        out += ',';
        if (value.is_number_float()) out += adas::format_double(value.get<double>());
        else out += value.dump();
        out += '\n';
    }
    return out;
}

// Writes obj as name.json, or as a key,value CSV when --format csv.
void write_report(const fs::path& dir, const std::string& name, const json& obj,
                  const std::string& format) {
    if (format == "csv") write_file(dir, name + ".csv", key_value_csv(obj));
    else write_file(dir, name + ".json", obj.dump(2) + "\n");
}

json params_json(const adas::ModelParams& p) {
    return json{
        {"mu", p.matching.mu},       {"eta", p.matching.eta},
        {"lambda", p.matching.lambda}, {"kappa", p.matching.kappa},
        {"sigma", p.prefs.sigma},    {"delta", p.prefs.delta},
        {"mu_wealth", p.prefs.mu_wealth}, {"x0", p.prefs.x0},
        {"a", p.endow.a},            {"l", p.endow.l},
        {"i", p.policy.i},           {"pi", p.policy.pi},
        {"tau_w", p.policy.tau_w},
    };
}

std::vector<double> theta_grid(const Config& cfg) {
    std::vector<double> grid;
    grid.reserve(cfg.theta_count);
    if (cfg.theta_count == 1) {
        grid.push_back(cfg.theta_min);
        return grid;
    }
    const double step = (cfg.theta_max - cfg.theta_min) / double(cfg.theta_count - 1);
    for (long k = 0; k < cfg.theta_count; ++k) grid.push_back(cfg.theta_min + step * double(k));
    return grid;
}

int cmd_solve(const Config& cfg, const fs::path& out, const std::string& format) {
    const adas::Equilibrium eq = adas::solve(cfg.params);
    const adas::EfficiencyReport rep = adas::efficiency_report(cfg.params);
    write_report(out, "equilibrium", adas::to_json(eq), format);
    write_report(out, "efficiency", adas::to_json(rep), format);
    std::printf("equilibrium: theta=%.6f u=%.4f%% u*=%.4f%% gap=%.4fpp residual=%.3g\n",
                eq.theta, 100.0 * eq.u, 100.0 * rep.u_star, 100.0 * rep.gap, eq.residual);
    return 0;
}

int cmd_curves(const Config& cfg, const fs::path& out) {
    const std::vector<double> grid = theta_grid(cfg);
    const auto points =
        adas::sample_curves(grid, cfg.params.matching, cfg.params.prefs, cfg.params.policy,
                            cfg.params.endow);
    const adas::Equilibrium eq = adas::solve(cfg.params);
    long invalid = 0;
    for (const auto& p : points)
        if (!p.valid) ++invalid;

    json sidecar{
        {"theta_eq", eq.theta},
        {"u_eq", eq.u},
        {"theta_tau", adas::theta_tau(cfg.params.matching)},
        {"grid", {{"min", cfg.theta_min}, {"max", cfg.theta_max}, {"count", cfg.theta_count}}},
        {"invalid_rows", invalid},
    };
    if (cfg.params.matching.kappa > 0.0) {
        const adas::EfficiencyReport rep = adas::efficiency_report(cfg.params);
        sidecar["theta_star"] = rep.theta_star;
        sidecar["u_star"] = rep.u_star;
    }
    write_file(out, "curves.csv", adas::curves_csv(points));
    write_file(out, "curves.json", sidecar.dump(2) + "\n");
    std::printf("curves: %ld rows (%ld beyond theta_tau), equilibrium theta=%.6f\n",
                long(points.size()), invalid, eq.theta);
    return 0;
}

int cmd_shock(const Config& cfg, const fs::path& out, const std::string& target,
              const std::string& direction, std::optional<double> magnitude,
              const std::string& kind) {
    adas::Shock s = adas::default_shock(adas::shock_target_from_string(target),
                                        direction == "increase"
                                            ? adas::ShockDirection::increase
                                            : adas::ShockDirection::decrease);
    if (magnitude) s.magnitude = *magnitude;
    if (!kind.empty())
        s.kind = kind == "relative" ? adas::ShockKind::relative : adas::ShockKind::absolute;

    const adas::ShockResult r = adas::apply_shock(cfg.params, s);
    write_file(out, "statics.csv", adas::statics_csv({r.row}));
    std::printf("shock %s %s by %g (%s): u %.4f%% -> %.4f%%, theta %.6f -> %.6f\n",
                to_string(s.direction), to_string(s.target), s.magnitude, to_string(s.kind),
                100.0 * r.before.u, 100.0 * r.after.u, r.before.theta, r.after.theta);
    return 0;
}

int cmd_table1(const Config& cfg, const fs::path& out) {
    const auto rows = adas::table1(cfg.params);
    write_file(out, "statics.csv", adas::statics_csv(rows));
    std::printf("%-12s %-9s %6s %6s %6s %6s %7s\n", "target", "direction", "theta", "y", "n",
                "u", "u_star");
    auto sgn = [](int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); };
    for (const auto& r : rows)
        std::printf("%-12s %-9s %6s %6s %6s %6s %7s\n", to_string(r.shock.target),
                    to_string(r.shock.direction), sgn(r.sign_theta), sgn(r.sign_y),
                    sgn(r.sign_n), sgn(r.sign_u), sgn(r.sign_u_star));
    return 0;
}

int cmd_policy(const Config& cfg, const fs::path& out, const std::string& format,
               const std::string& instrument, bool exact, std::optional<double> gap,
               std::optional<double> multiplier) {
    const bool rate = instrument == "rate";
    adas::PolicyPrescription p;
    if (exact) {
        if (gap || multiplier)
            throw adas::config_error("--gap/--multiplier only apply to the sufficient-statistic mode");
        p = rate ? adas::optimal_rate_exact(cfg.params)
                 : adas::optimal_wealth_tax_exact(cfg.params);
    } else {
        const double g = gap ? *gap : adas::efficiency_report(cfg.params).gap;
        const double m = multiplier
                             ? *multiplier
                             : (rate ? adas::monetary_multiplier(cfg.params).value
                                     : adas::tax_multiplier(cfg.params).value);
        p = rate ? adas::optimal_rate_sufficient_statistic(g, m, cfg.params.policy.i)
                 : adas::optimal_wealth_tax(g, m, cfg.params.policy.tau_w);
    }
    json j = adas::to_json(p);
    j["mode"] = exact ? "exact" : "sufficient_statistic";
    write_report(out, "policy", j, format);
    std::printf("policy (%s, %s): %s %.6f -> %.6f, gap %.4fpp -> %.4fpp%s\n",
                rate ? "nominal rate" : "wealth tax", exact ? "exact" : "sufficient statistic",
                rate ? "i" : "tau_w", p.current_value, p.optimal_value, 100.0 * p.gap_before,
                100.0 * p.gap_after_predicted, p.zlb_binding ? " [ZLB binding]" : "");
    return 0;
}

int cmd_dynamics(const Config& cfg, const fs::path& out, const std::string& state,
                 std::optional<double> u0, std::optional<double> theta,
                 std::optional<double> gamma_init, double w0, const std::string& fiscal,
                 std::optional<double> real_tax) {
    json sidecar{{"state_label", state},
                 {"horizon", cfg.horizon},
                 {"dt", cfg.dt},
                 {"params", params_json(cfg.params)}};
    if (state == "u") {
        const adas::Equilibrium eq = adas::solve(cfg.params);
        const double th = theta ? *theta : eq.theta;
        const double start = u0 ? *u0 : eq.u + 0.01;
        const adas::TimePath path =
            adas::integrate_unemployment(start, th, cfg.params.matching, cfg.horizon, cfg.dt);
        write_file(out, "path_u.csv", adas::timepath_csv(path));
        sidecar["theta"] = th;
        sidecar["u0"] = start;
        sidecar["truncated"] = path.truncated;
        write_file(out, "path_u.json", sidecar.dump(2) + "\n");
        std::printf("dynamics u: %zu samples, u %.4f%% -> %.4f%%\n", path.values.size(),
                    100.0 * path.values.front(), 100.0 * path.values.back());
    } else if (state == "gamma") {
        const adas::Equilibrium eq = adas::solve(cfg.params);
        const double start = gamma_init ? *gamma_init : eq.gamma0;
        const adas::PhasePath phase = adas::costate_phase_line(
            start, cfg.params.prefs, cfg.params.policy, cfg.horizon, cfg.dt);
        write_file(out, "path_gamma.csv", adas::timepath_csv(phase.path));
        sidecar["gamma_init"] = start;
        sidecar["critical_point"] = phase.critical_point;
        sidecar["classification"] = adas::to_string(phase.classification);
        sidecar["truncated"] = phase.path.truncated;
        write_file(out, "path_gamma.json", sidecar.dump(2) + "\n");
        std::printf("dynamics gamma: %s (gamma0=%.6g)%s\n",
                    adas::to_string(phase.classification), phase.critical_point,
                    phase.path.truncated ? " [truncated]" : "");
    } else if (state == "w") {
        const adas::Equilibrium eq = adas::solve(cfg.params);
        adas::FiscalRule rule = adas::FiscalRule::balance_debt();
        if (fiscal == "explicit_path") {
            if (!real_tax)
                throw adas::config_error("--real-tax is required with --fiscal explicit_path");
            rule = adas::FiscalRule::explicit_path(*real_tax);
        }
        const adas::WealthPaths paths =
            adas::wealth_path(w0, eq, rule, cfg.params.policy, cfg.horizon, cfg.dt);
        write_file(out, "path_w.csv", adas::timepath_csv(paths.w));
        write_file(out, "path_b.csv", adas::timepath_csv(paths.b));
        write_file(out, "path_p.csv", adas::timepath_csv(paths.p));
        sidecar["w0"] = w0;
        sidecar["fiscal"] = fiscal;
        sidecar["truncated"] = paths.w.truncated;
        write_file(out, "path_w.json", sidecar.dump(2) + "\n");
        std::printf("dynamics w: w %.6g -> %.6g over %g months\n", paths.w.values.front(),
                    paths.w.values.back(), cfg.horizon);
    } else {
        throw adas::config_error("unknown state: " + state + " (expected u, gamma or w)");
    }
    return 0;
}

int cmd_sweep(const Config& cfg, const fs::path& out, const std::string& param, double from,
              double to, long count) {
    if (!is_model_key(param)) throw adas::config_error("cannot sweep over '" + param + "'");
    if (count < 2) throw adas::config_error("sweep needs at least 2 points");
    std::string csv = "param,value,theta,y,u,n,v,c,wedge,gap\n";
    long failures = 0;
    for (long k = 0; k < count; ++k) {
        const double value = from + (to - from) * double(k) / double(count - 1);
        adas::ModelParams p = cfg.params;
        csv += param;
        csv += ',';
        csv += adas::format_double(value);
        try {
            set_model_key(p, param, value);
            const adas::Equilibrium eq = adas::solve(p);
            const double u_star =
                adas::beveridge_unemployment(adas::efficient_tightness(p.matching), p.matching);
            for (double x : {eq.theta, eq.y, eq.u, eq.n, eq.v, eq.c, eq.wedge, eq.u - u_star}) {
                csv += ',';
                csv += adas::format_double(x);
            }
        } catch (const adas::model_error&) {
            ++failures;
            csv += ",nan,nan,nan,nan,nan,nan,nan,nan";
        }
        csv += '\n';
    }
    write_file(out, "sweep.csv", csv);
    std::printf("sweep %s in [%g, %g]: %ld points, %ld infeasible\n", param.c_str(), from, to,
                count, failures);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Business-cycle solver for a matching model of aggregate supply and demand"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::string format = "json";
    std::vector<std::string> sets;
    std::optional<double> target_u_flag;
    app.add_option("--config", config_path, "flat key=value calibration file");
    app.add_option("--out", out_dir, "output directory (default .)");
    app.add_option("--format", format, "report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--set", sets, "override one key, e.g. --set i=0.002 (repeatable)");
    app.add_option("--target-u", target_u_flag,
                   "calibrate the wealth-utility level so equilibrium unemployment hits this");

    CLI::App* c_solve = app.add_subcommand("solve", "solve the equilibrium and efficiency report");
    CLI::App* c_curves = app.add_subcommand("curves", "sample supply and demand over a tightness grid");

    CLI::App* c_shock = app.add_subcommand("shock", "re-solve after a one-off parameter shock");
    std::string shock_target;
    std::string shock_direction = "decrease";
    std::optional<double> shock_magnitude;
    std::string shock_kind;
    c_shock->add_option("--target", shock_target, "delta, mu_wealth, a, l, i or tau_w")
        ->required();
    c_shock->add_option("--direction", shock_direction, "increase or decrease")
        ->check(CLI::IsMember({"increase", "decrease"}));
    c_shock->add_option("--magnitude", shock_magnitude, "shock size (default 10% / 25bp)");
    c_shock->add_option("--kind", shock_kind, "relative or absolute")
        ->check(CLI::IsMember({"relative", "absolute"}));

    CLI::App* c_table1 = app.add_subcommand("table1", "signs of the six canonical shocks");

    CLI::App* c_policy = app.add_subcommand("policy", "prescribe the gap-closing policy move");
    std::string instrument = "rate";
    bool exact = false;
    std::optional<double> gap_flag;
    std::optional<double> multiplier_flag;
    c_policy->add_option("--instrument", instrument, "rate or wealth_tax")
        ->check(CLI::IsMember({"rate", "wealth_tax"}));
    c_policy->add_flag("--exact", exact, "search for the exact gap-closing value");
    c_policy->add_option("--gap", gap_flag, "unemployment gap (default: from the model)");
    c_policy->add_option("--multiplier", multiplier_flag,
                         "policy multiplier (default: finite difference on the model)");

    CLI::App* c_dynamics = app.add_subcommand("dynamics", "integrate one state variable");
    std::string state = "u";
    std::optional<double> u0_flag;
    std::optional<double> theta_flag;
    std::optional<double> gamma_init_flag;
    double w0 = 1.0;
    std::string fiscal = "balance_debt";
    std::optional<double> real_tax_flag;
    c_dynamics->add_option("--state", state, "u, gamma or w")
        ->check(CLI::IsMember({"u", "gamma", "w"}));
    c_dynamics->add_option("--u0", u0_flag, "initial unemployment (default: equilibrium + 1pp)");
    c_dynamics->add_option("--theta", theta_flag, "tightness held fixed (default: equilibrium)");
    c_dynamics->add_option("--gamma-init", gamma_init_flag,
                           "initial marginal utility (default: the stationary gamma0)");
    c_dynamics->add_option("--w0", w0, "initial real wealth (default 1)");
    c_dynamics->add_option("--fiscal", fiscal, "balance_debt or explicit_path")
        ->check(CLI::IsMember({"balance_debt", "explicit_path"}));
    c_dynamics->add_option("--real-tax", real_tax_flag, "constant real lump-sum tax");

    CLI::App* c_sweep = app.add_subcommand("sweep", "re-solve along a one-parameter grid");
    std::string sweep_param;
    double sweep_from = 0.0;
    double sweep_to = 0.0;
    long sweep_count = 50;
    c_sweep->add_option("--param", sweep_param, "model parameter to sweep")->required();
    c_sweep->add_option("--from", sweep_from, "first value")->required();
    c_sweep->add_option("--to", sweep_to, "last value")->required();
    c_sweep->add_option("--count", sweep_count, "grid points (default 50)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Config cfg = build_config(config_path, sets, target_u_flag);
        const fs::path out(out_dir);
        if (c_solve->parsed()) return cmd_solve(cfg, out, format);
        if (c_curves->parsed()) return cmd_curves(cfg, out);
        if (c_shock->parsed())
            return cmd_shock(cfg, out, shock_target, shock_direction, shock_magnitude,
                             shock_kind);
        if (c_table1->parsed()) return cmd_table1(cfg, out);
        if (c_policy->parsed())
            return cmd_policy(cfg, out, format, instrument, exact, gap_flag, multiplier_flag);
        if (c_dynamics->parsed())
            return cmd_dynamics(cfg, out, state, u0_flag, theta_flag, gamma_init_flag, w0,
                                fiscal, real_tax_flag);
        if (c_sweep->parsed())
            return cmd_sweep(cfg, out, sweep_param, sweep_from, sweep_to, sweep_count);
        std::fprintf(stderr, "error: no command given\n");
        return 2;
    } catch (const io_failure& e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return 1;
    } catch (const adas::numeric_error& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return 3;
    } catch (const adas::config_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const adas::domain_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const fs::filesystem_error& e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
}
