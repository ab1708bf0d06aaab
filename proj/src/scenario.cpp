#include "subvac/scenario.hpp"

#include "subvac/cavity.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>
#include <vector>

namespace subvac {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string config_hash(const json& cfg) {
    const std::string dump = cfg.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

const json& require(const json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key))
        throw ConfigError("config error at " + path + "." + key + ": missing field");
    return j.at(key);
}

double get_number(const json& j, const char* key, const std::string& path) {
    const json& v = require(j, key, path);
    if (!v.is_number())
        throw ConfigError("config error at " + path + "." + key + ": expected a number");
    return v.get<double>();
}

double get_number_or(const json& j, const char* key, const std::string& path, double dflt) {
    if (!j.is_object() || !j.contains(key)) return dflt;
    return get_number(j, key, path);
}

int get_int(const json& j, const char* key, const std::string& path) {
    const json& v = require(j, key, path);
    if (!v.is_number_integer())
        throw ConfigError("config error at " + path + "." + key + ": expected an integer");
    return v.get<int>();
}

int get_int_or(const json& j, const char* key, const std::string& path, int dflt) {
    if (!j.is_object() || !j.contains(key)) return dflt;
    return get_int(j, key, path);
}

std::string get_string(const json& j, const char* key, const std::string& path) {
    const json& v = require(j, key, path);
    if (!v.is_string())
        throw ConfigError("config error at " + path + "." + key + ": expected a string");
    return v.get<std::string>();
}

// Run fn(i) for i in [0, n) across `workers` threads; pure functions only.
void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
    workers = std::max(1, std::min(workers, n));
    if (workers == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([=, &fn] {
            for (int i = t; i < n; i += workers) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

CavityGeometry geometry_from_json(const json& j) {
    const double a = get_number(j, "a", "geometry");
    const double b = get_number(j, "b", "geometry");
    const double d = get_number(j, "d", "geometry");
    try {
        return CavityGeometry(a, b, d);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config error at geometry: ") + e.what());
    }
}

Position position_from_json(const json& j) {
    return Position{get_number(j, "x", "position"), get_number(j, "y", "position"),
                    get_number(j, "z", "position")};
}

}  // namespace

PhotonState state_from_json(const json& j, std::optional<std::uint64_t> seed_override) {
    const std::string kind = get_string(j, "kind", "state");
    try {
        PhotonState s = [&]() -> PhotonState {
            if (kind == "vacuum") {
                return make_number_state(0, get_int_or(j, "dim", "state", 4));
            } else if (kind == "number") {
                return make_number_state(get_int(j, "n", "state"),
                                         get_int_or(j, "dim", "state",
                                                    get_int(j, "n", "state") + 2));
            } else if (kind == "vacuum_plus_two") {
                return make_vacuum_plus_two(get_number(j, "beta", "state"),
                                            get_int_or(j, "dim", "state", 8));
            } else if (kind == "squeezed") {
                const double r = get_number(j, "r", "state");
                const double phi = get_number_or(j, "phi", "state", 0.0);
                if (j.contains("dim")) return make_squeezed_vacuum(r, phi, get_int(j, "dim", "state"));
                return make_squeezed_vacuum(r, phi);
            } else if (kind == "random") {
                const auto seed = seed_override.value_or(
                    static_cast<std::uint64_t>(get_int_or(j, "seed", "state", 1)));
                return make_random_state(get_int(j, "dim", "state"), seed);
            } else if (kind == "amplitudes") {
                const json& re = require(j, "re", "state");
                const json& im = require(j, "im", "state");
                if (!re.is_array() || !im.is_array() || re.size() != im.size())
                    throw ConfigError("config error at state.re/state.im: "
                                      "expected arrays of equal length");
                std::vector<cplx> c(re.size());
                for (size_t n = 0; n < c.size(); ++n)
                    c[n] = cplx{re.at(n).get<double>(), im.at(n).get<double>()};
                return PhotonState(std::move(c));
            }
            throw ConfigError("config error at state.kind: unknown kind '" + kind + "'");
        }();
        if (j.contains("rotate")) s = rotated(s, get_number(j, "rotate", "state"));
        if (j.value("worst_phase", false)) s = rotated_to_worst_phase(s);
        return s;
    } catch (const ConfigError&) {
        throw;
    } catch (const TruncationError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError("config error at state: " + std::string(e.what()));
    }
}

AtomParams atom_from_json(const json& j) {
    try {
        std::optional<double> tau;
        if (j.contains("lifetime_tau") && !j.at("lifetime_tau").is_null())
            tau = get_number(j, "lifetime_tau", "atom");
        return AtomParams(get_number(j, "delta_eps", "atom"),
                          get_number(j, "dipole", "atom"), tau);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError("config error at atom: " + std::string(e.what()));
    }
}

TransitWindow window_from_json(const json& j) {
    try {
        return TransitWindow(get_number(j, "t0", "window"), get_number(j, "t1", "window"));
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError("config error at window: " + std::string(e.what()));
    }
}

OracleConfig oracle_from_json(const json& j) {
    OracleConfig cfg;
    cfg.truncation_dim = get_int_or(j, "truncation_dim", "oracle", cfg.truncation_dim);
    cfg.step_tolerance = get_number_or(j, "step_tolerance", "oracle", cfg.step_tolerance);
    cfg.leakage_tolerance =
        get_number_or(j, "leakage_tolerance", "oracle", cfg.leakage_tolerance);
    if (j.contains("integrator")) {
        const std::string name = get_string(j, "integrator", "oracle");
        if (name == "matrix_exponential")
            cfg.integrator = OracleConfig::Integrator::matrix_exponential;
        else if (name == "adaptive_stepper")
            cfg.integrator = OracleConfig::Integrator::adaptive_stepper;
        else
            throw ConfigError("config error at oracle.integrator: unknown integrator '" +
                              name + "'");
    }
    try {
        cfg.validate();
    } catch (const std::exception& e) {
        throw ConfigError("config error at oracle: " + std::string(e.what()));
    }
    return cfg;
}

ExperimentSetup setup_from_json(const json& j) {
    ExperimentSetup s;
    s.cavity_a = get_number(j, "cavity_a", "setup");
    s.cavity_b = get_number(j, "cavity_b", "setup");
    s.cavity_d = get_number(j, "cavity_d", "setup");
    s.transition_frequency = get_number(j, "transition_frequency", "setup");
    s.atom_size = get_number(j, "atom_size", "setup");
    s.atom_speed = get_number(j, "atom_speed", "setup");
    s.lifetime_tau = get_number(j, "lifetime_tau", "setup");
    s.state_beta = get_number_or(j, "state_beta", "setup", s.state_beta);
    try {
        s.validate();
    } catch (const std::exception& e) {
        throw ConfigError("config error at setup: " + std::string(e.what()));
    }
    return s;
}

ModeData mode_from_json(const json& cfg) {
    if (cfg.contains("mode")) {
        const json& m = cfg.at("mode");
        ModeData md;
        md.f_squared = get_number(m, "f_squared", "mode");
        md.omega = get_number(m, "omega", "mode");
        if (!(md.f_squared >= 0.0) || !(md.omega > 0.0))
            throw ConfigError("config error at mode: require f_squared >= 0 and omega > 0");
        return md;
    }
    if (cfg.contains("geometry") && cfg.contains("position")) {
        const CavityGeometry g = geometry_from_json(cfg.at("geometry"));
        const Position p = position_from_json(cfg.at("position"));
        try {
            const FieldPoint fp = field_point(g, p);
            return ModeData{fp.f_squared, fp.omega, true, g.strictly_ordered()};
        } catch (const std::domain_error& e) {
            throw ConfigError("config error at position: " + std::string(e.what()));
        }
    }
    throw ConfigError("config error: need either 'mode' or 'geometry' + 'position'");
}

SweepBetaConfig sweep_beta_from_json(const json& cfg) {
    SweepBetaConfig sw;
    if (cfg.contains("sweep")) {
        const json& s = cfg.at("sweep");
        sw.from = get_number_or(s, "from", "sweep", sw.from);
        sw.to = get_number_or(s, "to", "sweep", sw.to);
        sw.steps = get_int_or(s, "steps", "sweep", sw.steps);
    }
    if (!(sw.steps >= 1)) throw ConfigError("config error at sweep.steps: must be >= 1");
    if (!(sw.from >= 0.0) || !std::isfinite(sw.from) || !std::isfinite(sw.to) ||
        sw.to < sw.from)
        throw ConfigError("config error at sweep: require 0 <= from <= to, finite");
    return sw;
}

std::string run_sweep_beta(const SweepBetaConfig& sweep, int workers) {
    json echo;
    echo["sweep"] = {{"from", sweep.from}, {"to", sweep.to}, {"steps", sweep.steps}};

    struct Row {
        double beta, lo, hi;
    };
    std::vector<Row> rows(static_cast<size_t>(sweep.steps));
    const double span = sweep.to - sweep.from;
    parallel_for(sweep.steps, workers, [&](int i) {
        const double beta =
            (sweep.steps == 1) ? sweep.from : sweep.from + span * i / (sweep.steps - 1);
        const PhotonState s = make_vacuum_plus_two(beta, 8);
        const double n = mean_photon_number(s);
        const double absC = std::abs(pair_correlation(s));
        rows[static_cast<size_t>(i)] = {beta, 1.0 + 2.0 * n - 2.0 * absC,
                                        1.0 + 2.0 * n + 2.0 * absC};
    });

    std::ostringstream out;
    out << "# subvac sweep-beta: resonant-short ratio P2/P2(0) extremes\n";
    out << "# config_hash=" << config_hash(echo) << "\n";
    out << "# regime=resonant_short (closed form; min/max over oscillation phase)\n";
    out << "beta,ratio_min,ratio_max\n";
    for (const Row& r : rows)
        out << fmt17(r.beta) << "," << fmt17(r.lo) << "," << fmt17(r.hi) << "\n";
    return out.str();
}

std::string run_e2_timeseries(const json& cfg, int workers,
                              std::optional<std::uint64_t> seed_override) {
    const PhotonState s = state_from_json(require(cfg, "state", "config"), seed_override);
    if (!cfg.contains("geometry") || !cfg.contains("position"))
        throw ConfigError("config error: e2-timeseries needs 'geometry' and 'position'");
    const CavityGeometry g = geometry_from_json(cfg.at("geometry"));
    const Position p = position_from_json(cfg.at("position"));

    const json& tj = require(cfg, "time", "config");
    const double t_from = get_number(tj, "from", "time");
    const double t_to = get_number(tj, "to", "time");
    const int steps = get_int(tj, "steps", "time");
    if (steps < 1 || !(t_to >= t_from))
        throw ConfigError("config error at time: require steps >= 1 and to >= from");

    double e2prof, b2prof, omega;
    try {
        e2prof = electric_profile_squared(g, p);
        b2prof = magnetic_profile_squared(g, p);
        omega = lowest_mode_frequency(g);
    } catch (const std::domain_error& e) {
        throw ConfigError("config error at position: " + std::string(e.what()));
    }

    const double n = mean_photon_number(s);
    const cplx C = pair_correlation(s);

    struct Row {
        double t, e2, b2, rho;
    };
    std::vector<Row> rows(static_cast<size_t>(steps));
    parallel_for(steps, workers, [&](int i) {
        const double t =
            (steps == 1) ? t_from : t_from + (t_to - t_from) * i / (steps - 1);
        const double osc = std::real(C * std::polar(1.0, 2.0 * omega * t));
        const double e2 = e2prof * (2.0 * n + 2.0 * osc);
        const double b2 = b2prof * (2.0 * n - 2.0 * osc);
        rows[static_cast<size_t>(i)] = {t, e2, b2, 0.5 * (e2 + b2)};
    });

    std::ostringstream out;
    out << "# subvac e2-timeseries: normal-ordered field means at a cavity position\n";
    out << "# config_hash=" << config_hash(cfg) << "\n";
    out << "# regime=field_observable (atom-independent)\n";
    if (!g.strictly_ordered())
        out << "# warning: geometry not strictly ordered (b < a < d); mode minimality "
               "may be degenerate\n";
    out << "t,e2,b2,rho\n";
    for (const Row& r : rows)
        out << fmt17(r.t) << "," << fmt17(r.e2) << "," << fmt17(r.b2) << ","
            << fmt17(r.rho) << "\n";
    return out.str();
}

namespace {

json regime_to_json(const RegimeReport& r) {
    json j;
    j["omega_dt"] = r.omega_dt;
    j["deps_dt"] = r.deps_dt;
    j["omega_over_deps"] = r.omega_over_deps;
    j["regime"] = regime_name(r.regime);
    j["thresholds"] = {{"much_less", r.thresholds.much_less},
                       {"much_greater", r.thresholds.much_greater},
                       {"resonance_tol", r.thresholds.resonance_tol}};
    return j;
}

}  // namespace

json run_probability(const json& cfg, std::optional<std::uint64_t> seed_override) {
    const PhotonState s = state_from_json(require(cfg, "state", "config"), seed_override);
    const AtomParams atom = atom_from_json(require(cfg, "atom", "config"));
    const TransitWindow w = window_from_json(require(cfg, "window", "config"));
    const ModeData mode = mode_from_json(cfg);
    const double f = std::sqrt(mode.f_squared);

    const RegimeReport regime = classify_regime(mode.omega, atom, w);
    json warnings = json::array();

    json rep;
    rep["command"] = "probability";
    rep["config_hash"] = config_hash(cfg);
    rep["mode"] = {{"f_squared", mode.f_squared},
                   {"omega", mode.omega},
                   {"from_geometry", mode.from_geometry}};
    rep["regime"] = regime_to_json(regime);

    rep["p2"] = prob_P2(s, f, mode.omega, atom, w);
    rep["p2_vacuum"] = prob_P2_vacuum(f, mode.omega, atom, w);
    rep["delta_p2"] = delta_P2(s, f, mode.omega, atom, w);
    try {
        rep["ratio"] = ratio_P2(s, mode.omega, atom, w);
    } catch (const std::domain_error&) {
        rep["ratio"] = nullptr;
        warnings.push_back("ratio undefined: degenerate window (|I2| ~ 0)");
    }
    rep["ratio_resonant_short"] = ratio_resonant_short(s, mode.omega, w.t0);
    rep["e2_over_f2_at_t0"] = ratio_resonant_short(s, mode.omega, w.t0) - 1.0;
    rep["delta_p2_low_omega"] = delta_P2_low_omega(s, f, atom, w);
    rep["delta_p2_high_omega"] = delta_P2_high_omega(s, f, mode.omega, atom, w);
    rep["qi_bound"] = qi_bound(mode.f_squared, atom);
    rep["qi_bound_windowed"] = qi_bound_windowed(mode.f_squared, atom, w);

    if (regime.regime != Regime::resonant_short)
        warnings.push_back("ratio_resonant_short evaluated outside its regime (" +
                           regime_name(regime.regime) + "); treat as extrapolation");
    if (regime.regime != Regime::far_below)
        warnings.push_back("delta_p2_low_omega evaluated outside far_below regime");
    if (regime.regime != Regime::far_above)
        warnings.push_back("delta_p2_high_omega evaluated outside far_above regime");
    if (mode.from_geometry && !mode.geometry_strict)
        warnings.push_back("geometry not strictly ordered (b < a < d)");
    rep["warnings"] = warnings;
    return rep;
}

json run_delta_p2(const json& cfg, std::optional<std::uint64_t> seed_override) {
    const PhotonState s = state_from_json(require(cfg, "state", "config"), seed_override);
    const AtomParams atom = atom_from_json(require(cfg, "atom", "config"));
    const TransitWindow w = window_from_json(require(cfg, "window", "config"));
    const ModeData mode = mode_from_json(cfg);
    const double f = std::sqrt(mode.f_squared);

    json rep;
    rep["command"] = "delta-p2";
    rep["config_hash"] = config_hash(cfg);
    rep["regime"] = regime_to_json(classify_regime(mode.omega, atom, w));
    rep["delta_p2"] = delta_P2(s, f, mode.omega, atom, w);
    rep["delta_p2_low_omega"] = delta_P2_low_omega(s, f, atom, w);
    rep["delta_p2_high_omega"] = delta_P2_high_omega(s, f, mode.omega, atom, w);
    const double bound = qi_bound(mode.f_squared, atom);
    const double bound_w = qi_bound_windowed(mode.f_squared, atom, w);
    rep["qi_bound"] = bound;
    rep["qi_bound_windowed"] = bound_w;
    // saturation: how much of the sharp per-window bound the state uses
    rep["qi_saturation"] =
        (bound_w != 0.0) ? rep["delta_p2_low_omega"].get<double>() / bound_w : 0.0;
    rep["warnings"] = json::array();
    return rep;
}

json run_oracle_compare(const json& cfg, std::optional<std::uint64_t> seed_override) {
    const PhotonState s = state_from_json(require(cfg, "state", "config"), seed_override);
    const AtomParams atom = atom_from_json(require(cfg, "atom", "config"));
    const TransitWindow w = window_from_json(require(cfg, "window", "config"));
    const ModeData mode = mode_from_json(cfg);
    const OracleConfig ocfg =
        cfg.contains("oracle") ? oracle_from_json(cfg.at("oracle")) : OracleConfig{};
    const double f = std::sqrt(mode.f_squared);

    const FirstOrderComparison cmp = compare_first_order(s, f, mode.omega, atom, w, ocfg);

    json rep;
    rep["command"] = "oracle-compare";
    rep["config_hash"] = config_hash(cfg);
    rep["regime"] = regime_to_json(classify_regime(mode.omega, atom, w));
    rep["oracle"] = {{"truncation_dim", ocfg.truncation_dim},
                     {"integrator",
                      ocfg.integrator == OracleConfig::Integrator::matrix_exponential
                          ? "matrix_exponential"
                          : "adaptive_stepper"},
                     {"step_tolerance", ocfg.step_tolerance}};
    rep["p2_exact"] = cmp.p2_exact;
    rep["p2_first_order"] = cmp.p2_first_order;
    rep["abs_discrepancy"] = cmp.abs_discrepancy;
    rep["rel_discrepancy"] = cmp.rel_discrepancy;
    rep["halving_factor"] = cmp.halving_factor;
    rep["scaling_exponent"] = cmp.scaling_exponent;
    rep["truncation_shift"] = cmp.truncation_shift;
    rep["warnings"] = json::array();
    return rep;
}

json run_feasibility(const json& cfg) {
    ExperimentSetup setup = [&]() -> ExperimentSetup {
        if (cfg.contains("preset")) {
            const std::string preset = get_string(cfg, "preset", "config");
            if (preset == "rydberg_51_50") return rydberg_51_50_setup();
            throw ConfigError("config error at preset: unknown preset '" + preset + "'");
        }
        return setup_from_json(require(cfg, "setup", "config"));
    }();

    CriteriaThresholds th;
    if (cfg.contains("thresholds")) {
        const json& t = cfg.at("thresholds");
        th.much_less = get_number_or(t, "much_less", "thresholds", th.much_less);
        th.resonance_tol = get_number_or(t, "resonance_tol", "thresholds", th.resonance_tol);
        th.lifetime_band = get_number_or(t, "lifetime_band", "thresholds", th.lifetime_band);
    }

    const CriteriaReport report = check_criteria(setup, th);
    json rep = json::parse(report.to_json());
    json out;
    out["command"] = "feasibility";
    out["config_hash"] = config_hash(cfg);
    out["setup"] = {{"cavity_a", setup.cavity_a},
                    {"cavity_b", setup.cavity_b},
                    {"cavity_d", setup.cavity_d},
                    {"transition_frequency", setup.transition_frequency},
                    {"atom_size", setup.atom_size},
                    {"atom_speed", setup.atom_speed},
                    {"lifetime_tau", setup.lifetime_tau},
                    {"state_beta", setup.state_beta}};
    out["report"] = rep;
    out["text"] = report.to_text();
    return out;
}

std::string report_text(const json& report) {
    if (report.contains("text")) return report.at("text").get<std::string>();
    std::ostringstream out;
    out << report.value("command", "report") << " report\n";
    for (const auto& [key, value] : report.items()) {
        if (key == "command" || key == "text") continue;
        if (value.is_number_float())
            out << "  " << key << ": " << fmt17(value.get<double>()) << "\n";
        else
            out << "  " << key << ": " << value.dump() << "\n";
    }
    return out.str();
}

}  // namespace subvac
