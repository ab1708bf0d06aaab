// Batch scenarios: JSON configs in, deterministic CSV/JSON reports out.
//
// This is the layer the command-line tool is built on.  Configs are JSON
// documents; every runner validates its inputs with field-path context and
// produces byte-stable output (fixed float formatting, ordered keys), so
// identical configs give identical bytes.

#pragma once

#include "subvac/feasibility.hpp"
#include "subvac/oracle.hpp"
#include "subvac/perturbation.hpp"
#include "subvac/states.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace subvac {

using json = nlohmann::ordered_json;

// Configuration problem (missing field, bad type, bad value).  The message
// carries the config path of the offending field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// 17-significant-digit formatting; round-trips doubles exactly.
std::string fmt17(double v);

// FNV-1a over the canonical dump of a config, as 16 hex digits.
std::string config_hash(const json& cfg);

// Builders from config fragments (throw ConfigError on problems).
PhotonState state_from_json(const json& j,
                            std::optional<std::uint64_t> seed_override = std::nullopt);
AtomParams atom_from_json(const json& j);
TransitWindow window_from_json(const json& j);
OracleConfig oracle_from_json(const json& j);
ExperimentSetup setup_from_json(const json& j);

// Mode data for the perturbation formulas: either direct {f_squared,
// omega} or derived from {geometry, position}.
struct ModeData {
    double f_squared;
    double omega;
    bool from_geometry = false;
    bool geometry_strict = true;  // b < a < d held strictly
};
ModeData mode_from_json(const json& cfg);

// Sweep of the worst/best-phase resonant-short ratio over beta.
// CSV columns: beta, ratio_min, ratio_max.
struct SweepBetaConfig {
    double from = 0.0;
    double to = 1.0;
    int steps = 101;
};
SweepBetaConfig sweep_beta_from_json(const json& cfg);
std::string run_sweep_beta(const SweepBetaConfig& sweep, int workers);

// Time series of <E^2>, <B^2> and the energy density at a cavity position.
// CSV columns: t, e2, b2, rho.  Config: state, geometry, position, time.
std::string run_e2_timeseries(const json& cfg, int workers,
                              std::optional<std::uint64_t> seed_override = std::nullopt);

// Full probability report: P2, P2(0), ratio, delta, limits, regime.
json run_probability(const json& cfg,
                     std::optional<std::uint64_t> seed_override = std::nullopt);

// delta P2 against the suppression bounds.
json run_delta_p2(const json& cfg,
                  std::optional<std::uint64_t> seed_override = std::nullopt);

// Exact-vs-first-order comparison (discrepancy and coupling scaling).
json run_oracle_compare(const json& cfg,
                        std::optional<std::uint64_t> seed_override = std::nullopt);

// Experimental criteria screening; accepts {"preset": "rydberg_51_50"}.
json run_feasibility(const json& cfg);

// Human-readable rendering of a report produced by the run_* functions.
std::string report_text(const json& report);

}  // namespace subvac
