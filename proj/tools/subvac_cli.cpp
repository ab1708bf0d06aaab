// subvac-cli: batch front end for cavity sub-vacuum decay calculations.
//
// Subcommands: sweep-beta, e2-timeseries, probability, delta-p2,
// oracle-compare, feasibility.  Configs are JSON files (see README for a
// complete example per subcommand).  Reports print as text on stdout and,
// with --output, as JSON (or CSV for the curve commands) to a file.
//
// Exit codes: 0 success, 1 I/O failure, 2 config error,
// 3 numerical-validity error (truncation leakage, degenerate window, ...).

#include "subvac/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using subvac::json;

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw subvac::ConfigError("config error: cannot open '" + path + "'");
    try {
        return json::parse(in,
                           /*callback=*/nullptr,
                           /*allow_exceptions=*/true,
                           /*ignore_comments=*/true);
    } catch (const nlohmann::json::parse_error& e) {
        throw subvac::ConfigError("config error in '" + path + "': " + e.what());
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::ios_base::failure("cannot open output file '" + path + "'");
    out << content;
    if (!out)
        throw std::ios_base::failure("failed writing output file '" + path + "'");
}

void emit(const std::string& text, const std::string& payload,
          const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload;
    } else {
        write_file(output_path, payload);
        std::cout << text;
        std::cout << "wrote " << output_path << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cavity sub-vacuum decay probability toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags remain valid after the subcommand name

    std::string config_path;
    std::string output_path;
    int workers = 1;
    std::optional<std::uint64_t> seed;
    app.add_option("--config,-c", config_path, "JSON config file")->capture_default_str();
    app.add_option("--output,-o", output_path, "output file (CSV or JSON)");
    app.add_option("--workers,-j", workers, "worker threads for sweeps")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "override the RNG seed of random state specs");

    auto* sweep = app.add_subcommand("sweep-beta",
                                     "ratio extremes vs beta for the vacuum-plus-two state");
    double sweep_from = 0.0, sweep_to = 1.0;
    int sweep_steps = 101;
    sweep->add_option("--from", sweep_from, "lowest beta")->capture_default_str();
    sweep->add_option("--to", sweep_to, "highest beta")->capture_default_str();
    sweep->add_option("--steps", sweep_steps, "grid points")->capture_default_str();

    auto* e2ts = app.add_subcommand("e2-timeseries",
                                    "<E^2>, <B^2>, rho vs time at a cavity position");
    auto* prob = app.add_subcommand("probability", "P2, P2(0), ratio and limits");
    auto* dp2 = app.add_subcommand("delta-p2", "delta P2 against the suppression bounds");
    auto* orc = app.add_subcommand("oracle-compare",
                                   "exact evolution vs first-order probability");
    auto* feas = app.add_subcommand("feasibility", "experimental criteria screening");
    std::string preset;
    feas->add_option("--preset", preset, "named setup (rydberg_51_50)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) {
            subvac::SweepBetaConfig sw{sweep_from, sweep_to, sweep_steps};
            if (!config_path.empty()) sw = subvac::sweep_beta_from_json(load_config(config_path));
            const std::string csv = run_sweep_beta(sw, workers);
            emit("sweep-beta done\n", csv, output_path);
        } else if (e2ts->parsed()) {
            if (config_path.empty())
                throw subvac::ConfigError("config error: e2-timeseries requires --config");
            const std::string csv =
                subvac::run_e2_timeseries(load_config(config_path), workers, seed);
            emit("e2-timeseries done\n", csv, output_path);
        } else {
            json report;
            if (prob->parsed()) {
                if (config_path.empty())
                    throw subvac::ConfigError("config error: probability requires --config");
                report = subvac::run_probability(load_config(config_path), seed);
            } else if (dp2->parsed()) {
                if (config_path.empty())
                    throw subvac::ConfigError("config error: delta-p2 requires --config");
                report = subvac::run_delta_p2(load_config(config_path), seed);
            } else if (orc->parsed()) {
                if (config_path.empty())
                    throw subvac::ConfigError("config error: oracle-compare requires --config");
                report = subvac::run_oracle_compare(load_config(config_path), seed);
            } else if (feas->parsed()) {
                json cfg;
                if (!config_path.empty()) cfg = load_config(config_path);
                if (!preset.empty()) cfg["preset"] = preset;
                if (cfg.empty())
                    throw subvac::ConfigError(
                        "config error: feasibility requires --config or --preset");
                report = subvac::run_feasibility(cfg);
            }
            std::cout << subvac::report_text(report);
            if (!output_path.empty()) {
                write_file(output_path, report.dump(2) + "\n");
                std::cout << "wrote " << output_path << "\n";
            }
        }
    } catch (const subvac::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const subvac::TruncationError& e) {
        std::cerr << "numerical-validity error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "numerical-validity error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical-validity error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
