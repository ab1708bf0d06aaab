#include "subvac/feasibility.hpp"

#include "subvac/states.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace subvac {

void ExperimentSetup::validate() const {
    const double fields[] = {cavity_a, cavity_b, cavity_d, transition_frequency,
                             atom_size, atom_speed, lifetime_tau};
    for (double v : fields)
        if (!(v > 0.0 && std::isfinite(v)))
            throw std::invalid_argument("ExperimentSetup: all quantities must be positive");
    if (!(state_beta >= 0.0 && std::isfinite(state_beta)))
        throw std::invalid_argument("ExperimentSetup: state_beta must be >= 0");
}

ExperimentSetup rydberg_51_50_setup() {
    ExperimentSetup s;
    s.cavity_a = 4.146e-3;
    s.cavity_b = 1.0e-6;
    s.cavity_d = 4.146e-3;
    s.transition_frequency = 51.1e9;
    s.atom_size = 100e-9;
    s.atom_speed = 3.3e5;
    s.lifetime_tau = 3.6e-2;
    s.state_beta = 0.32;
    return s;
}

double negative_window(double frequency_hz, double beta) {
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("negative_window: frequency must be > 0");
    if (!(beta >= 0.0)) throw std::invalid_argument("negative_window: beta must be >= 0");
    const double k = std::sqrt(2.0) * beta;
    if (beta == 0.0 || k >= 1.0) return 0.0;  // field never dips below zero
    const double fraction = std::acos(k) / M_PI;
    const double oscillation_period = 1.0 / (2.0 * frequency_hz);  // <E^2> runs at 2w
    return fraction * oscillation_period;
}

double in_transit_decay_probability(const ExperimentSetup& setup) {
    setup.validate();
    const double transit = setup.cavity_b / setup.atom_speed;
    return std::min(1.0, transit / setup.lifetime_tau);
}

namespace {

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

CriteriaReport check_criteria(const ExperimentSetup& setup,
                              const CriteriaThresholds& thresholds) {
    setup.validate();
    CriteriaReport rep;
    rep.thresholds = thresholds;

    const double c = si::speed_of_light;
    const double a = setup.cavity_a, b = setup.cavity_b, d = setup.cavity_d;

    rep.cavity_frequency_hz =
        0.5 * c * std::sqrt(1.0 / (a * a) + 1.0 / (d * d));
    rep.negative_window_s = negative_window(rep.cavity_frequency_hz, setup.state_beta);
    rep.negative_fraction =
        (rep.negative_window_s > 0.0)
            ? rep.negative_window_s * 2.0 * rep.cavity_frequency_hz
            : 0.0;
    rep.required_min_speed =
        (rep.negative_window_s > 0.0) ? b / rep.negative_window_s : 0.0;

    const double raw_decay = (b / setup.atom_speed) / setup.lifetime_tau;
    rep.in_transit_decay_probability = std::min(1.0, raw_decay);
    rep.decay_linearization_valid = raw_decay < 1.0;

    // (1) resonance between cavity and transition
    const double mismatch =
        std::abs(rep.cavity_frequency_hz - setup.transition_frequency) /
        setup.transition_frequency;
    rep.criteria.push_back({1, "cavity mode resonant with atomic transition",
                            mismatch <= thresholds.resonance_tol, false, mismatch,
                            (mismatch > 0.0) ? thresholds.resonance_tol / mismatch : 1e30});

    // (2) informational: microwave Rydberg transition
    const bool microwave =
        setup.transition_frequency >= 1e9 && setup.transition_frequency <= 1e12;
    rep.criteria.push_back({2, "transition in the microwave Rydberg range", microwave,
                            true, setup.transition_frequency, 1.0});

    // (3) excited mode is the lowest mode (requires b <= a <= d)
    const bool ordered = b <= a && a <= d;
    rep.criteria.push_back({3, "excited cavity mode is the lowest mode (b <= a <= d)",
                            ordered, false, rep.cavity_frequency_hz, ordered ? 1.0 : 0.0});

    // (4) atom fits through the smallest dimension
    rep.criteria.push_back({4, "smallest cavity dimension exceeds atom size",
                            b > setup.atom_size, false, b, b / setup.atom_size});

    // (5) transit no longer than the negative-<E^2> window
    const double transit = b / setup.atom_speed;
    const bool fits = rep.negative_window_s > 0.0 && transit <= rep.negative_window_s;
    rep.criteria.push_back({5, "transit time fits inside the negative-<E^2> window", fits,
                            false, transit,
                            (transit > 0.0) ? rep.negative_window_s / transit : 0.0});

    // (6) non-relativistic
    const double v_over_c = setup.atom_speed / c;
    rep.criteria.push_back({6, "non-relativistic speed, v/c << 1",
                            v_over_c < thresholds.much_less, false, v_over_c,
                            thresholds.much_less / v_over_c});

    // (7) lifetime comparable to transit time
    const double life_ratio = transit / setup.lifetime_tau;
    rep.criteria.push_back({7, "excited-state lifetime comparable to transit time",
                            life_ratio >= thresholds.lifetime_band, false, life_ratio,
                            life_ratio / thresholds.lifetime_band});

    if (!rep.decay_linearization_valid)
        rep.notes.push_back("in-transit decay probability clamped at 1; the linearized "
                            "(b/v)/tau estimate is outside its validity range");

    {
        std::ostringstream note;
        note << "negative-window check: exact duration " << sci(rep.negative_window_s)
             << " s (fraction " << sci(rep.negative_fraction)
             << " of the field period); heuristic 1/(6 f) = "
             << sci(1.0 / (6.0 * rep.cavity_frequency_hz)) << " s";
        // the 1/(6f) window at 51.1 GHz is sometimes quoted as ~3e-11 s;
        // the arithmetic gives 3.3e-12 s, consistent with the ~3e5 m/s
        // speed needed to cross b = 1 um inside the window
        if (std::abs(rep.cavity_frequency_hz - 51.1e9) / 51.1e9 < 0.05)
            note << ". The sometimes-quoted 3e-11 s figure at 51.1 GHz overstates "
                    "1/(6 f) by a factor ~10.";
        rep.notes.push_back(note.str());
    }
    return rep;
}

bool CriteriaReport::all_required_pass() const {
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) {
        return c.pass || c.informational;
    });
}

std::string CriteriaReport::to_text() const {
    std::ostringstream out;
    out << "feasibility report\n";
    out << "  cavity frequency: " << sci(cavity_frequency_hz) << " Hz\n";
    out << "  negative <E^2> window: " << sci(negative_window_s) << " s (fraction "
        << sci(negative_fraction) << " of each period)\n";
    out << "  required minimum speed: " << sci(required_min_speed) << " m/s\n";
    out << "  in-transit decay probability: " << sci(in_transit_decay_probability)
        << (decay_linearization_valid ? "" : " (clamped; linearization invalid)") << "\n";
    out << "  thresholds: much_less=" << sci(thresholds.much_less)
        << " resonance_tol=" << sci(thresholds.resonance_tol)
        << " lifetime_band=" << sci(thresholds.lifetime_band) << "\n";
    for (const auto& c : criteria) {
        out << "  (" << c.index << ") " << (c.pass ? "PASS" : "FAIL")
            << (c.informational ? " [info]" : "") << "  " << c.description
            << "  value=" << sci(c.value) << " margin=" << sci(c.margin) << "\n";
    }
    for (const auto& n : notes) out << "  note: " << n << "\n";
    return out.str();
}

std::string CriteriaReport::to_json() const {
    nlohmann::ordered_json j;
    j["cavity_frequency_hz"] = cavity_frequency_hz;
    j["negative_window_s"] = negative_window_s;
    j["negative_fraction"] = negative_fraction;
    j["required_min_speed"] = required_min_speed;
    j["in_transit_decay_probability"] = in_transit_decay_probability;
    j["decay_linearization_valid"] = decay_linearization_valid;
    j["thresholds"] = {{"much_less", thresholds.much_less},
                       {"resonance_tol", thresholds.resonance_tol},
                       {"lifetime_band", thresholds.lifetime_band}};
    j["criteria"] = nlohmann::ordered_json::array();
    for (const auto& c : criteria) {
        j["criteria"].push_back({{"index", c.index},
                                 {"description", c.description},
                                 {"pass", c.pass},
                                 {"informational", c.informational},
                                 {"value", c.value},
                                 {"margin", c.margin}});
    }
    j["notes"] = notes;
    return j.dump(2);
}

}  // namespace subvac
