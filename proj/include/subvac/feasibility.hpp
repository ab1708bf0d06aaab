// SI-unit feasibility screening for a Rydberg-atom cavity-transit
// measurement of sub-vacuum field suppression.
//
// Everything else in this library works in natural units (hbar = c = 1,
// lengths as the base dimension).  This module alone owns the physical
// constants and the conversion to laboratory quantities, and evaluates the
// seven practicality criteria for a concrete setup:
//
//   (1) cavity resonant with the atomic transition
//   (2) microwave-range Rydberg transition (informational)
//   (3) excited mode is the lowest mode, f = (c/2) sqrt(1/a^2 + 1/d^2)
//   (4) smallest cavity dimension larger than the atom
//   (5) transit time within one negative-<E^2> window
//   (6) non-relativistic speed, v/c << 1
//   (7) excited-state lifetime comparable to the transit time

#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace subvac {

namespace si {

// CODATA / SI defining constants.
inline constexpr double speed_of_light = 299792458.0;       // m/s, exact
inline constexpr double hbar = 1.054571817e-34;             // J s (2018 CODATA)

// Natural units use the meter as base: angular frequencies are 1/m.
inline double frequency_hz_from_natural(double omega_per_m) {
    return speed_of_light * omega_per_m / (2.0 * M_PI);
}
inline double natural_angular_frequency(double frequency_hz) {
    return 2.0 * M_PI * frequency_hz / speed_of_light;
}
inline double seconds_from_natural(double length_m) { return length_m / speed_of_light; }
inline double natural_from_seconds(double t_s) { return t_s * speed_of_light; }

}  // namespace si

struct ExperimentSetup {
    double cavity_a;             // m
    double cavity_b;             // m  (transit dimension, smallest)
    double cavity_d;             // m
    double transition_frequency; // Hz
    double atom_size;            // m
    double atom_speed;           // m/s
    double lifetime_tau;         // s
    double state_beta = 0.32;    // vacuum-plus-two parameter for the window

    void validate() const;
};

// The n = 51 -> 50 Rydberg transition setup: f = 51.1 GHz, tau = 3.6e-2 s,
// atom size 100 nm, cavity a = d = 4.146 mm, b = 1 um, v = 3.3e5 m/s.
ExperimentSetup rydberg_51_50_setup();

struct CriteriaThresholds {
    double much_less = 0.05;       // "<<" cutoff (used for v/c)
    double resonance_tol = 0.05;   // relative cavity/atom frequency mismatch
    double lifetime_band = 0.1;    // transit/lifetime ratio above this passes (7)
};

struct CriterionResult {
    int index;
    std::string description;
    bool pass;
    bool informational = false;
    double value = 0.0;   // the quantity examined
    double margin = 0.0;  // how far from the threshold (>1 comfortable)
};

struct CriteriaReport {
    std::vector<CriterionResult> criteria;
    double cavity_frequency_hz;
    double negative_window_s;       // exact duration of the <E^2> < 0 interval
    double negative_fraction;       // of each field oscillation period
    double required_min_speed;      // m/s to fit the transit in the window
    double in_transit_decay_probability;  // clamped at 1
    bool decay_linearization_valid;       // false when the clamp engaged
    CriteriaThresholds thresholds;
    std::vector<std::string> notes;

    bool all_required_pass() const;
    std::string to_text() const;
    std::string to_json() const;
};

// Duration of the <E^2> < 0 interval per field oscillation period for a
// vacuum-plus-two state with the given beta, at mode frequency f (Hz):
//   dt = arccos(sqrt(2) beta) / pi * 1 / (2 f)     for 0 < beta < sqrt(2)/2,
// zero otherwise.  The popular 1/(6 f) figure is the beta ~ 0.32 case.
double negative_window(double frequency_hz, double beta);

// Linearized decay probability (b/v)/tau during the transit, clamped at 1.
double in_transit_decay_probability(const ExperimentSetup& setup);

CriteriaReport check_criteria(const ExperimentSetup& setup,
                              const CriteriaThresholds& thresholds = {});

}  // namespace subvac
