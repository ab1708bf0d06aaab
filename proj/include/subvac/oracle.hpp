// Exact unitary evolution of atom x mode on a truncated Fock space.
//
// Validates the first-order probabilities against the full dipole
// Hamiltonian with both rotating and counter-rotating terms:
//
//   H = w a'a + de P_excited - g (a + a') (sigma+ + sigma-),   g = d f.
//
// Sudden switching: the coupling acts only over [t0, t1] with constant g
// (the TE(1,0,1) electric profile does not vary along the transit axis, so
// f is constant while the atom is inside).  The composite state handed to
// evolve() is the Schroedinger-picture state at t0; prepare_composite()
// produces it from a photon state specified at t = 0 by applying the free
// mode phases e^{-i n w t0}.
//
// Adiabatic switching -- ramping the coupling on from the distant past and
// averaging the oscillations away -- is a different contract: it changes
// which detuning regimes track the squared field, and it removes the
// transient terms this model is about.  An atom entering a cavity is the
// sudden case, so only that is implemented.

#pragma once

#include "subvac/perturbation.hpp"
#include "subvac/states.hpp"

#include <Eigen/Dense>

namespace subvac {

// Amplitudes over { |n> x |excited>, |n> x |ground> }, n = 0..N, stored as
// two contiguous blocks of size N+1 (excited first).
class CompositeState {
public:
    CompositeState(int fock_dim, Eigen::VectorXcd amplitudes);

    int fock_dim() const { return fock_dim_; }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }

    cplx excited(int n) const { return amps_(n); }
    cplx ground(int n) const { return amps_(fock_dim_ + n); }

    double norm() const { return amps_.norm(); }
    double ground_population() const;
    // Population in the top `levels` Fock levels, both atomic states.
    double top_level_population(int levels) const;

private:
    int fock_dim_;
    Eigen::VectorXcd amps_;
};

struct OracleConfig {
    enum class Integrator { matrix_exponential, adaptive_stepper };

    int truncation_dim = 32;
    Integrator integrator = Integrator::matrix_exponential;
    double step_tolerance = 1e-10;    // adaptive stepper local tolerance
    double leakage_tolerance = 1e-6;  // top-two-level population cutoff

    void validate() const {
        if (truncation_dim < 2)
            throw std::invalid_argument("OracleConfig: truncation_dim must be >= 2");
        if (!(step_tolerance > 0.0))
            throw std::invalid_argument("OracleConfig: step_tolerance must be > 0");
    }
};

// Product state (photon state in the excited-atom block), padded or
// truncated to fock_dim.
CompositeState make_composite(const PhotonState& s, int fock_dim);

// Free evolution of the mode from t = 0 to t0: c_n -> c_n e^{-i n w t0}.
// The atomic phase is global and dropped.
CompositeState prepare_composite(const PhotonState& s, int fock_dim, double omega,
                                 double t0);

// Evolve by e^{-i H (t1 - t0)}.  Throws TruncationError if the top two
// Fock levels accumulate more than cfg.leakage_tolerance population, and
// std::runtime_error if unitarity drifts beyond 1e-10.
CompositeState evolve(const CompositeState& s0, double f, double omega,
                      const AtomParams& atom, const TransitWindow& w,
                      const OracleConfig& cfg);

struct FirstOrderComparison {
    double p2_exact;
    double p2_first_order;
    double abs_discrepancy;
    double rel_discrepancy;     // relative to p2_exact
    double halving_factor;      // discrepancy(g) / discrepancy(g/2), ~16
    double scaling_exponent;    // log2(halving_factor), ~4
    double truncation_shift;    // |p2_exact(N) - p2_exact(N+4)|
};

// Runs the exact evolution against prob_P2 for the same inputs, then
// repeats at half the dipole coupling to measure the error scaling.
FirstOrderComparison compare_first_order(const PhotonState& s, double f, double omega,
                                         const AtomParams& atom, const TransitWindow& w,
                                         const OracleConfig& cfg);

}  // namespace subvac
