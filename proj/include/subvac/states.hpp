// Single-mode photon states on a truncated Fock basis.
//
// A state is a normalized complex amplitude vector c_0..c_N over photon
// number states of one cavity mode.  Everything here is phrased in terms
// of two state functionals:
//
//   <n>  = sum_n n |c_n|^2                       (mean photon number)
//   C    = sum_n sqrt((n+1)(n+2)) c_n c*_{n+2}   (pair correlation)
//
// The normal-ordered mean squared electric field of the mode is
//   <E^2>(x0, t) = f^2(x0) [ 2<n> + 2 Re(C e^{2 i w t}) ],
// so the n/n+2 coherence C is the only route to sub-vacuum values
// (<E^2> < 0).  The bracket is bounded below by -1 for every state, which
// is the quantum-inequality statement this library revolves around.

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace subvac {

using cplx = std::complex<double>;

// Thrown when a Fock-space cutoff is too small for the requested state.
// required_dim() reports a cutoff that would satisfy the norm threshold.
class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what, int required_dim)
        : std::runtime_error(what), required_dim_(required_dim) {}
    int required_dim() const { return required_dim_; }

private:
    int required_dim_;
};

// Squared mode-function amplitude and angular frequency at a fixed point.
// f_squared carries the spatial profile; omega the mode frequency.
struct FieldPoint {
    double f_squared;
    double omega;

    FieldPoint(double f_squared_, double omega_)
        : f_squared(f_squared_), omega(omega_) {
        if (!(f_squared >= 0.0))
            throw std::invalid_argument("FieldPoint: f_squared must be >= 0");
        if (!(omega > 0.0))
            throw std::invalid_argument("FieldPoint: omega must be > 0");
    }
};

// Normalized amplitude vector over |0>..|N>.  Immutable after construction;
// all operations on it are pure functions, safe for concurrent readers.
class PhotonState {
public:
    // Normalizes on construction.  Rejects vectors with norm^2 < 1e-30.
    explicit PhotonState(std::vector<cplx> amplitudes);

    int dim() const { return static_cast<int>(c_.size()); }
    const std::vector<cplx>& amplitudes() const { return c_; }

    // Amplitude c_n; zero beyond the truncation.
    cplx amplitude(int n) const {
        return (n >= 0 && n < dim()) ? c_[static_cast<size_t>(n)] : cplx{0.0, 0.0};
    }

private:
    std::vector<cplx> c_;
};

// |n> on a dim-dimensional truncation.  Requires 0 <= n < dim.
PhotonState make_number_state(int n, int dim);

// (|0> + beta |2>) / sqrt(1 + beta^2), beta real >= 0.  Requires dim >= 3.
PhotonState make_vacuum_plus_two(double beta, int dim);

// Squeezed vacuum with squeeze parameter zeta = r e^{i phi}, expanded over
// even Fock states:
//   c_{2m} = (1/sqrt(cosh r)) sqrt((2m)!)/(2^m m!) (-e^{i phi} tanh r)^m.
// The truncated norm must be >= 1 - 1e-8 or a TruncationError is thrown
// naming a sufficient dim.  The state is renormalized after truncation.
//
// With this convention C = -e^{-i phi} cosh r sinh r, so at phi = 0 the
// state sits at its most sub-vacuum phase at t = 0:
//   <E^2>_min = -f^2 (1 - e^{-2r}),  approached as cos(2 w t - phi) -> 1.
PhotonState make_squeezed_vacuum(double r, double phi, int dim);

// As above with dim = squeezed_vacuum_dim(r).
PhotonState make_squeezed_vacuum(double r, double phi);

// Smallest truncation dim keeping the discarded norm below ~1e-10 (floor 8).
// Grows like 2r / (1 - tanh^2 r) for large r; e.g. r=1 -> ~90, r=2 -> ~700.
int squeezed_vacuum_dim(double r);

// Haar-ish random normalized state (iid complex Gaussian amplitudes,
// normalized).  Deterministic for a given seed.
PhotonState make_random_state(int dim, std::uint64_t seed);

// <n> = sum n |c_n|^2.
double mean_photon_number(const PhotonState& s);

// C = sum_n sqrt((n+1)(n+2)) c_n c*_{n+2}.  Requires dim >= 3 so the
// c_0 c*_2 slot exists.  |C| <= sqrt(<n>(<n>+1)) by Cauchy-Schwarz.
cplx pair_correlation(const PhotonState& s);

// S(theta) = 2<n> + 2 Re(C e^{i theta}): the <E^2> bracket at explicit
// oscillation phase theta = 2 w t.  S(theta) >= -1 for every state.
double subvac_functional(const PhotonState& s, double phase);

// min over phase of subvac_functional = 2<n> - 2|C|.
double subvac_minimum(const PhotonState& s);

// Same minimum evaluated through the sum-of-squares decomposition
//   S_min = -1 + sum_{n>=1} | sqrt(n) c_n + sqrt(n-1) c_{n-2} |^2
// after rotating the amplitudes to the worst phase.  Agrees with
// subvac_minimum to ~1e-10; the agreement is the identity behind S >= -1.
double subvac_decomposition(const PhotonState& s);

// c_n -> c_n e^{i n alpha} (free mode evolution by -alpha/omega).
// Maps C -> C e^{-2 i alpha}; |C| and <n> are invariant.
PhotonState rotated(const PhotonState& s, double alpha);

// Rotation making C real and <= 0, i.e. the state whose t = 0 field is at
// the most sub-vacuum point of its cycle.  Identity when C = 0.
PhotonState rotated_to_worst_phase(const PhotonState& s);

// <E^2>(x0, t) = f^2 [ 2<n> + 2 Re(C e^{2 i w t}) ], normal ordered
// (vacuum reads zero).  Never below -f^2.
double mean_E_squared(const PhotonState& s, const FieldPoint& fp, double t);

// Fraction of each oscillation period with <E^2> < 0:
//   arccos(<n>/|C|) / pi   when |C| > <n>,  else 0.
// Dimensionless and frequency-independent.  For the vacuum-plus-two state
// this is arccos(sqrt(2) beta) / pi, about 0.350 at beta = 0.32.
double negative_e2_fraction(const PhotonState& s);

}  // namespace subvac
