// First-order de-excitation probability of a two-level atom crossing the
// cavity, with both rotating and counter-rotating terms retained.
//
// The interaction is switched on suddenly over a window [t0, t1] during
// which the coupling amplitude f is constant.  Two window integrals carry
// all the time dependence:
//
//   I1 = int_{t0}^{t1} e^{-i (w + de) t} dt     (counter-rotating)
//   I2 = int_{t0}^{t1} e^{+i (w - de) t} dt     (near-resonant)
//
// where de is the atomic transition frequency.  The de-excitation
// probability for an initial state with mean photon number <n> and pair
// correlation C is
//
//   P2 = d^2 f^2 [ <n> |I1|^2 + (<n>+1) |I2|^2 + 2 Re(C I1* I2) ],
//
// d being the dipole matrix element magnitude.  P2(0) = d^2 f^2 |I2|^2 is
// the cavity-vacuum reference.  Near resonance with a short window the
// ratio P2/P2(0) reduces to 1 + <E^2>(x0, t0)/f^2, so the decay
// probability tracks the mean squared field, including sub-vacuum dips.

#pragma once

#include "subvac/states.hpp"

#include <optional>
#include <string>

namespace subvac {

struct AtomParams {
    double delta_eps;                   // transition angular frequency, > 0
    double dipole;                      // |<psi2| d_y |psi1>| >= 0
    std::optional<double> lifetime_tau; // excited-state lifetime, if known

    AtomParams(double delta_eps_, double dipole_,
               std::optional<double> lifetime = std::nullopt)
        : delta_eps(delta_eps_), dipole(dipole_), lifetime_tau(lifetime) {
        if (!(delta_eps > 0.0))
            throw std::invalid_argument("AtomParams: delta_eps must be > 0");
        if (!(std::isfinite(dipole) && dipole >= 0.0))
            throw std::invalid_argument("AtomParams: dipole must be finite and >= 0");
    }
};

struct TransitWindow {
    double t0, t1;

    TransitWindow(double t0_, double t1_) : t0(t0_), t1(t1_) {
        if (!(t1 > t0))
            throw std::invalid_argument("TransitWindow: t1 must be > t0");
    }
    double duration() const { return t1 - t0; }
};

enum class Regime { resonant_short, resonant_general, far_below, far_above, general };

std::string regime_name(Regime r);

// "<<" and ">>" cutoffs used by the regime classifier.  Advisory only:
// the limit formulas stay callable outside their regime.
struct RegimeThresholds {
    double much_less = 0.05;
    double much_greater = 20.0;
    double resonance_tol = 0.05;  // |w/de - 1| below this counts as resonant
};

struct RegimeReport {
    double omega_dt;         // w (t1 - t0)
    double deps_dt;          // de (t1 - t0)
    double omega_over_deps;  // w / de
    Regime regime;
    RegimeThresholds thresholds;  // echoed for reproducibility
};

// Window integrals.  Both are evaluated in the product form
// dt e^{i k tbar} sinc(k dt / 2), which is exact and smooth through the
// resonance k -> 0 (the sinc uses a Taylor branch for small arguments).
cplx integral_I1(double omega, const AtomParams& atom, const TransitWindow& w);
cplx integral_I2(double omega, const AtomParams& atom, const TransitWindow& w);

// First-order amplitude into |m> x |psi2>:
//   A_2m = i d [ sqrt(m+1) c_{m+1} f I1 + sqrt(m) c_{m-1} f I2 ].
// Amplitudes beyond the truncation read as zero, so m may range up to
// dim(s) (one above the top populated level).
cplx amplitude_A2m(const PhotonState& s, int m, double f, double omega,
                   const AtomParams& atom, const TransitWindow& w);

// De-excitation probability P2 (>= 0).  Equals sum_m |A_2m|^2.
double prob_P2(const PhotonState& s, double f, double omega, const AtomParams& atom,
               const TransitWindow& w);

// Vacuum reference P2(0) = d^2 f^2 |I2|^2.  Valid as an absolute decay
// probability only near resonance (single decay mode); the difference
// delta_P2 carries no such restriction.
double prob_P2_vacuum(double f, double omega, const AtomParams& atom,
                      const TransitWindow& w);

// P2 / P2(0); the mode amplitude f cancels.  Throws std::domain_error on
// windows where I2 vanishes.
double ratio_P2(const PhotonState& s, double omega, const AtomParams& atom,
                const TransitWindow& w);

// Near-resonance, short-window limit of the ratio:
//   2 <n> + 1 + 2 Re(C e^{2 i w t0}) = 1 + <E^2>(x0, t0)/f^2  >= 0.
// Callers should gate on classify_regime() == resonant_short; the formula
// itself is evaluated unconditionally.
double ratio_resonant_short(const PhotonState& s, double omega, double t0);

// delta P2 = P2 - P2(0) = d^2 f^2 [ <n>(|I1|^2 + |I2|^2) + 2 Re(C I1* I2) ].
double delta_P2(const PhotonState& s, double f, double omega, const AtomParams& atom,
                const TransitWindow& w);

// Far-below-resonance limit (w << de, w t0 and w t1 << 1):
//   delta P2 = 2 d^2 (1 - cos(de dt)) / de^2 * f^2 (2<n> + 2 Re C).
// The field phase at transit is carried by the state's amplitude phases
// (rotate with rotated()/rotated_to_worst_phase()).  Negative exactly when
// the transit-time <E^2> is negative; bounded below by qi_bound_windowed.
double delta_P2_low_omega(const PhotonState& s, double f, const AtomParams& atom,
                          const TransitWindow& w);

// Far-above-resonance limit (w >> de, de dt << 1):
//   delta P2 = (2/w^2) d^2 f^2 { 2<n>(1 - cos w dt)
//                                - Re[C (e^{i w t1} - e^{i w t0})^2] }.
// Only the dipole of atom enters; de has dropped out of this regime.
// Sign changes here are not correlated with <E^2>.
double delta_P2_high_omega(const PhotonState& s, double f, double omega,
                           const AtomParams& atom, const TransitWindow& w);

// State-independent suppression bound -2 d^2 f^2 / de^2.  Valid for
// windows with 1 - cos(de dt) <= 1; the per-window sharp bound below
// covers the rest (and is what large-r squeezed vacua saturate).
double qi_bound(double f_squared, const AtomParams& atom);

// Sharp per-window bound -2 d^2 f^2 (1 - cos(de dt)) / de^2.  Every
// delta_P2_low_omega result lies at or above this value.
double qi_bound_windowed(double f_squared, const AtomParams& atom,
                         const TransitWindow& w);

RegimeReport classify_regime(double omega, const AtomParams& atom, const TransitWindow& w,
                             const RegimeThresholds& thresholds = {});

}  // namespace subvac
