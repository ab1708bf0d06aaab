#include "subvac/perturbation.hpp"

#include <cmath>

namespace subvac {

namespace {

// sin(x)/x with a series branch; relative error < 1e-16 everywhere.
double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// int_{t0}^{t1} e^{i k t} dt = dt e^{i k tbar} sinc(k dt / 2).
cplx window_integral(double k, const TransitWindow& w) {
    const double dt = w.duration();
    const double tbar = 0.5 * (w.t0 + w.t1);
    return dt * std::polar(1.0, k * tbar) * sinc(0.5 * k * dt);
}

}  // namespace

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::resonant_short: return "resonant_short";
        case Regime::resonant_general: return "resonant_general";
        case Regime::far_below: return "far_below";
        case Regime::far_above: return "far_above";
        case Regime::general: return "general";
    }
    return "general";
}

cplx integral_I1(double omega, const AtomParams& atom, const TransitWindow& w) {
    if (!(omega > 0.0)) throw std::invalid_argument("integral_I1: omega must be > 0");
    return window_integral(-(omega + atom.delta_eps), w);
}

cplx integral_I2(double omega, const AtomParams& atom, const TransitWindow& w) {
    if (!(omega > 0.0)) throw std::invalid_argument("integral_I2: omega must be > 0");
    return window_integral(omega - atom.delta_eps, w);
}

cplx amplitude_A2m(const PhotonState& s, int m, double f, double omega,
                   const AtomParams& atom, const TransitWindow& w) {
    if (m < 0) throw std::invalid_argument("amplitude_A2m: m must be >= 0");
    const cplx I1 = integral_I1(omega, atom, w);
    const cplx I2 = integral_I2(omega, atom, w);
    const cplx up = std::sqrt(m + 1.0) * s.amplitude(m + 1) * f * I1;
    const cplx down = (m >= 1) ? std::sqrt(static_cast<double>(m)) * s.amplitude(m - 1) * f * I2
                               : cplx{0.0, 0.0};
    return cplx{0.0, 1.0} * atom.dipole * (up + down);
}

double prob_P2(const PhotonState& s, double f, double omega, const AtomParams& atom,
               const TransitWindow& w) {
    const cplx I1 = integral_I1(omega, atom, w);
    const cplx I2 = integral_I2(omega, atom, w);
    const double n = mean_photon_number(s);
    const cplx C = pair_correlation(s);
    const double d2f2 = atom.dipole * atom.dipole * f * f;
    return d2f2 * (n * std::norm(I1) + (n + 1.0) * std::norm(I2) +
                   2.0 * std::real(C * std::conj(I1) * I2));
}

double prob_P2_vacuum(double f, double omega, const AtomParams& atom,
                      const TransitWindow& w) {
    const cplx I2 = integral_I2(omega, atom, w);
    return atom.dipole * atom.dipole * f * f * std::norm(I2);
}

double ratio_P2(const PhotonState& s, double omega, const AtomParams& atom,
                const TransitWindow& w) {
    const cplx I1 = integral_I1(omega, atom, w);
    const cplx I2 = integral_I2(omega, atom, w);
    const double i2n = std::norm(I2);
    if (!(i2n > 1e-24 * w.duration() * w.duration()))
        throw std::domain_error("ratio_P2: degenerate window, |I2| ~ 0");
    const double n = mean_photon_number(s);
    const cplx C = pair_correlation(s);
    return n * std::norm(I1) / i2n + n + 1.0 +
           2.0 * std::real(C * I2 * std::conj(I1)) / i2n;
}

double ratio_resonant_short(const PhotonState& s, double omega, double t0) {
    const cplx C = pair_correlation(s);
    return 2.0 * mean_photon_number(s) + 1.0 +
           2.0 * std::real(C * std::polar(1.0, 2.0 * omega * t0));
}

double delta_P2(const PhotonState& s, double f, double omega, const AtomParams& atom,
                const TransitWindow& w) {
    const cplx I1 = integral_I1(omega, atom, w);
    const cplx I2 = integral_I2(omega, atom, w);
    const double n = mean_photon_number(s);
    const cplx C = pair_correlation(s);
    const double d2f2 = atom.dipole * atom.dipole * f * f;
    return d2f2 * (n * (std::norm(I1) + std::norm(I2)) +
                   2.0 * std::real(C * std::conj(I1) * I2));
}

double delta_P2_low_omega(const PhotonState& s, double f, const AtomParams& atom,
                          const TransitWindow& w) {
    const double de = atom.delta_eps;
    const double window = (1.0 - std::cos(de * w.duration())) / (de * de);
    const double bracket = 2.0 * mean_photon_number(s) +
                           2.0 * std::real(pair_correlation(s));
    return 2.0 * atom.dipole * atom.dipole * window * f * f * bracket;
}

double delta_P2_high_omega(const PhotonState& s, double f, double omega,
                           const AtomParams& atom, const TransitWindow& w) {
    if (!(omega > 0.0)) throw std::invalid_argument("delta_P2_high_omega: omega must be > 0");
    const cplx edge = std::polar(1.0, omega * w.t1) - std::polar(1.0, omega * w.t0);
    const double n = mean_photon_number(s);
    const cplx C = pair_correlation(s);
    const double brace = 2.0 * n * (1.0 - std::cos(omega * w.duration())) -
                         std::real(C * edge * edge);
    return (2.0 / (omega * omega)) * atom.dipole * atom.dipole * f * f * brace;
}

double qi_bound(double f_squared, const AtomParams& atom) {
    return -2.0 * atom.dipole * atom.dipole * f_squared / (atom.delta_eps * atom.delta_eps);
}

double qi_bound_windowed(double f_squared, const AtomParams& atom, const TransitWindow& w) {
    return qi_bound(f_squared, atom) * (1.0 - std::cos(atom.delta_eps * w.duration()));
}

RegimeReport classify_regime(double omega, const AtomParams& atom, const TransitWindow& w,
                             const RegimeThresholds& thresholds) {
    RegimeReport rep;
    rep.omega_dt = omega * w.duration();
    rep.deps_dt = atom.delta_eps * w.duration();
    rep.omega_over_deps = omega / atom.delta_eps;
    rep.thresholds = thresholds;

    if (rep.omega_over_deps < thresholds.much_less) {
        rep.regime = Regime::far_below;
    } else if (rep.omega_over_deps > thresholds.much_greater) {
        rep.regime = Regime::far_above;
    } else if (std::abs(rep.omega_over_deps - 1.0) <= thresholds.resonance_tol) {
        rep.regime = (rep.omega_dt < thresholds.much_less) ? Regime::resonant_short
                                                           : Regime::resonant_general;
    } else {
        rep.regime = Regime::general;
    }
    return rep;
}

}  // namespace subvac
