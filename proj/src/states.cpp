#include "subvac/states.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace subvac {

namespace {

double norm_squared(const std::vector<cplx>& c) {
    double s = 0.0;
    for (const auto& a : c) s += std::norm(a);
    return s;
}

}  // namespace

PhotonState::PhotonState(std::vector<cplx> amplitudes) : c_(std::move(amplitudes)) {
    if (c_.empty())
        throw std::invalid_argument("PhotonState: amplitude vector must be non-empty");
    const double n2 = norm_squared(c_);
    if (!(n2 >= 1e-30))
        throw std::invalid_argument("PhotonState: amplitude vector norm below 1e-30");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : c_) a *= inv;
}

PhotonState make_number_state(int n, int dim) {
    if (dim < 1) throw std::invalid_argument("make_number_state: dim must be >= 1");
    if (n < 0 || n >= dim)
        throw std::out_of_range("make_number_state: n must satisfy 0 <= n < dim");
    std::vector<cplx> c(static_cast<size_t>(dim), cplx{0.0, 0.0});
    c[static_cast<size_t>(n)] = 1.0;
    return PhotonState(std::move(c));
}

PhotonState make_vacuum_plus_two(double beta, int dim) {
    if (!(std::isfinite(beta) && beta >= 0.0))
        throw std::invalid_argument("make_vacuum_plus_two: beta must be finite and >= 0");
    if (dim < 3)
        throw std::invalid_argument("make_vacuum_plus_two: dim must be >= 3");
    std::vector<cplx> c(static_cast<size_t>(dim), cplx{0.0, 0.0});
    const double norm = std::sqrt(1.0 + beta * beta);
    c[0] = 1.0 / norm;
    c[2] = beta / norm;
    return PhotonState(std::move(c));
}

namespace {

// |c_{2m}|^2 follows the recurrence p_m = p_{m-1} (2m-1)/(2m) tanh^2 r,
// p_0 = 1/cosh r.  Walk it until the tail is negligible.
int squeezed_dim_for_loss(double r, double loss_target) {
    if (r == 0.0) return 8;
    const double t2 = std::tanh(r) * std::tanh(r);
    double p = 1.0 / std::cosh(r);
    double acc = p;
    int m = 0;
    while (true) {
        ++m;
        p *= t2 * (2.0 * m - 1.0) / (2.0 * m);
        acc += p;
        // geometric tail bound: remaining mass < p * t2 / (1 - t2)
        if (p * t2 / (1.0 - t2) < loss_target && 1.0 - acc < loss_target) break;
        if (m > 2000000)
            throw std::invalid_argument("squeezed_vacuum_dim: r too large");
    }
    return std::max(8, 2 * m + 1);
}

}  // namespace

int squeezed_vacuum_dim(double r) {
    if (!(std::isfinite(r) && r >= 0.0))
        throw std::invalid_argument("squeezed_vacuum_dim: r must be finite and >= 0");
    return squeezed_dim_for_loss(r, 1e-10);
}

PhotonState make_squeezed_vacuum(double r, double phi, int dim) {
    if (!(std::isfinite(r) && r >= 0.0))
        throw std::invalid_argument("make_squeezed_vacuum: r must be finite and >= 0");
    if (dim < 1) throw std::invalid_argument("make_squeezed_vacuum: dim must be >= 1");

    std::vector<cplx> c(static_cast<size_t>(dim), cplx{0.0, 0.0});
    // c_{2m} = c_{2(m-1)} * (-e^{i phi} tanh r) * sqrt((2m-1)/(2m))
    const cplx step = -std::polar(std::tanh(r), phi);
    cplx amp = 1.0 / std::sqrt(std::cosh(r));
    c[0] = amp;
    for (int m = 1; 2 * m < dim; ++m) {
        amp *= step * std::sqrt((2.0 * m - 1.0) / (2.0 * m));
        c[static_cast<size_t>(2 * m)] = amp;
    }
    const double n2 = norm_squared(c);
    if (n2 < 1.0 - 1e-8) {
        throw TruncationError(
            "make_squeezed_vacuum: truncated norm " + std::to_string(n2) +
                " below 1 - 1e-8 at dim " + std::to_string(dim) + "; need dim >= " +
                std::to_string(squeezed_vacuum_dim(r)),
            squeezed_vacuum_dim(r));
    }
    return PhotonState(std::move(c));
}

PhotonState make_squeezed_vacuum(double r, double phi) {
    return make_squeezed_vacuum(r, phi, squeezed_vacuum_dim(r));
}

PhotonState make_random_state(int dim, std::uint64_t seed) {
    if (dim < 1) throw std::invalid_argument("make_random_state: dim must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> c(static_cast<size_t>(dim));
    for (auto& a : c) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        a = cplx{re, im};
    }
    return PhotonState(std::move(c));
}

double mean_photon_number(const PhotonState& s) {
    double acc = 0.0;
    const auto& c = s.amplitudes();
    for (size_t n = 0; n < c.size(); ++n) acc += static_cast<double>(n) * std::norm(c[n]);
    return acc;
}

cplx pair_correlation(const PhotonState& s) {
    if (s.dim() < 3)
        throw std::invalid_argument("pair_correlation: dim must be >= 3");
    cplx acc{0.0, 0.0};
    const auto& c = s.amplitudes();
    for (size_t n = 0; n + 2 < c.size(); ++n) {
        const double w = std::sqrt((n + 1.0) * (n + 2.0));
        acc += w * c[n] * std::conj(c[n + 2]);
    }
    return acc;
}

double subvac_functional(const PhotonState& s, double phase) {
    const cplx C = pair_correlation(s);
    return 2.0 * mean_photon_number(s) + 2.0 * std::real(C * std::polar(1.0, phase));
}

double subvac_minimum(const PhotonState& s) {
    return 2.0 * mean_photon_number(s) - 2.0 * std::abs(pair_correlation(s));
}

PhotonState rotated(const PhotonState& s, double alpha) {
    std::vector<cplx> c = s.amplitudes();
    for (size_t n = 0; n < c.size(); ++n)
        c[n] *= std::polar(1.0, alpha * static_cast<double>(n));
    return PhotonState(std::move(c));
}

PhotonState rotated_to_worst_phase(const PhotonState& s) {
    const cplx C = pair_correlation(s);
    if (std::abs(C) == 0.0) return s;
    // C -> C e^{-2 i alpha}; pick alpha so the result is -|C|.
    const double alpha = (std::arg(C) - M_PI) / 2.0;
    return rotated(s, alpha);
}

double subvac_decomposition(const PhotonState& s) {
    const PhotonState w = rotated_to_worst_phase(s);
    const int N = w.dim() - 1;
    // The sum runs over the zero-padded extension: c_N still appears as
    // the n-2 partner at n = N+2.
    double acc = -1.0;
    for (int n = 1; n <= N + 2; ++n) {
        const cplx term = std::sqrt(static_cast<double>(n)) * w.amplitude(n) +
                          std::sqrt(static_cast<double>(n - 1)) * w.amplitude(n - 2);
        acc += std::norm(term);
    }
    return acc;
}

double mean_E_squared(const PhotonState& s, const FieldPoint& fp, double t) {
    const cplx C = pair_correlation(s);
    const double bracket =
        2.0 * mean_photon_number(s) + 2.0 * std::real(C * std::polar(1.0, 2.0 * fp.omega * t));
    return fp.f_squared * bracket;
}

double negative_e2_fraction(const PhotonState& s) {
    const double n = mean_photon_number(s);
    const double absC = std::abs(pair_correlation(s));
    if (!(absC > n)) return 0.0;
    return std::acos(std::clamp(n / absC, -1.0, 1.0)) / M_PI;
}

}  // namespace subvac
