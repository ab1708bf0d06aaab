#include "subvac/cavity.hpp"

#include <algorithm>
#include <cmath>

namespace subvac {

namespace {

void check_inside(const CavityGeometry& g, const Position& p) {
    if (p.x < 0.0 || p.x > g.a() || p.y < 0.0 || p.y > g.b() || p.z < 0.0 || p.z > g.d())
        throw std::domain_error("position outside the cavity box");
}

}  // namespace

CavityGeometry::CavityGeometry(double a, double b, double d) : a_(a), b_(b), d_(d) {
    if (!(b > 0.0 && b <= a && a <= d))
        throw std::invalid_argument("CavityGeometry: requires 0 < b <= a <= d");
}

double lowest_mode_frequency(const CavityGeometry& g) {
    return M_PI * std::sqrt(1.0 / (g.a() * g.a()) + 1.0 / (g.d() * g.d()));
}

double normalization_A10(const CavityGeometry& g) {
    const double omega = lowest_mode_frequency(g);
    const double ratio2 = (g.a() * g.a()) / (g.d() * g.d());
    return std::sqrt(2.0 * omega / (g.a() * g.b() * g.d() * (1.0 + ratio2)));
}

double electric_profile_squared(const CavityGeometry& g, const Position& p) {
    check_inside(g, p);
    const double omega = lowest_mode_frequency(g);
    const double A10 = normalization_A10(g);
    const double sx = std::sin(M_PI * p.x / g.a());
    const double sz = std::sin(M_PI * p.z / g.d());
    const double ey = (omega * g.a() / M_PI) * A10 * sx * sz;
    return ey * ey;
}

double magnetic_profile_squared(const CavityGeometry& g, const Position& p) {
    check_inside(g, p);
    const double A10 = normalization_A10(g);
    const double sx = std::sin(M_PI * p.x / g.a());
    const double cx = std::cos(M_PI * p.x / g.a());
    const double sz = std::sin(M_PI * p.z / g.d());
    const double cz = std::cos(M_PI * p.z / g.d());
    const double ratio2 = (g.a() * g.a()) / (g.d() * g.d());
    return A10 * A10 * (cx * cx * sz * sz + ratio2 * sx * sx * cz * cz);
}

namespace {

double squared_field_mean(double profile, const PhotonState& s, double omega, double t,
                          double sign) {
    // <F^2> = 2 <a'a> |F_j|^2 + 2 Re(<a^2> F_j^2), with F_j^2 equal to
    // +|F_j|^2 e^{-2 i w t} for E and -|F_j|^2 e^{-2 i w t} for B.
    const cplx C = pair_correlation(s);
    const double osc = std::real(C * std::polar(1.0, 2.0 * omega * t));
    return profile * (2.0 * mean_photon_number(s) + sign * 2.0 * osc);
}

}  // namespace

double mean_B_squared(const PhotonState& s, const CavityGeometry& g, const Position& p,
                      double t) {
    return squared_field_mean(magnetic_profile_squared(g, p), s, lowest_mode_frequency(g), t,
                              -1.0);
}

double mean_energy_density(const PhotonState& s, const CavityGeometry& g, const Position& p,
                           double t) {
    const double e2 = squared_field_mean(electric_profile_squared(g, p), s,
                                         lowest_mode_frequency(g), t, +1.0);
    const double b2 = mean_B_squared(s, g, p, t);
    return 0.5 * (e2 + b2);
}

double e2_dominance(const CavityGeometry& g, const Position& p) {
    const double e2 = electric_profile_squared(g, p);
    if (!(e2 > 0.0))
        throw std::domain_error("e2_dominance: position is an electric-field node");
    return magnetic_profile_squared(g, p) / e2;
}

FieldPoint field_point(const CavityGeometry& g, const Position& p) {
    return FieldPoint(electric_profile_squared(g, p), lowest_mode_frequency(g));
}

std::vector<CavityMode> enumerate_mode_frequencies(const CavityGeometry& g, int max_index) {
    std::vector<CavityMode> modes;
    for (int nx = 0; nx <= max_index; ++nx) {
        for (int ny = 0; ny <= max_index; ++ny) {
            for (int nz = 0; nz <= max_index; ++nz) {
                const int zeros = (nx == 0) + (ny == 0) + (nz == 0);
                if (zeros >= 2) continue;
                const double kx = nx / g.a();
                const double ky = ny / g.b();
                const double kz = nz / g.d();
                modes.push_back({nx, ny, nz, M_PI * std::sqrt(kx * kx + ky * ky + kz * kz)});
            }
        }
    }
    std::sort(modes.begin(), modes.end(),
              [](const CavityMode& l, const CavityMode& r) { return l.omega < r.omega; });
    return modes;
}

}  // namespace subvac
