// TE(1,0,1) mode of a rectangular conducting cavity.
//
// Box dimensions a, b, d along x, y, z with 0 < b <= a <= d.  The lowest
// mode for b < a < d is the TE mode with one half-wave along x and z and
// none along y:
//
//   omega  = pi sqrt(1/a^2 + 1/d^2)
//   E_y    = (omega a / pi) A10 sin(pi x / a) sin(pi z / d)
//   B_x    = i (a/d) A10 sin(pi x / a) cos(pi z / d)
//   B_z    = -i A10 cos(pi x / a) sin(pi z / d)
//
// normalized so the classical mode energy integrates to omega/2
// (Lorentz-Heaviside units, hbar = c = 1):
//
//   A10^2 = 2 omega / (a b d (1 + a^2/d^2)).
//
// The electric profile is independent of y, so an atom crossing along y
// sees a constant coupling amplitude -- the property the sudden-switching
// treatment relies on.

#pragma once

#include "subvac/states.hpp"

#include <vector>

namespace subvac {

class CavityGeometry {
public:
    // Requires 0 < b <= a <= d.  Strict ordering b < a < d is the intended
    // regime; equalities are accepted but flagged (see strictly_ordered()).
    CavityGeometry(double a, double b, double d);

    double a() const { return a_; }
    double b() const { return b_; }
    double d() const { return d_; }

    // True when b < a < d strictly; callers may warn otherwise, since mode
    // minimality can degenerate at equal dimensions.
    bool strictly_ordered() const { return b_ < a_ && a_ < d_; }

private:
    double a_, b_, d_;
};

struct Position {
    double x, y, z;
};

// Lowest mode angular frequency pi sqrt(1/a^2 + 1/d^2).
double lowest_mode_frequency(const CavityGeometry& g);

// Mode normalization constant A10 (> 0).
double normalization_A10(const CavityGeometry& g);

// E_y(x,z)^2: squared electric mode profile at p (>= 0, vanishing on the
// walls and independent of y).  Throws std::domain_error outside the box.
double electric_profile_squared(const CavityGeometry& g, const Position& p);

// |B_x|^2 + |B_z|^2: squared magnetic mode profile at p.  The complex
// square B_j^2 of the spatial mode functions equals minus this value, so
// the oscillating parts of <E^2> and <B^2> always have opposite signs.
double magnetic_profile_squared(const CavityGeometry& g, const Position& p);

// Normal-ordered mean energy density (<E^2> + <B^2>)/2 at p and time t.
double mean_energy_density(const PhotonState& s, const CavityGeometry& g,
                           const Position& p, double t);

// |B_j|^2 / |E_j|^2 at p.  Small values certify that a mean-squared-field
// measurement doubles as an energy-density measurement (rho ~ <E^2>/2).
// Throws std::domain_error at electric-field nodes.
double e2_dominance(const CavityGeometry& g, const Position& p);

// FieldPoint {E-profile^2, omega} for the states-module machinery.
FieldPoint field_point(const CavityGeometry& g, const Position& p);

// Normal-ordered <B^2> at p and t (companion to mean_E_squared).
double mean_B_squared(const PhotonState& s, const CavityGeometry& g,
                      const Position& p, double t);

// One resonator mode of the general rectangular spectrum.
struct CavityMode {
    int nx, ny, nz;
    double omega;
};

// All modes with indices <= max_index, sorted by frequency.  Index triples
// follow the rectangular dispersion omega = pi sqrt((nx/a)^2 + (ny/b)^2 +
// (nz/d)^2); combinations with two or more zero indices do not resonate
// and are excluded.  Used to check that (1,0,1) really is the lowest mode.
std::vector<CavityMode> enumerate_mode_frequencies(const CavityGeometry& g,
                                                   int max_index);

}  // namespace subvac
