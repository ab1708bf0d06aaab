#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subvac/states.hpp"

#include <cmath>
#include <random>

using namespace subvac;
using doctest::Approx;

TEST_CASE("number states place a single unit amplitude") {
    const PhotonState vac = make_number_state(0, 5);
    CHECK(vac.amplitude(0) == cplx{1.0, 0.0});
    for (int n = 1; n < 5; ++n) CHECK(std::abs(vac.amplitude(n)) == 0.0);

    const PhotonState two = make_number_state(2, 5);
    CHECK(std::abs(two.amplitude(2)) == Approx(1.0));
    CHECK(std::abs(two.amplitude(0)) == 0.0);

    CHECK_THROWS_AS(make_number_state(5, 5), std::out_of_range);
    CHECK_THROWS_AS(make_number_state(-1, 5), std::out_of_range);
}

TEST_CASE("vacuum plus two state amplitudes") {
    const PhotonState s0 = make_vacuum_plus_two(0.0, 4);
    CHECK(std::abs(s0.amplitude(0)) == Approx(1.0));

    const PhotonState s1 = make_vacuum_plus_two(1.0, 4);
    CHECK(std::real(s1.amplitude(0)) == Approx(1.0 / std::sqrt(2.0)));
    CHECK(std::real(s1.amplitude(2)) == Approx(1.0 / std::sqrt(2.0)));

    const PhotonState s = make_vacuum_plus_two(0.32, 8);
    CHECK(std::real(s.amplitude(0)) == Approx(0.9524241471993242).epsilon(1e-12));
    CHECK(std::real(s.amplitude(2)) == Approx(0.30477572710378376).epsilon(1e-12));

    CHECK_THROWS_AS(make_vacuum_plus_two(0.5, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_vacuum_plus_two(-0.1, 4), std::invalid_argument);
}

TEST_CASE("constructor normalizes and rejects null vectors") {
    const PhotonState s(std::vector<cplx>{{3.0, 0.0}, {0.0, 4.0}});
    double norm2 = 0.0;
    for (const auto& a : s.amplitudes()) norm2 += std::norm(a);
    CHECK(norm2 == Approx(1.0).epsilon(1e-13));

    CHECK_THROWS_AS(PhotonState(std::vector<cplx>{{1e-20, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(PhotonState(std::vector<cplx>{}), std::invalid_argument);
}

TEST_CASE("mean photon number") {
    CHECK(mean_photon_number(make_number_state(0, 5)) == 0.0);
    CHECK(mean_photon_number(make_number_state(3, 6)) == Approx(3.0));
    CHECK(mean_photon_number(make_vacuum_plus_two(0.32, 6)) ==
          Approx(0.18577648766328012).epsilon(1e-12));
}

TEST_CASE("pair correlation values and bound") {
    for (int n = 0; n < 4; ++n)
        CHECK(std::abs(pair_correlation(make_number_state(n, 6))) == 0.0);

    const cplx C = pair_correlation(make_vacuum_plus_two(0.32, 6));
    CHECK(std::real(C) == Approx(0.41051191941163867).epsilon(1e-12));
    CHECK(std::imag(C) == Approx(0.0));

    // must match the oscillation amplitude cosh(r) sinh(r) of the squeezed
    // closed form, with the negative sign of this expansion convention
    const cplx Cs = pair_correlation(make_squeezed_vacuum(0.5, 0.0));
    CHECK(std::real(Cs) == Approx(-0.5876005968219007).epsilon(1e-7));
    CHECK(std::abs(std::imag(Cs)) < 1e-12);

    CHECK_THROWS_AS(pair_correlation(make_number_state(0, 2)), std::invalid_argument);

    // Cauchy-Schwarz: |C| <= sqrt(<n>(<n>+1))
    std::mt19937_64 seeds(11);
    for (int k = 0; k < 200; ++k) {
        const PhotonState s = make_random_state(3 + static_cast<int>(seeds() % 14), seeds());
        const double n = mean_photon_number(s);
        CHECK(std::abs(pair_correlation(s)) <= std::sqrt(n * (n + 1.0)) + 1e-12);
    }
}

TEST_CASE("squeezed vacuum reproduces the closed-form moments") {
    CHECK(mean_photon_number(make_squeezed_vacuum(0.0, 0.0, 8)) == 0.0);

    const PhotonState s1 = make_squeezed_vacuum(1.0, 0.0);
    CHECK(mean_photon_number(s1) == Approx(1.3810978455418155).epsilon(1e-8));

    // only even levels populated
    for (int n = 1; n < s1.dim(); n += 2) CHECK(std::abs(s1.amplitude(n)) == 0.0);

    // generic machinery vs closed form
    //   2 f^2 [sinh^2 r - cosh r sinh r cos(2 w t - phi)]
    const FieldPoint fp(0.7, 1.3);
    for (double r : {0.3, 1.0, 2.0}) {
        for (double phi : {0.0, 0.9, 2.4}) {
            const PhotonState s = make_squeezed_vacuum(r, phi);
            const double sh = std::sinh(r), ch = std::cosh(r);
            const double scale = 2.0 * fp.f_squared * (sh * sh + ch * sh);
            for (double t = 0.0; t < 3.0; t += 0.37) {
                const double closed =
                    2.0 * fp.f_squared *
                    (sh * sh - ch * sh * std::cos(2.0 * fp.omega * t - phi));
                CHECK(std::abs(mean_E_squared(s, fp, t) - closed) < 1e-8 * scale);
            }
        }
    }
}

TEST_CASE("squeezed vacuum truncation contract") {
    CHECK_THROWS_AS(make_squeezed_vacuum(2.0, 0.0, 40), TruncationError);
    try {
        make_squeezed_vacuum(2.0, 0.0, 40);
    } catch (const TruncationError& e) {
        CHECK(e.required_dim() >= 40);
        CHECK_NOTHROW(make_squeezed_vacuum(2.0, 0.0, e.required_dim()));
    }
    // the default dim keeps the pre-normalization loss under the threshold
    for (double r : {0.5, 1.0, 2.0, 3.0})
        CHECK_NOTHROW(make_squeezed_vacuum(r, 0.4, squeezed_vacuum_dim(r)));
}

TEST_CASE("sub-vacuum functional, minimum and decomposition") {
    const PhotonState vac = make_number_state(0, 5);
    for (double phase : {0.0, 1.0, 2.5}) CHECK(subvac_functional(vac, phase) == 0.0);
    CHECK(subvac_decomposition(vac) == Approx(0.0).epsilon(1e-14));

    const PhotonState s = make_vacuum_plus_two(0.32, 8);
    CHECK(subvac_minimum(s) == Approx(-0.4494708634967171).epsilon(1e-12));
    CHECK(subvac_decomposition(s) == Approx(-0.4494708634967171).epsilon(1e-12));

    // squeezed r=3 approaches the -1 floor
    CHECK(subvac_minimum(make_squeezed_vacuum(3.0, 0.0)) ==
          Approx(-0.9975212478233336).epsilon(1e-6));

    // random instance stays above the floor
    CHECK(subvac_minimum(make_random_state(12, 99)) >= -1.0);
}

TEST_CASE("property: S >= -1 and the decomposition identity, 1e4 random states") {
    std::mt19937_64 seeds(20250810);
    for (int k = 0; k < 10000; ++k) {
        const int dim = 3 + static_cast<int>(seeds() % 14);  // 3..16
        const PhotonState s = make_random_state(dim, seeds());
        const double smin = subvac_minimum(s);
        REQUIRE(smin >= -1.0 - 1e-12);
        REQUIRE(std::abs(subvac_decomposition(s) - smin) < 1e-10);
        // the functional at any phase sits at or above the minimum
        const double phase = 2.0 * M_PI * (k % 17) / 17.0;
        REQUIRE(subvac_functional(s, phase) >= smin - 1e-12);
    }
}

TEST_CASE("property: photon-number ladder identities on the padded vector") {
    std::mt19937_64 seeds(7);
    for (int k = 0; k < 300; ++k) {
        const PhotonState s = make_random_state(3 + static_cast<int>(seeds() % 14), seeds());
        const double n_mean = mean_photon_number(s);
        double up = 0.0;    // sum_m (m+1) |c_{m+1}|^2
        double down = 0.0;  // sum_m m |c_{m-1}|^2 on the zero-padded range
        for (int m = 0; m <= s.dim() + 1; ++m) {
            up += (m + 1.0) * std::norm(s.amplitude(m + 1));
            down += m * std::norm(s.amplitude(m - 1));
        }
        CHECK(up == Approx(n_mean).epsilon(1e-12));
        CHECK(down == Approx(n_mean + 1.0).epsilon(1e-12));
    }
}

TEST_CASE("property: global phase is physically irrelevant") {
    std::mt19937_64 seeds(41);
    for (int k = 0; k < 100; ++k) {
        const PhotonState s = make_random_state(3 + static_cast<int>(seeds() % 10), seeds());
        std::vector<cplx> c = s.amplitudes();
        const cplx phase = std::polar(1.0, 1.234 + k);
        for (auto& a : c) a *= phase;
        const PhotonState t(std::move(c));
        CHECK(mean_photon_number(t) == Approx(mean_photon_number(s)).epsilon(1e-12));
        CHECK(std::abs(pair_correlation(t) - pair_correlation(s)) < 1e-12);
        CHECK(subvac_minimum(t) == Approx(subvac_minimum(s)).epsilon(1e-12));
    }
}

TEST_CASE("rotation moves the pair-correlation phase only") {
    const PhotonState s = make_vacuum_plus_two(0.45, 8);
    const PhotonState w = rotated_to_worst_phase(s);
    const cplx Cw = pair_correlation(w);
    CHECK(std::abs(std::imag(Cw)) < 1e-14);
    CHECK(std::real(Cw) <= 0.0);
    CHECK(std::abs(Cw) == Approx(std::abs(pair_correlation(s))).epsilon(1e-13));
    CHECK(mean_photon_number(w) == Approx(mean_photon_number(s)).epsilon(1e-13));

    const PhotonState r = rotated(s, 0.7);
    CHECK(std::arg(pair_correlation(r)) ==
          Approx(std::arg(pair_correlation(s)) - 1.4).epsilon(1e-12));
}

TEST_CASE("mean squared field: vacuum zero, worst dip, floor at -f^2") {
    const FieldPoint fp(1.0, 2.0);
    const PhotonState vac = make_number_state(0, 5);
    for (double t : {0.0, 0.3, 1.1}) CHECK(mean_E_squared(vac, fp, t) == 0.0);

    // worst phase of the beta = 0.32 state reaches S_min at t = 0
    const PhotonState s = rotated_to_worst_phase(make_vacuum_plus_two(0.32, 8));
    CHECK(mean_E_squared(s, fp, 0.0) == Approx(-0.4494708634967171).epsilon(1e-12));

    // squeezed r=1 dip: -f^2 (1 - e^{-2})
    const PhotonState sq = make_squeezed_vacuum(1.0, 0.0);
    CHECK(mean_E_squared(sq, fp, 0.0) == Approx(-0.8646647167633873).epsilon(1e-8));

    std::mt19937_64 seeds(3);
    for (int k = 0; k < 400; ++k) {
        const PhotonState r = make_random_state(3 + static_cast<int>(seeds() % 14), seeds());
        const double t = 0.05 * k;
        CHECK(mean_E_squared(r, fp, t) >= -fp.f_squared * (1.0 + 1e-12));
    }
}

TEST_CASE("squeezed extremes are phase-origin independent") {
    // phi moves the dip in time but not its depth
    for (double r : {0.5, 1.5}) {
        const double depth = -(1.0 - std::exp(-2.0 * r));
        for (double phi : {0.0, 1.1, 2.7, 5.0})
            CHECK(subvac_minimum(make_squeezed_vacuum(r, phi)) ==
                  Approx(depth).epsilon(1e-7));
    }

    // negative fraction arccos(tanh r)/pi: deeper squeezing dips lower
    // but for a shorter part of the cycle
    const double fr1 = negative_e2_fraction(make_squeezed_vacuum(1.0, 0.0));
    CHECK(fr1 == Approx(std::acos(std::tanh(1.0)) / M_PI).epsilon(1e-7));
    CHECK(negative_e2_fraction(make_squeezed_vacuum(2.0, 0.0)) < fr1);
}

TEST_CASE("squeezed minimum deepens monotonically towards -f^2") {
    const FieldPoint fp(1.0, 1.0);
    double prev = 0.0;
    for (double r : {0.25, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
        const double dip = subvac_minimum(make_squeezed_vacuum(r, 0.0)) * fp.f_squared;
        CHECK(dip < prev);
        CHECK(dip >= -fp.f_squared);
        prev = dip;
    }
}

TEST_CASE("negative fraction of the field period") {
    // closed form arccos(sqrt(2) beta)/pi at beta = 0.32
    const PhotonState s = make_vacuum_plus_two(0.32, 8);
    CHECK(negative_e2_fraction(s) == Approx(0.3505149959817359).epsilon(1e-12));

    // independent route: bisection-refined sign changes of <E^2>(t)
    const FieldPoint fp(1.0, 1.7);
    const double period = M_PI / fp.omega;
    const int samples = 20000;
    double negative = 0.0;
    double prev_t = 0.0, prev_v = mean_E_squared(s, fp, 0.0);
    for (int i = 1; i <= samples; ++i) {
        const double t = period * i / samples;
        const double v = mean_E_squared(s, fp, t);
        if ((prev_v < 0.0) != (v < 0.0)) {
            double lo = prev_t, hi = t, flo = prev_v;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fmid = mean_E_squared(s, fp, mid);
                if ((flo < 0.0) == (fmid < 0.0)) {
                    lo = mid;
                    flo = fmid;
                } else {
                    hi = mid;
                }
            }
            negative += (prev_v < 0.0) ? (lo - prev_t) : (t - hi);
        } else if (prev_v < 0.0) {
            negative += t - prev_t;
        }
        prev_t = t;
        prev_v = v;
    }
    CHECK(negative / period == Approx(negative_e2_fraction(s)).epsilon(1e-8));

    // no dip at all once beta reaches sqrt(2)/2, nor for number states
    CHECK(negative_e2_fraction(make_vacuum_plus_two(0.71, 8)) == 0.0);
    CHECK(negative_e2_fraction(make_number_state(2, 6)) == 0.0);
}
