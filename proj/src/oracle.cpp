#include "subvac/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace subvac {

CompositeState::CompositeState(int fock_dim, Eigen::VectorXcd amplitudes)
    : fock_dim_(fock_dim), amps_(std::move(amplitudes)) {
    if (fock_dim_ < 1)
        throw std::invalid_argument("CompositeState: fock_dim must be >= 1");
    if (amps_.size() != 2 * fock_dim_)
        throw std::invalid_argument("CompositeState: amplitude size must be 2 * fock_dim");
}

double CompositeState::ground_population() const {
    return amps_.segment(fock_dim_, fock_dim_).squaredNorm();
}

double CompositeState::top_level_population(int levels) const {
    levels = std::min(levels, fock_dim_);
    double acc = 0.0;
    for (int n = fock_dim_ - levels; n < fock_dim_; ++n)
        acc += std::norm(amps_(n)) + std::norm(amps_(fock_dim_ + n));
    return acc;
}

CompositeState make_composite(const PhotonState& s, int fock_dim) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(2 * fock_dim);
    const int n_copy = std::min(fock_dim, s.dim());
    for (int n = 0; n < n_copy; ++n) amps(n) = s.amplitude(n);
    return CompositeState(fock_dim, std::move(amps));
}

CompositeState prepare_composite(const PhotonState& s, int fock_dim, double omega,
                                 double t0) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(2 * fock_dim);
    const int n_copy = std::min(fock_dim, s.dim());
    for (int n = 0; n < n_copy; ++n)
        amps(n) = s.amplitude(n) * std::polar(1.0, -omega * n * t0);
    return CompositeState(fock_dim, std::move(amps));
}

namespace {

// H is real symmetric in this basis: free part on the diagonal, dipole
// coupling -g sqrt(n+1) between |n, e> and |n+1, g> and between
// |n, g> and |n+1, e>.
Eigen::MatrixXd build_hamiltonian(int N, double g, double omega, double delta_eps) {
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(2 * N, 2 * N);
    for (int n = 0; n < N; ++n) {
        H(n, n) = omega * n + delta_eps;  // excited block
        H(N + n, N + n) = omega * n;      // ground block
    }
    for (int n = 0; n + 1 < N; ++n) {
        const double v = -g * std::sqrt(n + 1.0);
        // (a + a')(sigma+ + sigma-) connects the blocks with , delta n = +-1
        H(N + n + 1, n) = v;  // |n, e> -> |n+1, g>
        H(n, N + n + 1) = v;
        H(n + 1, N + n) = v;  // |n, g> -> |n+1, e>
        H(N + n, n + 1) = v;
    }
    return H;
}

Eigen::VectorXcd evolve_eigh(const Eigen::MatrixXd& H, const Eigen::VectorXcd& psi0,
                             double dt) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("evolve: eigendecomposition failed");
    const Eigen::VectorXcd in_eigbasis = es.eigenvectors().transpose() * psi0;
    Eigen::VectorXcd phased(in_eigbasis.size());
    for (Eigen::Index k = 0; k < phased.size(); ++k)
        phased(k) = in_eigbasis(k) * std::polar(1.0, -es.eigenvalues()(k) * dt);
    return es.eigenvectors() * phased;
}

// Embedded RK45 (Dormand-Prince) on psi' = -i H psi.  The local error is
// controlled proportionally to the step fraction so the accumulated error
// over the whole window stays near tol.
Eigen::VectorXcd evolve_rk45(const Eigen::MatrixXd& H, Eigen::VectorXcd psi, double dt,
                             double tol) {
    const auto rhs = [&H](const Eigen::VectorXcd& y) -> Eigen::VectorXcd {
        return cplx{0.0, -1.0} * (H * y).eval();
    };
    double t = 0.0;
    double h = dt / 64.0;
    int guard = 0;
    while (t < dt) {
        if (t + h > dt) h = dt - t;
        const double step_tol = tol * std::max(h / dt, 1e-6);
        const Eigen::VectorXcd k1 = rhs(psi);
        const Eigen::VectorXcd k2 = rhs(psi + h * (k1 / 5.0));
        const Eigen::VectorXcd k3 = rhs(psi + h * (3.0 / 40.0 * k1 + 9.0 / 40.0 * k2));
        const Eigen::VectorXcd k4 =
            rhs(psi + h * (44.0 / 45.0 * k1 - 56.0 / 15.0 * k2 + 32.0 / 9.0 * k3));
        const Eigen::VectorXcd k5 =
            rhs(psi + h * (19372.0 / 6561.0 * k1 - 25360.0 / 2187.0 * k2 +
                           64448.0 / 6561.0 * k3 - 212.0 / 729.0 * k4));
        const Eigen::VectorXcd k6 =
            rhs(psi + h * (9017.0 / 3168.0 * k1 - 355.0 / 33.0 * k2 +
                           46732.0 / 5247.0 * k3 + 49.0 / 176.0 * k4 -
                           5103.0 / 18656.0 * k5));
        const Eigen::VectorXcd y5 =
            psi + h * (35.0 / 384.0 * k1 + 500.0 / 1113.0 * k3 + 125.0 / 192.0 * k4 -
                       2187.0 / 6784.0 * k5 + 11.0 / 84.0 * k6);
        const Eigen::VectorXcd k7 = rhs(y5);
        const Eigen::VectorXcd y4 =
            psi + h * (5179.0 / 57600.0 * k1 + 7571.0 / 16695.0 * k3 +
                       393.0 / 640.0 * k4 - 92097.0 / 339200.0 * k5 +
                       187.0 / 2100.0 * k6 + 1.0 / 40.0 * k7);
        const double err = (y5 - y4).norm();
        if (err <= step_tol || h <= 1e-14 * dt) {
            t += h;
            psi = y5;
        }
        const double scale =
            (err > 0.0) ? 0.9 * std::pow(step_tol / err, 0.2) : 2.0;
        h *= std::clamp(scale, 0.2, 5.0);
        if (++guard > 50000000)
            throw std::runtime_error("evolve: adaptive stepper failed to converge");
    }
    return psi;
}

}  // namespace

CompositeState evolve(const CompositeState& s0, double f, double omega,
                      const AtomParams& atom, const TransitWindow& w,
                      const OracleConfig& cfg) {
    cfg.validate();
    const int N = s0.fock_dim();
    if (!(omega > 0.0)) throw std::invalid_argument("evolve: omega must be > 0");
    const double g = atom.dipole * f;
    const Eigen::MatrixXd H = build_hamiltonian(N, g, omega, atom.delta_eps);

    Eigen::VectorXcd out;
    if (cfg.integrator == OracleConfig::Integrator::matrix_exponential)
        out = evolve_eigh(H, s0.amplitudes(), w.duration());
    else
        out = evolve_rk45(H, s0.amplitudes(), w.duration(), cfg.step_tolerance);

    CompositeState result(N, std::move(out));
    const double drift_tol =
        (cfg.integrator == OracleConfig::Integrator::matrix_exponential) ? 1e-10 : 1e-9;
    if (std::abs(result.norm() - s0.norm()) > drift_tol)
        throw std::runtime_error("evolve: unitarity drift above tolerance");
    if (result.top_level_population(2) > cfg.leakage_tolerance)
        throw TruncationError("evolve: top-two Fock level population above tolerance, "
                              "increase truncation_dim",
                              N + 8);
    return result;
}

namespace {

double exact_p2(const PhotonState& s, double f, double omega, const AtomParams& atom,
                const TransitWindow& w, const OracleConfig& cfg, int fock_dim) {
    const CompositeState at_t0 = prepare_composite(s, fock_dim, omega, w.t0);
    return evolve(at_t0, f, omega, atom, w, cfg).ground_population();
}

}  // namespace

FirstOrderComparison compare_first_order(const PhotonState& s, double f, double omega,
                                         const AtomParams& atom, const TransitWindow& w,
                                         const OracleConfig& cfg) {
    cfg.validate();
    if (cfg.truncation_dim < s.dim() + 2)
        throw std::invalid_argument(
            "compare_first_order: truncation_dim must be >= state dim + 2");

    FirstOrderComparison rep{};
    rep.p2_exact = exact_p2(s, f, omega, atom, w, cfg, cfg.truncation_dim);
    rep.p2_first_order = prob_P2(s, f, omega, atom, w);
    rep.abs_discrepancy = std::abs(rep.p2_exact - rep.p2_first_order);
    rep.rel_discrepancy =
        (rep.p2_exact != 0.0) ? rep.abs_discrepancy / rep.p2_exact : rep.abs_discrepancy;

    const AtomParams half(atom.delta_eps, atom.dipole / 2.0, atom.lifetime_tau);
    const double exact_half = exact_p2(s, f, omega, half, w, cfg, cfg.truncation_dim);
    const double disc_half = std::abs(exact_half - prob_P2(s, f, omega, half, w));
    rep.halving_factor = (disc_half > 0.0) ? rep.abs_discrepancy / disc_half
                                           : std::numeric_limits<double>::quiet_NaN();
    rep.scaling_exponent = std::log2(rep.halving_factor);

    rep.truncation_shift =
        std::abs(rep.p2_exact - exact_p2(s, f, omega, atom, w, cfg, cfg.truncation_dim + 4));
    return rep;
}

}  // namespace subvac
