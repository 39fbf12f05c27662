#include "dicke2p/oracle.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace dicke2p::oracle {

double CovarianceState::min_eigenvalue() const {
    Eigen::Matrix2d sigma;
    sigma << sxx, sxp, sxp, spp;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(sigma, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

EnergyScan minimize_energy_bruteforce(const ModelParams& p, int grid_points) {
    if (grid_points < kMinScanPoints)
        fail(ErrorKind::InvalidArgument,
             "energy scan needs >= " + std::to_string(kMinScanPoints) + " grid points");

    const double root_n = std::sqrt(static_cast<double>(p.n_qubits()));
    const double beta_max = root_n * (1.0 - 1e-9);
    auto energy = [&](double beta) { return ground_state_energy(p, beta); };

    EnergyScan scan;
    scan.beta_grid.resize(static_cast<std::size_t>(grid_points));
    scan.energies.resize(scan.beta_grid.size());
    const double step = beta_max / (grid_points - 1);
    for (std::size_t i = 0; i < scan.beta_grid.size(); ++i) {
        scan.beta_grid[i] = i + 1 == scan.beta_grid.size() ? beta_max : static_cast<double>(i) * step;
        scan.energies[i] = energy(scan.beta_grid[i]);
    }

    const auto k = static_cast<std::size_t>(
        std::min_element(scan.energies.begin(), scan.energies.end()) - scan.energies.begin());
    double lo = scan.beta_grid[k == 0 ? 0 : k - 1];
    double hi = scan.beta_grid[std::min(k + 1, scan.beta_grid.size() - 1)];

    // Bisection on dE/dbeta inside the bracketing cell pair. Locating the
    // root of the slope is far sharper than comparing energies near a flat
    // minimum.
    auto slope = [&](double beta) {
        const double n = static_cast<double>(p.n_qubits());
        const double rest = std::sqrt(n - beta * beta);
        const double g_beta = 2.0 * p.g() * beta * rest / n;
        const double d_g_beta = 2.0 * p.g() * (n - 2.0 * beta * beta) / (n * rest);
        const double omega_a = std::sqrt((p.omega() - 2.0 * g_beta) * (p.omega() + 2.0 * g_beta));
        return -2.0 * g_beta * d_g_beta / omega_a + 2.0 * p.epsilon() * beta;
    };
    if (slope(hi) <= 0.0) lo = hi;
    if (slope(lo) > 0.0) hi = lo;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * root_n; ++it) {
        const double mid = 0.5 * (lo + hi);
        (slope(mid) > 0.0 ? hi : lo) = mid;
    }
    double best = 0.5 * (lo + hi);
    double best_e = energy(best);
    // A minimum sitting on the beta = 0 edge of the domain.
    if (const double e0 = energy(0.0); k == 0 && e0 <= best_e) {
        best = 0.0;
        best_e = e0;
    }
    scan.argmin = best;
    scan.min_energy = best_e;
    return scan;
}

int count_stationary_points(const EnergyScan& scan) {
    int changes = 0;
    int last_sign = 0;
    for (std::size_t i = 0; i + 1 < scan.energies.size(); ++i) {
        const double d = scan.energies[i + 1] - scan.energies[i];
        const int sign = (d > 0.0) - (d < 0.0);
        if (sign == 0) continue;
        if (last_sign != 0 && sign != last_sign) ++changes;
        last_sign = sign;
    }
    return changes;
}

namespace {

struct Moments {
    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
    Eigen::Vector3d cov{0.5, 0.5, 0.0};  // sxx, spp, sxp
};

// dX/dt = (omega - 2 g_beta) P,  dP/dt = -(omega + 2 g_beta) X
struct Generator {
    double a;
    double b;

    Moments rate(const Moments& m) const {
        Moments d;
        d.mean = {a * m.mean(1), -b * m.mean(0)};
        d.cov = {2.0 * a * m.cov(2), -2.0 * b * m.cov(2), a * m.cov(1) - b * m.cov(0)};
        return d;
    }

    Eigen::Matrix2d matrix() const {
        Eigen::Matrix2d g;
        g << 0.0, a, -b, 0.0;
        return g;
    }
};

Moments axpy(const Moments& x, double h, const Moments& k) {
    return Moments{x.mean + h * k.mean, x.cov + h * k.cov};
}

Moments rk4_step(const Generator& gen, const Moments& m, double h) {
    const Moments k1 = gen.rate(m);
    const Moments k2 = gen.rate(axpy(m, h / 2.0, k1));
    const Moments k3 = gen.rate(axpy(m, h / 2.0, k2));
    const Moments k4 = gen.rate(axpy(m, h, k3));
    return Moments{m.mean + h / 6.0 * (k1.mean + 2.0 * k2.mean + 2.0 * k3.mean + k4.mean),
                   m.cov + h / 6.0 * (k1.cov + 2.0 * k2.cov + 2.0 * k3.cov + k4.cov)};
}

CovarianceState to_state(double t, const Moments& m) {
    return CovarianceState{t, m.cov(0), m.cov(1), m.cov(2), m.mean(0), m.mean(1)};
}

}  // namespace

std::vector<CovarianceState> evolve_covariance(const MeanFieldSolution& s,
                                               const std::vector<double>& times, double dt,
                                               Propagator method) {
    if (!(s.omega_a > 0.0)) fail(ErrorKind::DomainError, "omega_a = 0");
    const double w = s.params.omega();
    const Generator gen{w - 2.0 * s.g_beta, w + 2.0 * s.g_beta};

    if (method == Propagator::RungeKutta4) {
        if (!(dt > 0.0)) fail(ErrorKind::InvalidArgument, "dt must be positive");
        const double max_dt = kMaxStepFraction * std::numbers::pi / s.omega_a;
        if (dt > max_dt)
            fail(ErrorKind::StepTooLarge,
                 "dt = " + std::to_string(dt) + " exceeds " + std::to_string(max_dt));
    }

    std::vector<CovarianceState> out;
    out.reserve(times.size());
    Moments m;
    double t_now = 0.0;
    for (const double t : times) {
        if (!(t >= t_now)) fail(ErrorKind::InvalidArgument, "times must be non-negative and sorted");
        if (method == Propagator::RungeKutta4) {
            const double span = t - t_now;
            const auto steps = static_cast<long>(std::ceil(span / dt - 1e-12));
            const double h = steps > 0 ? span / static_cast<double>(steps) : 0.0;
            for (long i = 0; i < steps; ++i) m = rk4_step(gen, m, h);
            t_now = t;
            out.push_back(to_state(t, m));
        } else {
            const Eigen::Matrix2d prop = (gen.matrix() * t).exp();
            Eigen::Matrix2d sigma0 = 0.5 * Eigen::Matrix2d::Identity();
            const Eigen::Matrix2d sigma = prop * sigma0 * prop.transpose();
            Moments evolved;
            evolved.mean = prop * Eigen::Vector2d::Zero();
            evolved.cov = {sigma(0, 0), sigma(1, 1), sigma(0, 1)};
            out.push_back(to_state(t, evolved));
        }
    }
    return out;
}

CovarianceState evolve_covariance(const MeanFieldSolution& s, double t, double dt,
                                  Propagator method) {
    return evolve_covariance(s, std::vector<double>{t}, dt, method).front();
}

QuadratureCoefficients moments_from_covariance(const CovarianceState& c) {
    return QuadratureCoefficients{c.t, c.sxx - c.spp, 2.0 * c.sxp, c.sxx + c.spp};
}

MeanFieldSolution solution_from_scan(const ModelParams& p, Branch branch) {
    const EnergyScan scan = minimize_energy_bruteforce(p);
    const double beta = sign_of(branch) * scan.argmin;
    const double g_beta = effective_coupling(p, beta);
    return MeanFieldSolution{
        .params = p,
        .phase = classify_phase(p),
        .beta0 = beta,
        .g_beta = g_beta,
        .theta_a = bogoliubov_angle(p, g_beta),
        .omega_a = excitation_frequency(p, g_beta),
        .e_g = ground_state_energy(p, beta),
    };
}

}  // namespace dicke2p::oracle
