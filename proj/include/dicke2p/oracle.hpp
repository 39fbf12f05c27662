#pragma once

// Independent numerical routes used to check the closed forms.
//
// Nothing in here calls order_parameter(), coefficients() or min_squeezing().
// The energy scan only evaluates ground_state_energy(); the covariance
// evolution only uses the quadratic mean-field Hamiltonian
//   H = ((omega + 2 g_beta)/2) X^2 + ((omega - 2 g_beta)/2) P^2
// through its linear equations of motion.

#include <vector>

#include "dicke2p/dynamics.hpp"
#include "dicke2p/model.hpp"

namespace dicke2p::oracle {

inline constexpr int kMinScanPoints = 10000;
// Largest RK4 step, in units of the half period pi/omega_a.
inline constexpr double kMaxStepFraction = 1e-3;

struct EnergyScan {
    std::vector<double> beta_grid;
    std::vector<double> energies;
    double argmin = 0.0;
    double min_energy = 0.0;
};

// Second moments of X = (a + a^+)/sqrt2 and P = i(a^+ - a)/sqrt2; sxp is the
// symmetrized <XP + PX>/2. The vacuum is (1/2, 1/2, 0).
struct CovarianceState {
    double t = 0.0;
    double sxx = 0.5;
    double spp = 0.5;
    double sxp = 0.0;
    // First moments <X>, <P>; zero for all t when starting from the vacuum.
    double mean_x = 0.0;
    double mean_p = 0.0;

    double determinant() const noexcept { return sxx * spp - sxp * sxp; }
    double min_eigenvalue() const;
};

enum class Propagator { RungeKutta4, MatrixExponential };

// Grid scan of E_g over [0, sqrt(N)(1 - 1e-9)], then bisection on the
// analytic dE/dbeta inside the bracketing cells. Returns the non-negative minimizer.
EnergyScan minimize_energy_bruteforce(const ModelParams& p, int grid_points = kMinScanPoints);

// Interior sign changes of the discrete derivative of the scanned energies.
// For g > g_t this is exactly one (the minimum); beta = 0 is the other
// stationary point, fixed by symmetry.
int count_stationary_points(const EnergyScan& scan);

// Evolves the vacuum covariance to time t. With RungeKutta4 the moment
// equations are integrated with step <= dt (StepTooLarge if dt exceeds
// 1e-3 pi/omega_a); MatrixExponential applies exp(G t) from the generator.
CovarianceState evolve_covariance(const MeanFieldSolution& s, double t, double dt,
                                  Propagator method = Propagator::RungeKutta4);

// Same, for an increasing list of times, sharing one integration pass.
std::vector<CovarianceState> evolve_covariance(const MeanFieldSolution& s,
                                               const std::vector<double>& times, double dt,
                                               Propagator method = Propagator::RungeKutta4);

// A = sxx - spp, B = 2 sxp, C = sxx + spp. With the vacuum at (1/2, 1/2, 0)
// these are already in the vacuum-normalized convention (0, 0, 1).
QuadratureCoefficients moments_from_covariance(const CovarianceState& c);

// Solution assembled from the brute-force minimizer instead of the closed-form
// order parameter (g_beta, theta_a, omega_a, E_g evaluated at the scanned beta).
MeanFieldSolution solution_from_scan(const ModelParams& p, Branch branch = Branch::Plus);

}  // namespace dicke2p::oracle
