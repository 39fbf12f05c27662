#pragma once

// Mean-field description of N two-level atoms coupled to a single cavity mode
// through a two-photon interaction, after the Holstein-Primakoff mapping of
// the collective spin onto a boson b with order parameter beta = <b>.
//
// Everything here is a scalar closed form; no operator algebra is involved.

#include <cstdint>

#include "dicke2p/error.hpp"

namespace dicke2p {

// Closest approach to the unbounded boundary g = omega/2, in units of omega.
inline constexpr double kDefaultMinDelta = 1e-10;

// Validated physical inputs. Construct through validate_params(); the derived
// lambda and mu are computed once from the four inputs and never drift.
class ModelParams {
public:
    double omega() const noexcept { return omega_; }
    double epsilon() const noexcept { return epsilon_; }
    std::int64_t n_qubits() const noexcept { return n_qubits_; }
    double g() const noexcept { return g_; }
    // omega / (2 epsilon N)
    double lambda() const noexcept { return lambda_; }
    // 4 g^2 / omega^2
    double mu() const noexcept { return mu_; }
    // N epsilon, the combination that sets the phase boundary.
    double n_epsilon() const noexcept { return static_cast<double>(n_qubits_) * epsilon_; }

    // Same model at a different coupling; revalidated.
    ModelParams with_g(double g) const;
    ModelParams with_epsilon(double epsilon) const;

    friend ModelParams validate_params(double omega, double epsilon, std::int64_t n_qubits,
                                       double g, double min_delta);

private:
    ModelParams() = default;

    double omega_ = 1.0;
    double epsilon_ = 0.0;
    std::int64_t n_qubits_ = 1;
    double g_ = 0.0;
    double lambda_ = 0.0;
    double mu_ = 0.0;
    double min_delta_ = kDefaultMinDelta;
};

// Rejects non-physical inputs:
//   NonPositiveFrequency  omega <= 0 or epsilon <= 0 (or non-finite)
//   ZeroQubits            n_qubits < 1
//   NegativeCoupling      g < 0
//   UnboundedRegion       g >= omega/2 - min_delta*omega
ModelParams validate_params(double omega, double epsilon, std::int64_t n_qubits, double g,
                            double min_delta = kDefaultMinDelta);

enum class PhaseTag { Normal, Superradiant };

struct Phase {
    PhaseTag tag = PhaseTag::Normal;
    double g_t = 0.0;
};

enum class Branch { Plus, Minus };

inline double sign_of(Branch b) noexcept { return b == Branch::Plus ? 1.0 : -1.0; }

struct MeanFieldSolution {
    ModelParams params;
    Phase phase;
    double beta0 = 0.0;
    double g_beta = 0.0;
    double theta_a = 0.0;
    double omega_a = 0.0;
    double e_g = 0.0;
};

// g_t = sqrt(omega epsilon N / 4)
double critical_coupling(const ModelParams& p);

// Normal iff g <= g_t (the tie is Normal).
Phase classify_phase(const ModelParams& p);

// 0 in the normal phase, otherwise
//   +-sqrt((N/2) (1 - sqrt((1 - mu) / (4 mu^2 lambda^2 - mu))))
// which is the stationary minimum of ground_state_energy() in beta.
double order_parameter(const ModelParams& p, Branch branch);

// g_beta = g sqrt(N - beta^2) (2 beta) / N for real beta. Throws DomainError if beta^2 >= N.
double effective_coupling(const ModelParams& p, double beta);

// theta_a = artanh(2 g_beta / omega) / 2. Throws DomainError if 2|g_beta| >= omega.
double bogoliubov_angle(const ModelParams& p, double g_beta);

// Positive root sqrt(omega^2 - 4 g_beta^2). Throws DomainError if 2|g_beta| >= omega.
double excitation_frequency(const ModelParams& p, double g_beta);

// E_g(beta) = omega_a(beta)/2 + epsilon (beta^2 - N/2) - omega/2
double ground_state_energy(const ModelParams& p, double beta);

// Composes all of the above for one branch of the order parameter.
// In the normal phase omega_a = omega (the diagonalized frequency at g_beta = 0).
MeanFieldSolution solve_mean_field(const ModelParams& p, Branch branch = Branch::Plus);

}  // namespace dicke2p
