#include "dicke2p/model.hpp"

#include <cmath>
#include <string>

namespace dicke2p {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPositiveFrequency: return "NonPositiveFrequency";
        case ErrorKind::ZeroQubits: return "ZeroQubits";
        case ErrorKind::NegativeCoupling: return "NegativeCoupling";
        case ErrorKind::UnboundedRegion: return "UnboundedRegion";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::StepTooLarge: return "StepTooLarge";
        case ErrorKind::NotSuperradiant: return "NotSuperradiant";
        case ErrorKind::InsufficientPoints: return "InsufficientPoints";
        case ErrorKind::TooFewPeriods: return "TooFewPeriods";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

ModelParams validate_params(double omega, double epsilon, std::int64_t n_qubits, double g,
                            double min_delta) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        fail(ErrorKind::NonPositiveFrequency, "omega must be positive, got " + std::to_string(omega));
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        fail(ErrorKind::NonPositiveFrequency,
             "epsilon must be positive, got " + std::to_string(epsilon));
    if (n_qubits < 1)
        fail(ErrorKind::ZeroQubits, "n_qubits must be >= 1, got " + std::to_string(n_qubits));
    if (!(g >= 0.0) || !std::isfinite(g))
        fail(ErrorKind::NegativeCoupling, "g must be >= 0, got " + std::to_string(g));
    if (!(min_delta >= 0.0))
        fail(ErrorKind::InvalidArgument, "min_delta must be >= 0");
    if (g >= omega / 2.0 - min_delta * omega)
        fail(ErrorKind::UnboundedRegion,
             "g = " + std::to_string(g) + " is at or beyond omega/2 = " + std::to_string(omega / 2.0));

    ModelParams p;
    p.omega_ = omega;
    p.epsilon_ = epsilon;
    p.n_qubits_ = n_qubits;
    p.g_ = g;
    p.lambda_ = omega / (2.0 * epsilon * static_cast<double>(n_qubits));
    p.mu_ = 4.0 * g * g / (omega * omega);
    p.min_delta_ = min_delta;
    return p;
}

ModelParams ModelParams::with_g(double g) const {
    return validate_params(omega_, epsilon_, n_qubits_, g, min_delta_);
}

ModelParams ModelParams::with_epsilon(double epsilon) const {
    return validate_params(omega_, epsilon, n_qubits_, g_, min_delta_);
}

double critical_coupling(const ModelParams& p) {
    return std::sqrt(p.omega() * p.epsilon() * static_cast<double>(p.n_qubits()) / 4.0);
}

Phase classify_phase(const ModelParams& p) {
    const double g_t = critical_coupling(p);
    return Phase{p.g() <= g_t ? PhaseTag::Normal : PhaseTag::Superradiant, g_t};
}

double order_parameter(const ModelParams& p, Branch branch) {
    const Phase phase = classify_phase(p);
    if (phase.tag == PhaseTag::Normal) return 0.0;

    const double n = static_cast<double>(p.n_qubits());
    const double two_g = 2.0 * p.g() / p.omega();
    const double one_minus_mu = (1.0 - two_g) * (1.0 + two_g);
    const double mu = p.mu();
    const double lambda = p.lambda();
    const double denom = 4.0 * mu * mu * lambda * lambda - mu;
    if (!(denom > 0.0))
        fail(ErrorKind::DomainError, "4 mu^2 lambda^2 - mu <= 0 in the superradiant phase");

    // 1 - y with y = sqrt((1 - mu)/denom), written so that neither end of the
    // superradiant window loses digits: denom - (1 - mu) = (2 mu lambda - 1)(2 mu lambda + 1)
    // and 2 mu lambda - 1 = (g - g_t)(g + g_t)/g_t^2.
    const double y = std::sqrt(one_minus_mu / denom);
    const double g_t = phase.g_t;
    const double excess = (p.g() - g_t) * (p.g() + g_t) / (g_t * g_t);
    const double one_minus_y = excess * (excess + 2.0) / (denom * (1.0 + y));
    const double beta_sq = 0.5 * n * std::max(0.0, one_minus_y);
    return sign_of(branch) * std::sqrt(beta_sq);
}

double effective_coupling(const ModelParams& p, double beta) {
    const double n = static_cast<double>(p.n_qubits());
    const double rest = n - beta * beta;
    if (!(rest > 0.0))
        fail(ErrorKind::DomainError, "beta^2 = " + std::to_string(beta * beta) + " >= N");
    return p.g() * std::sqrt(rest) * (2.0 * beta) / n;
}

namespace {

void check_diagonalizable(const ModelParams& p, double g_beta) {
    if (!(2.0 * std::abs(g_beta) < p.omega()))
        fail(ErrorKind::DomainError, "2|g_beta| = " + std::to_string(2.0 * std::abs(g_beta)) +
                                         " >= omega; Bogoliubov diagonalization breaks down");
}

}  // namespace

double bogoliubov_angle(const ModelParams& p, double g_beta) {
    check_diagonalizable(p, g_beta);
    return 0.5 * std::atanh(2.0 * g_beta / p.omega());
}

double excitation_frequency(const ModelParams& p, double g_beta) {
    check_diagonalizable(p, g_beta);
    const double w = p.omega();
    return std::sqrt((w - 2.0 * g_beta) * (w + 2.0 * g_beta));
}

double ground_state_energy(const ModelParams& p, double beta) {
    const double omega_a = excitation_frequency(p, effective_coupling(p, beta));
    const double n = static_cast<double>(p.n_qubits());
    return 0.5 * omega_a + p.epsilon() * (beta * beta - 0.5 * n) - 0.5 * p.omega();
}

MeanFieldSolution solve_mean_field(const ModelParams& p, Branch branch) {
    const Phase phase = classify_phase(p);
    const double beta0 = order_parameter(p, branch);
    const double g_beta = effective_coupling(p, beta0);
    return MeanFieldSolution{
        .params = p,
        .phase = phase,
        .beta0 = beta0,
        .g_beta = g_beta,
        .theta_a = bogoliubov_angle(p, g_beta),
        .omega_a = excitation_frequency(p, g_beta),
        .e_g = ground_state_energy(p, beta0),
    };
}

}  // namespace dicke2p
