#include "dicke2p/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace dicke2p {

QuadratureCoefficients coefficients(const MeanFieldSolution& s, double t) {
    if (!(t >= 0.0)) fail(ErrorKind::InvalidArgument, "t must be >= 0");
    const double wa = s.omega_a;
    if (!(wa > 0.0)) fail(ErrorKind::DomainError, "omega_a = 0, coefficients are singular");
    const double w = s.params.omega();
    const double gb = s.g_beta;

    // cos(2 wa t) - 1 = -2 sin^2(wa t); avoids cancellation at small wa t and
    // keeps C - 1 accurate when wa is small.
    const double sn = std::sin(wa * t);
    const double sin_sq = sn * sn;
    const double wa_sq = wa * wa;
    return QuadratureCoefficients{
        .t = t,
        .a_q = -4.0 * w * gb * sin_sq / wa_sq,
        .b_q = -2.0 * gb * std::sin(2.0 * wa * t) / wa,
        .c_q = 1.0 + 8.0 * gb * gb * sin_sq / wa_sq,
    };
}

double squeezing_at_angle(const QuadratureCoefficients& c, double phi) {
    const double v = c.a_q * std::cos(2.0 * phi) + c.b_q * std::sin(2.0 * phi) + c.c_q;
    return std::sqrt(std::max(0.0, v));
}

OptimalAngle optimal_angle(const QuadratureCoefficients& c) {
    if (c.a_q == 0.0 && c.b_q == 0.0) return OptimalAngle{0.0, true};
    // A cos 2phi + B sin 2phi = -sqrt(A^2+B^2) when (cos 2phi, sin 2phi) is antiparallel to (A, B).
    double phi = 0.5 * std::atan2(-c.b_q, -c.a_q);
    if (phi < 0.0) phi += std::numbers::pi;
    if (phi >= std::numbers::pi) phi -= std::numbers::pi;
    return OptimalAngle{phi, false};
}

double min_squeezing(const QuadratureCoefficients& c) {
    return std::sqrt(std::max(0.0, c.c_q - std::hypot(c.a_q, c.b_q)));
}

double max_squeezing(const QuadratureCoefficients& c) {
    return std::sqrt(c.c_q + std::hypot(c.a_q, c.b_q));
}

SqueezingSample sample_at(const MeanFieldSolution& s, double t) {
    const QuadratureCoefficients c = coefficients(s, t);
    return SqueezingSample{
        .t = t,
        .zeta_x = squeezing_at_angle(c, 0.0),
        .zeta_p = squeezing_at_angle(c, std::numbers::pi / 2.0),
        .zeta_min = min_squeezing(c),
        .zeta_max = max_squeezing(c),
        .phi_min = optimal_angle(c).phi,
    };
}

SqueezingSeries quadrature_series(const MeanFieldSolution& s, double t_max, int resolution) {
    if (!(t_max > 0.0) || !std::isfinite(t_max))
        fail(ErrorKind::InvalidArgument, "t_max must be positive");
    if (resolution < kMinResolution)
        fail(ErrorKind::InvalidArgument,
             "resolution must be >= " + std::to_string(kMinResolution) + " points per period");
    if (!(s.omega_a > 0.0)) fail(ErrorKind::DomainError, "omega_a = 0");

    SqueezingSeries out{s, {}, (std::numbers::pi / s.omega_a) / resolution};
    // Index-based times so that t_k = k dt exactly, with no accumulated drift.
    const auto count = static_cast<std::size_t>(std::floor(t_max / out.dt + 1e-9)) + 1;
    out.samples.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        out.samples.push_back(sample_at(s, static_cast<double>(k) * out.dt));
    return out;
}

}  // namespace dicke2p
