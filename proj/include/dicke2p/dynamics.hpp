#pragma once

// Quadrature squeezing of the cavity field starting from the bare vacuum.
//
// Convention: zeta is normalized so that the vacuum gives 1, i.e.
//   zeta(phi)^2 = 2 Var(Q_phi) = A cos 2phi + B sin 2phi + C.

#include <vector>

#include "dicke2p/model.hpp"

namespace dicke2p {

inline constexpr int kDefaultResolution = 200;
inline constexpr int kMinResolution = 50;

struct QuadratureCoefficients {
    double t = 0.0;
    double a_q = 0.0;
    double b_q = 0.0;
    double c_q = 1.0;
};

struct SqueezingSample {
    double t = 0.0;
    double zeta_x = 1.0;
    double zeta_p = 1.0;
    double zeta_min = 1.0;
    double zeta_max = 1.0;
    double phi_min = 0.0;
};

struct SqueezingSeries {
    MeanFieldSolution solution;
    std::vector<SqueezingSample> samples;
    double dt = 0.0;
};

struct OptimalAngle {
    double phi = 0.0;         // in [0, pi)
    bool degenerate = false;  // a_q = b_q = 0: every angle is equivalent
};

// A_q, B_q, C_q at time t:
//   A = 2 omega g_beta (cos 2 omega_a t - 1) / omega_a^2
//   B = -2 g_beta sin(2 omega_a t) / omega_a
//   C = (omega^2 - 4 g_beta^2 cos 2 omega_a t) / omega_a^2
// Throws DomainError if omega_a = 0, InvalidArgument if t < 0.
QuadratureCoefficients coefficients(const MeanFieldSolution& s, double t);

double squeezing_at_angle(const QuadratureCoefficients& c, double phi);

// Minimizer of squeezing_at_angle() over phi, via the two-argument arctangent.
OptimalAngle optimal_angle(const QuadratureCoefficients& c);

// sqrt(C - sqrt(A^2 + B^2))
double min_squeezing(const QuadratureCoefficients& c);
// sqrt(C + sqrt(A^2 + B^2)), the anti-squeezed quadrature.
double max_squeezing(const QuadratureCoefficients& c);

SqueezingSample sample_at(const MeanFieldSolution& s, double t);

// Uniform samples on [0, t_max] with dt = (pi/omega_a)/resolution.
SqueezingSeries quadrature_series(const MeanFieldSolution& s, double t_max,
                                  int resolution = kDefaultResolution);

}  // namespace dicke2p
