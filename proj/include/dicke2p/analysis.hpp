#pragma once

// Figure-level analyses: phase diagram, N*epsilon sweeps and the scaling of
// the squeezing magnitude and oscillation period as g approaches omega/2.

#include <cstdint>
#include <string>
#include <vector>

#include "dicke2p/dynamics.hpp"
#include "dicke2p/model.hpp"

namespace dicke2p {

// Physical inputs without a coupling. The default is N = 1000, omega = 1,
// epsilon = 0.0008.
struct ModelTemplate {
    double omega = 1.0;
    double epsilon = 0.0008;
    std::int64_t n_qubits = 1000;

    double n_epsilon() const noexcept { return static_cast<double>(n_qubits) * epsilon; }
    ModelParams at(double g) const;
    // Same N and omega with epsilon = n_epsilon / N.
    ModelTemplate with_n_epsilon(double n_epsilon) const;
    // sqrt(omega epsilon N / 4), without requiring a valid coupling.
    double critical_coupling() const;
};

enum class CellTag { Normal, Superradiant, Unbounded };

std::string_view to_string(CellTag tag) noexcept;

struct PhaseDiagram {
    std::vector<double> g_values;
    std::vector<double> n_epsilon_values;
    // cells[i][j] for n_epsilon_values[i], g_values[j]
    std::vector<std::vector<CellTag>> cells;
    // g_t at each n_epsilon_values[i]
    std::vector<double> boundary;
};

PhaseDiagram phase_diagram(const ModelTemplate& tmpl, const std::vector<double>& g_values,
                           const std::vector<double>& n_epsilon_values);

struct SweepResult {
    std::string axis;
    std::vector<double> values;
    std::vector<double> t;
    std::vector<double> zeta;
    ModelTemplate fixed;
};

struct ScalingFit {
    std::vector<double> deltas;
    std::vector<double> zeta_min_sq;
    double slope_m = 0.0;
    double max_rel_residual = 0.0;
    // Against the zero-intercept model: 1 - SS_res / sum(y^2).
    double r_squared = 0.0;
};

// Minimum of zeta_min over all t, reached where cos(2 omega_a t) = -1:
//   C_max = (omega^2 + 4 g_beta^2)/omega_a^2,  zeta = sqrt(C_max - sqrt(C_max^2 - 1)).
double global_min_squeezing(const MeanFieldSolution& s);

// Global minimum of zeta_min for g = omega/2 - delta, one point per delta.
// Deltas must be positive and strictly increasing; NotSuperradiant if g <= g_t.
SweepResult delta_sweep(const ModelTemplate& tmpl, const std::vector<double>& deltas);

// Least-squares slope of y = m x through the origin. InsufficientPoints below 5.
ScalingFit fit_through_origin(const std::vector<double>& x, const std::vector<double>& y);
// Fits zeta^2 (the squared sweep values) against the swept delta.
ScalingFit fit_through_origin(const SweepResult& sweep);

// Mean spacing of successive minima of zeta_min(t), each located by a
// three-point parabola. TooFewPeriods with fewer than 3 minima;
// InvalidArgument below 200 samples per measured period.
double period_measurement(const SqueezingSeries& series);

struct OmegaExpansion {
    double exact = 0.0;
    // 2 sqrt(delta) sqrt(omega^3 / (omega^2 - N^2 epsilon^2))
    double leading = 0.0;
    double ratio() const noexcept { return leading / exact; }
};

// DomainError if N epsilon >= omega.
OmegaExpansion omega_a_expansion(const ModelTemplate& tmpl, double delta);

enum class GRule { NearHalfOmega, NearCritical };

std::string_view to_string(GRule rule) noexcept;

// How "g -> omega/2" and "g -> g_t" become a concrete coupling:
//   NearHalfOmega  g = omega/2 - delta_near
//   NearCritical   g = g_t (1 + r)
struct GRuleSpec {
    GRule rule = GRule::NearHalfOmega;
    double delta_near = 1e-3;
    double r = 1e-3;

    double coupling(const ModelTemplate& tmpl) const;
};

// zeta_min(t_fixed) against N epsilon (N and omega from the template). Cells
// in the normal phase give 1; a rule that lands at or past omega/2 throws
// UnboundedRegion.
SweepResult epsilon_sweep(const ModelTemplate& tmpl, const GRuleSpec& rule,
                          const std::vector<double>& n_epsilon_values, double t_fixed);

struct SqueezingSurface {
    std::vector<double> n_epsilon_values;
    std::vector<double> times;
    // zeta[i][j] for n_epsilon_values[i], times[j]
    std::vector<std::vector<double>> zeta;
};

SqueezingSurface time_epsilon_surface(const ModelTemplate& tmpl, const GRuleSpec& rule,
                                      const std::vector<double>& n_epsilon_values,
                                      const std::vector<double>& times);

// One row of the near-boundary scaling table.
struct ScalingRow {
    double delta = 0.0;
    double zeta_min_sq = 0.0;
    double period_measured = 0.0;
    double omega_a_exact = 0.0;
    double omega_a_leading = 0.0;
};

// Per delta: global zeta^2, the period measured from a sampled series
// (4.5 half-periods pi/omega_a at `resolution` points each) and both omega_a values.
std::vector<ScalingRow> scaling_table(const ModelTemplate& tmpl, const std::vector<double>& deltas,
                                      int resolution = kDefaultResolution);

// Smallest e such that every value lies within a factor (1 +- e) of one
// common constant: (max - min) / (max + min).
double relative_spread(const std::vector<double>& values);

std::vector<double> linspace(double first, double last, std::size_t count);
std::vector<double> logspace(double first, double last, std::size_t count);

}  // namespace dicke2p
