#include "dicke2p/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "dicke2p/parallel.hpp"

namespace dicke2p {

ModelParams ModelTemplate::at(double g) const { return validate_params(omega, epsilon, n_qubits, g); }

ModelTemplate ModelTemplate::with_n_epsilon(double n_epsilon) const {
    ModelTemplate out = *this;
    out.epsilon = n_epsilon / static_cast<double>(n_qubits);
    return out;
}

double ModelTemplate::critical_coupling() const {
    return std::sqrt(omega * epsilon * static_cast<double>(n_qubits) / 4.0);
}

std::string_view to_string(CellTag tag) noexcept {
    switch (tag) {
        case CellTag::Normal: return "normal";
        case CellTag::Superradiant: return "superradiant";
        case CellTag::Unbounded: return "unbounded";
    }
    return "unknown";
}

std::string_view to_string(GRule rule) noexcept {
    return rule == GRule::NearHalfOmega ? "near-half-omega" : "near-gt";
}

PhaseDiagram phase_diagram(const ModelTemplate& tmpl, const std::vector<double>& g_values,
                           const std::vector<double>& n_epsilon_values) {
    PhaseDiagram out{g_values, n_epsilon_values, {}, {}};
    for (const double ne : n_epsilon_values) {
        const ModelTemplate row_tmpl = tmpl.with_n_epsilon(ne);
        std::vector<CellTag> row;
        row.reserve(g_values.size());
        for (const double g : g_values) {
            if (g >= tmpl.omega / 2.0) {
                row.push_back(CellTag::Unbounded);
                continue;
            }
            const Phase phase = classify_phase(row_tmpl.at(g));
            row.push_back(phase.tag == PhaseTag::Normal ? CellTag::Normal : CellTag::Superradiant);
        }
        out.cells.push_back(std::move(row));
        out.boundary.push_back(row_tmpl.critical_coupling());
    }
    return out;
}

double global_min_squeezing(const MeanFieldSolution& s) {
    if (s.g_beta == 0.0) return 1.0;
    const double w = s.params.omega();
    const double wa_sq = s.omega_a * s.omega_a;
    const double c_max = (w * w + 4.0 * s.g_beta * s.g_beta) / wa_sq;
    // C - sqrt(C^2 - 1) == 1 / (C + sqrt(C^2 - 1)); the latter keeps its digits for large C.
    return std::sqrt(1.0 / (c_max + std::sqrt((c_max - 1.0) * (c_max + 1.0))));
}

namespace {

void require_increasing_positive(const std::vector<double>& xs, const char* what) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0) || !std::isfinite(xs[i]))
            fail(ErrorKind::InvalidArgument, std::string(what) + " must be positive");
        if (i > 0 && !(xs[i] > xs[i - 1]))
            fail(ErrorKind::InvalidArgument, std::string(what) + " must be strictly increasing");
    }
}

MeanFieldSolution superradiant_near_boundary(const ModelTemplate& tmpl, double delta) {
    const ModelParams p = tmpl.at(tmpl.omega / 2.0 - delta);
    const MeanFieldSolution s = solve_mean_field(p, Branch::Plus);
    if (s.phase.tag != PhaseTag::Superradiant)
        fail(ErrorKind::NotSuperradiant, "delta = " + std::to_string(delta) + " puts g = " +
                                             std::to_string(p.g()) + " at or below g_t = " +
                                             std::to_string(s.phase.g_t));
    return s;
}

}  // namespace

SweepResult delta_sweep(const ModelTemplate& tmpl, const std::vector<double>& deltas) {
    require_increasing_positive(deltas, "deltas");
    const auto sols = parallel_map<MeanFieldSolution>(
        deltas.size(), [&](std::size_t i) { return superradiant_near_boundary(tmpl, deltas[i]); });

    SweepResult out{"delta", deltas, {}, {}, tmpl};
    for (const auto& s : sols) {
        out.t.push_back(std::numbers::pi / (2.0 * s.omega_a));
        out.zeta.push_back(global_min_squeezing(s));
    }
    return out;
}

ScalingFit fit_through_origin(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) fail(ErrorKind::InvalidArgument, "x and y differ in length");
    if (x.size() < 5)
        fail(ErrorKind::InsufficientPoints,
             "fit needs >= 5 points, got " + std::to_string(x.size()));

    const double sxy = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    const double sxx = std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
    const double syy = std::inner_product(y.begin(), y.end(), y.begin(), 0.0);
    if (!(sxx > 0.0)) fail(ErrorKind::InvalidArgument, "all x are zero");

    ScalingFit fit{x, y, sxy / sxx, 0.0, 0.0};
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - fit.slope_m * x[i];
        ss_res += r * r;
        if (y[i] != 0.0) fit.max_rel_residual = std::max(fit.max_rel_residual, std::abs(r / y[i]));
    }
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

ScalingFit fit_through_origin(const SweepResult& sweep) {
    std::vector<double> y(sweep.zeta.size());
    std::transform(sweep.zeta.begin(), sweep.zeta.end(), y.begin(), [](double z) { return z * z; });
    return fit_through_origin(sweep.values, y);
}

double period_measurement(const SqueezingSeries& series) {
    const auto& s = series.samples;
    std::vector<double> minima;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        const double prev = s[i - 1].zeta_min;
        const double here = s[i].zeta_min;
        const double next = s[i + 1].zeta_min;
        if (!(here < prev && here <= next)) continue;
        const double curvature = prev - 2.0 * here + next;
        const double shift = curvature > 0.0 ? 0.5 * (prev - next) / curvature : 0.0;
        minima.push_back(s[i].t + shift * (s[i + 1].t - s[i].t));
    }
    if (minima.size() < 3)
        fail(ErrorKind::TooFewPeriods,
             "found " + std::to_string(minima.size()) + " minima of zeta_min, need >= 3");

    const double period =
        (minima.back() - minima.front()) / static_cast<double>(minima.size() - 1);
    const double dt = s[1].t - s[0].t;
    if (period / dt < 200.0 * (1.0 - 1e-9))
        fail(ErrorKind::InvalidArgument, "series has " + std::to_string(period / dt) +
                                             " samples per period, need >= 200");
    return period;
}

OmegaExpansion omega_a_expansion(const ModelTemplate& tmpl, double delta) {
    const double w = tmpl.omega;
    const double ne = tmpl.n_epsilon();
    if (!(ne < w))
        fail(ErrorKind::DomainError, "expansion needs N epsilon < omega, got N epsilon = " +
                                         std::to_string(ne));
    const MeanFieldSolution s = superradiant_near_boundary(tmpl, delta);
    return OmegaExpansion{s.omega_a, 2.0 * std::sqrt(delta) * std::sqrt(w * w * w / (w * w - ne * ne))};
}

double GRuleSpec::coupling(const ModelTemplate& tmpl) const {
    return rule == GRule::NearHalfOmega ? tmpl.omega / 2.0 - delta_near
                                        : tmpl.critical_coupling() * (1.0 + r);
}

namespace {

MeanFieldSolution rule_solution(const ModelTemplate& tmpl, const GRuleSpec& rule, double ne) {
    const ModelTemplate row = tmpl.with_n_epsilon(ne);
    return solve_mean_field(row.at(rule.coupling(row)), Branch::Plus);
}

double zeta_at(const MeanFieldSolution& s, double t) {
    if (s.phase.tag == PhaseTag::Normal) return 1.0;
    return min_squeezing(coefficients(s, t));
}

}  // namespace

SweepResult epsilon_sweep(const ModelTemplate& tmpl, const GRuleSpec& rule,
                          const std::vector<double>& n_epsilon_values, double t_fixed) {
    require_increasing_positive(n_epsilon_values, "n_epsilon values");
    if (!(t_fixed >= 0.0)) fail(ErrorKind::InvalidArgument, "t must be >= 0");
    SweepResult out{"n_epsilon", n_epsilon_values,
                    std::vector<double>(n_epsilon_values.size(), t_fixed), {}, tmpl};
    out.zeta = parallel_map<double>(n_epsilon_values.size(), [&](std::size_t i) {
        return zeta_at(rule_solution(tmpl, rule, n_epsilon_values[i]), t_fixed);
    });
    return out;
}

SqueezingSurface time_epsilon_surface(const ModelTemplate& tmpl, const GRuleSpec& rule,
                                      const std::vector<double>& n_epsilon_values,
                                      const std::vector<double>& times) {
    require_increasing_positive(n_epsilon_values, "n_epsilon values");
    for (std::size_t j = 0; j < times.size(); ++j)
        if (!(times[j] >= 0.0) || (j > 0 && !(times[j] > times[j - 1])))
            fail(ErrorKind::InvalidArgument, "times must be non-negative and strictly increasing");

    SqueezingSurface out{n_epsilon_values, times, {}};
    out.zeta = parallel_map<std::vector<double>>(n_epsilon_values.size(), [&](std::size_t i) {
        const MeanFieldSolution s = rule_solution(tmpl, rule, n_epsilon_values[i]);
        std::vector<double> row;
        row.reserve(times.size());
        for (const double t : times) row.push_back(zeta_at(s, t));
        return row;
    });
    return out;
}

std::vector<ScalingRow> scaling_table(const ModelTemplate& tmpl, const std::vector<double>& deltas,
                                      int resolution) {
    require_increasing_positive(deltas, "deltas");
    if (resolution < 200)
        fail(ErrorKind::InvalidArgument, "period measurement needs >= 200 points per period");
    return parallel_map<ScalingRow>(deltas.size(), [&](std::size_t i) {
        const double delta = deltas[i];
        const MeanFieldSolution s = superradiant_near_boundary(tmpl, delta);
        const double half_period = std::numbers::pi / s.omega_a;
        const SqueezingSeries series = quadrature_series(s, 4.5 * half_period, resolution);
        const double zeta = global_min_squeezing(s);
        const OmegaExpansion expansion = omega_a_expansion(tmpl, delta);
        return ScalingRow{delta, zeta * zeta, period_measurement(series), expansion.exact,
                          expansion.leading};
    });
}

double relative_spread(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return (*hi - *lo) / (*hi + *lo);
}

std::vector<double> linspace(double first, double last, std::size_t count) {
    std::vector<double> out(count);
    if (count == 1) out[0] = first;
    for (std::size_t i = 0; count > 1 && i < count; ++i)
        out[i] = i + 1 == count ? last
                                : first + (last - first) * static_cast<double>(i) /
                                              static_cast<double>(count - 1);
    return out;
}

std::vector<double> logspace(double first, double last, std::size_t count) {
    std::vector<double> out = linspace(std::log(first), std::log(last), count);
    for (double& v : out) v = std::exp(v);
    if (!out.empty()) {
        out.front() = first;
        out.back() = last;
    }
    return out;
}

}  // namespace dicke2p
