#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <ostream>

#include "dicke2p/analysis.hpp"
#include "dicke2p/cli.hpp"
#include "dicke2p/dynamics.hpp"
#include "dicke2p/model.hpp"
#include "dicke2p/oracle.hpp"

namespace dicke2p::cli {

namespace {

// Shortest text that reads back to the same double.
std::string exact(double v) { return fmt::format("{}", v); }

struct CommonOptions {
    double omega = 1.0;
    double epsilon = 0.0008;
    std::int64_t n = 1000;
    double g = 0.49;
    std::string branch = "+";
    std::string out;
    std::string format = "csv";
    std::string config;

    ModelTemplate model() const { return ModelTemplate{omega, epsilon, n}; }

    void describe(std::map<std::string, std::string>& cfg) const {
        cfg["omega"] = exact(omega);
        cfg["epsilon"] = exact(epsilon);
        cfg["n"] = std::to_string(n);
        cfg["g"] = exact(g);
        cfg["branch"] = branch;
        cfg["format"] = format;
    }
};

struct RuleOptions {
    std::string g_rule;
    double delta_near = 1e-3;
    double r = 1e-3;

    GRuleSpec spec() const {
        return GRuleSpec{g_rule == "near-gt" ? GRule::NearCritical : GRule::NearHalfOmega, delta_near, r};
    }

    void describe(std::map<std::string, std::string>& cfg) const {
        cfg["g-rule"] = g_rule.empty() ? "none" : g_rule;
        cfg["delta-near"] = exact(delta_near);
        cfg["r"] = exact(r);
    }
};

void add_common(CLI::App* sub, CommonOptions& c) {
    sub->add_option("--omega", c.omega, "Cavity frequency")->capture_default_str();
    sub->add_option("--epsilon", c.epsilon, "Qubit transition frequency")->capture_default_str();
    sub->add_option("--n", c.n, "Number of qubits N")->capture_default_str();
    sub->add_option("--g", c.g, "Coupling g")->capture_default_str();
    sub->add_option("--branch", c.branch, "Order-parameter branch")
        ->check(CLI::IsMember({"+", "-", "both"}))
        ->capture_default_str();
    sub->add_option("--out", c.out, "Output path (stdout if omitted)");
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--config", c.config, "Flat key = value config file; flags override it");
}

void add_rule(CLI::App* sub, RuleOptions& r, const std::string& default_rule) {
    r.g_rule = default_rule;
    sub->add_option("--g-rule", r.g_rule, "Coupling rule: near-gt or near-half-omega")
        ->check(CLI::IsMember({"near-gt", "near-half-omega"}));
    sub->add_option("--delta-near", r.delta_near, "near-half-omega: g = omega/2 - delta-near")
        ->capture_default_str();
    sub->add_option("--r", r.r, "near-gt: g = g_t (1 + r)")->capture_default_str();
}

Format format_of(const CommonOptions& c) { return c.format == "json" ? Format::Json : Format::Csv; }

std::filesystem::path with_suffix(const std::string& path, const std::string& suffix) {
    const std::filesystem::path p(path);
    return p.parent_path() / (p.stem().string() + suffix + p.extension().string());
}

void emit(const Document& doc, const CommonOptions& c, std::ostream& out, const std::string& suffix = "") {
    if (c.out.empty()) {
        write_document(doc, format_of(c), out);
        return;
    }
    const auto path = with_suffix(c.out, suffix);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) fail(ErrorKind::InvalidArgument, "cannot open " + path.string() + " for writing");
    write_document(doc, format_of(c), file);
    if (!file) fail(ErrorKind::InvalidArgument, "failed writing " + path.string());
}

std::vector<Branch> branches_of(const std::string& b) {
    if (b == "both") return {Branch::Plus, Branch::Minus};
    return {b == "-" ? Branch::Minus : Branch::Plus};
}

std::string label(Branch b) { return b == Branch::Plus ? "+" : "-"; }

std::string phase_name(PhaseTag t) { return t == PhaseTag::Normal ? "normal" : "superradiant"; }

// ---------------------------------------------------------------- solve

int cmd_solve(const CommonOptions& c, std::ostream& out) {
    const ModelParams p = c.model().at(c.g);
    Document doc{"solve", {}, {}, {}};
    c.describe(doc.config);
    doc.table.columns = {"branch", "phase", "g_t", "beta0", "g_beta", "theta_a", "omega_a", "e_g",
                         "lambda", "mu"};
    for (const Branch b : {Branch::Plus, Branch::Minus}) {
        const MeanFieldSolution s = solve_mean_field(p, b);
        doc.table.rows.push_back({label(b), phase_name(s.phase.tag), s.phase.g_t, s.beta0, s.g_beta,
                                  s.theta_a, s.omega_a, s.e_g, p.lambda(), p.mu()});
    }
    emit(doc, c, out);
    return kOk;
}

// ---------------------------------------------------------------- series

struct SeriesOptions {
    double t_max = 100.0;
    int resolution = kDefaultResolution;
};

int cmd_series(const CommonOptions& c, const RuleOptions& rule, const SeriesOptions& o,
               std::ostream& out) {
    const ModelTemplate tmpl = c.model();
    const double g = rule.g_rule.empty() ? c.g : rule.spec().coupling(tmpl);
    const ModelParams p = tmpl.at(g);
    const auto branches = branches_of(c.branch);
    if (branches.size() > 1 && c.out.empty())
        fail(ErrorKind::InvalidArgument, "--branch both writes two files and needs --out");

    for (const Branch b : branches) {
        const SqueezingSeries series = quadrature_series(solve_mean_field(p, b), o.t_max, o.resolution);
        Document doc{"series", {}, {}, {}};
        c.describe(doc.config);
        rule.describe(doc.config);
        doc.config["branch"] = label(b);
        doc.config["g-resolved"] = exact(g);
        doc.config["t-max"] = exact(o.t_max);
        doc.config["resolution"] = std::to_string(o.resolution);
        doc.summary["dt"] = exact(series.dt);
        doc.summary["omega_a"] = exact(series.solution.omega_a);
        doc.summary["phase"] = phase_name(series.solution.phase.tag);
        doc.table.columns = {"t", "a_q", "b_q", "c_q", "zeta_x", "zeta_p", "zeta_min", "phi_min"};
        for (const SqueezingSample& smp : series.samples) {
            const QuadratureCoefficients k = coefficients(series.solution, smp.t);
            doc.table.rows.push_back(
                {smp.t, k.a_q, k.b_q, k.c_q, smp.zeta_x, smp.zeta_p, smp.zeta_min, smp.phi_min});
        }
        emit(doc, c, out, branches.size() > 1 ? label(b) : "");
    }
    return kOk;
}

// ---------------------------------------------------------------- sweep

struct RangeOptions {
    double min = 0.0;
    double max = 0.0;
    int points = 1;

    std::vector<double> linear(const char* name) const {
        check(name);
        return linspace(min, max, static_cast<std::size_t>(points));
    }
    std::vector<double> logarithmic(const char* name) const {
        check(name);
        if (!(min > 0.0)) fail(ErrorKind::InvalidArgument, std::string(name) + " range must be positive");
        return logspace(min, max, static_cast<std::size_t>(points));
    }
    void check(const char* name) const {
        if (points < 1) fail(ErrorKind::InvalidArgument, std::string(name) + " needs >= 1 point");
        if (!std::isfinite(min) || !std::isfinite(max) || (points > 1 && !(max > min)))
            fail(ErrorKind::InvalidArgument, std::string(name) + " range is empty or reversed");
    }
    void describe(std::map<std::string, std::string>& cfg, const std::string& prefix) const {
        cfg[prefix + "-min"] = exact(min);
        cfg[prefix + "-max"] = exact(max);
        cfg[prefix + "-points"] = std::to_string(points);
    }
};

void add_range(CLI::App* sub, RangeOptions& r, const std::string& prefix, const std::string& what) {
    sub->add_option("--" + prefix + "-min", r.min, "Lower end of " + what)->capture_default_str();
    sub->add_option("--" + prefix + "-max", r.max, "Upper end of " + what)->capture_default_str();
    sub->add_option("--" + prefix + "-points", r.points, "Points in " + what)->capture_default_str();
}

struct SweepOptions {
    RangeOptions neps{0.2, 0.99, 80};
    double t = 100.0;
    RangeOptions times{40.0, 200.0, 1};
};

int cmd_sweep(const CommonOptions& c, const RuleOptions& rule, const SweepOptions& o,
              std::ostream& out) {
    const ModelTemplate tmpl = c.model();
    const std::vector<double> neps = o.neps.linear("neps");
    Document doc{"sweep", {}, {}, {}};
    c.describe(doc.config);
    rule.describe(doc.config);
    o.neps.describe(doc.config, "neps");
    doc.table.columns = {"axis_name", "axis_value", "t", "zeta_min"};

    if (o.times.points > 1) {
        o.times.describe(doc.config, "t");
        const SqueezingSurface surf = time_epsilon_surface(tmpl, rule.spec(), neps, o.times.linear("t"));
        for (std::size_t i = 0; i < surf.n_epsilon_values.size(); ++i)
            for (std::size_t j = 0; j < surf.times.size(); ++j)
                doc.table.rows.push_back(
                    {std::string("n_epsilon"), surf.n_epsilon_values[i], surf.times[j], surf.zeta[i][j]});
    } else {
        doc.config["t"] = exact(o.t);
        const SweepResult sweep = epsilon_sweep(tmpl, rule.spec(), neps, o.t);
        for (std::size_t i = 0; i < sweep.values.size(); ++i)
            doc.table.rows.push_back({sweep.axis, sweep.values[i], sweep.t[i], sweep.zeta[i]});
    }
    emit(doc, c, out);
    return kOk;
}

// ---------------------------------------------------------------- phase-diagram

struct PhaseDiagramOptions {
    RangeOptions g{0.0, 0.6, 61};
    RangeOptions neps{0.02, 2.0, 100};
};

int cmd_phase_diagram(const CommonOptions& c, const PhaseDiagramOptions& o, std::ostream& out) {
    if (!(o.neps.min > 0.0)) fail(ErrorKind::InvalidArgument, "neps range must be positive");
    const PhaseDiagram pd = phase_diagram(c.model(), o.g.linear("g"), o.neps.linear("neps"));
    Document doc{"phase-diagram", {}, {}, {}};
    c.describe(doc.config);
    o.g.describe(doc.config, "g");
    o.neps.describe(doc.config, "neps");
    doc.table.columns = {"series", "n_epsilon", "g", "phase"};
    for (std::size_t i = 0; i < pd.n_epsilon_values.size(); ++i)
        for (std::size_t j = 0; j < pd.g_values.size(); ++j)
            doc.table.rows.push_back({std::string("cell"), pd.n_epsilon_values[i], pd.g_values[j],
                                      std::string(to_string(pd.cells[i][j]))});
    for (std::size_t i = 0; i < pd.n_epsilon_values.size(); ++i)
        doc.table.rows.push_back(
            {std::string("boundary"), pd.n_epsilon_values[i], pd.boundary[i], std::string("g_t")});
    emit(doc, c, out);
    return kOk;
}

// ---------------------------------------------------------------- scaling

struct ScalingOptions {
    RangeOptions delta{1e-4, 1e-2, 20};
    int resolution = kDefaultResolution;
    bool self_test = false;
    double self_test_slope = 3.0;
};

double mean(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

int cmd_scaling(const CommonOptions& c, const ScalingOptions& o, std::ostream& out, std::ostream& err) {
    const std::vector<double> deltas = o.delta.logarithmic("delta");
    Document doc{"scaling", {}, {}, {}};
    c.describe(doc.config);
    o.delta.describe(doc.config, "delta");
    doc.config["resolution"] = std::to_string(o.resolution);
    doc.config["self-test"] = o.self_test ? "true" : "false";

    if (o.self_test) {
        doc.config["self-test-slope"] = exact(o.self_test_slope);
        std::vector<double> y(deltas.size());
        std::transform(deltas.begin(), deltas.end(), y.begin(),
                       [&](double d) { return o.self_test_slope * d; });
        const ScalingFit fit = fit_through_origin(deltas, y);
        doc.summary["slope_m"] = exact(fit.slope_m);
        doc.summary["r_squared"] = exact(fit.r_squared);
        doc.table.columns = {"delta", "zeta_min_sq"};
        for (std::size_t i = 0; i < deltas.size(); ++i) doc.table.rows.push_back({deltas[i], y[i]});
        emit(doc, c, out);
        const bool ok = std::abs(fit.slope_m - o.self_test_slope) < 1e-6;
        if (!ok) err << "scaling self-test: fitted slope " << exact(fit.slope_m) << " != injected "
                     << exact(o.self_test_slope) << '\n';
        return ok ? kOk : kOracleMismatch;
    }

    const std::vector<ScalingRow> rows = scaling_table(c.model(), deltas, o.resolution);
    std::vector<double> zsq, period_law, magnitude_law;
    for (const ScalingRow& r : rows) {
        zsq.push_back(r.zeta_min_sq);
        period_law.push_back(r.period_measured * std::sqrt(r.delta));
        magnitude_law.push_back(std::sqrt(r.zeta_min_sq / r.delta));
    }
    const ScalingFit fit = fit_through_origin(deltas, zsq);
    doc.summary["slope_m"] = exact(fit.slope_m);
    doc.summary["r_squared"] = exact(fit.r_squared);
    doc.summary["max_rel_residual"] = exact(fit.max_rel_residual);
    doc.summary["period_law_constant"] = exact(mean(period_law));
    doc.summary["period_law_spread"] = exact(relative_spread(period_law));
    doc.summary["magnitude_law_constant"] = exact(mean(magnitude_law));
    doc.summary["magnitude_law_spread"] = exact(relative_spread(magnitude_law));
    doc.table.columns = {"delta", "zeta_min_sq", "period_measured", "omega_a_exact", "omega_a_leading"};
    for (const ScalingRow& r : rows)
        doc.table.rows.push_back(
            {r.delta, r.zeta_min_sq, r.period_measured, r.omega_a_exact, r.omega_a_leading});
    emit(doc, c, out);
    return kOk;
}

// ---------------------------------------------------------------- oracle-check

struct OracleOptions {
    double t_max = 200.0;
    int t_samples = 4001;
    double beta_tol = 1e-6;
    double coeff_tol = 1e-8;
    double rk4_fraction = 1e-4;
    double perturb_gbeta = 0.0;
};

struct Check {
    std::string name;
    double closed = 0.0;
    double oracle = 0.0;
    double error = 0.0;
    double tolerance = 0.0;

    bool ok() const { return error <= tolerance; }
};

Check relative_check(const std::string& name, double closed, double oracle, double tol) {
    return Check{name, closed, oracle, std::abs(closed - oracle) / std::max(1.0, std::abs(oracle)), tol};
}

Check max_deviation(const std::string& name, const std::vector<double>& closed,
                    const std::vector<double>& oracle, double tol) {
    Check out{name, 0.0, 0.0, 0.0, tol};
    for (std::size_t i = 0; i < closed.size(); ++i) {
        const double d = std::abs(closed[i] - oracle[i]);
        if (i == 0 || d > out.error) out = Check{name, closed[i], oracle[i], d, tol};
    }
    return out;
}

int cmd_oracle_check(const CommonOptions& c, const OracleOptions& o, std::ostream& out,
                     std::ostream& err) {
    if (!(o.t_max > 0.0) || o.t_samples < 2)
        fail(ErrorKind::InvalidArgument, "oracle-check needs t-max > 0 and >= 2 samples");
    const ModelParams p = c.model().at(c.g);
    const Branch branch = branches_of(c.branch).front();

    const MeanFieldSolution reference = solve_mean_field(p, branch);
    MeanFieldSolution closed = reference;
    if (o.perturb_gbeta != 0.0) {
        closed.g_beta += o.perturb_gbeta;
        closed.theta_a = bogoliubov_angle(p, closed.g_beta);
        closed.omega_a = excitation_frequency(p, closed.g_beta);
    }
    const MeanFieldSolution scanned = oracle::solution_from_scan(p, branch);

    std::vector<Check> checks;
    checks.push_back(relative_check("beta0", closed.beta0, scanned.beta0, o.beta_tol));
    checks.push_back(relative_check("g_beta", closed.g_beta, scanned.g_beta, o.beta_tol));
    checks.push_back(relative_check("theta_a", closed.theta_a, scanned.theta_a, o.beta_tol));
    checks.push_back(relative_check("omega_a", closed.omega_a, scanned.omega_a, o.beta_tol));
    checks.push_back(relative_check("e_g", closed.e_g, scanned.e_g, o.beta_tol));

    // Dynamics: covariance evolution with the reference g_beta.
    const std::vector<double> times = linspace(0.0, o.t_max, static_cast<std::size_t>(o.t_samples));
    const double half_period = std::numbers::pi / reference.omega_a;
    const auto expm = oracle::evolve_covariance(reference, times, 0.0, oracle::Propagator::MatrixExponential);
    const auto rk4 = oracle::evolve_covariance(reference, times, o.rk4_fraction * half_period,
                                               oracle::Propagator::RungeKutta4);
    for (const auto& [route, states] : {std::pair{"expm", &expm}, std::pair{"rk4", &rk4}}) {
        std::vector<double> ca, cb, cc, oa, ob, oc, det, mean_dev, zero;
        for (std::size_t i = 0; i < times.size(); ++i) {
            const QuadratureCoefficients k = coefficients(closed, times[i]);
            const QuadratureCoefficients m = oracle::moments_from_covariance((*states)[i]);
            ca.push_back(k.a_q), cb.push_back(k.b_q), cc.push_back(k.c_q);
            oa.push_back(m.a_q), ob.push_back(m.b_q), oc.push_back(m.c_q);
            det.push_back((*states)[i].determinant());
            mean_dev.push_back(std::hypot((*states)[i].mean_x, (*states)[i].mean_p));
            zero.push_back(0.0);
        }
        const std::string prefix = std::string(route) + ".";
        checks.push_back(max_deviation(prefix + "a_q", ca, oa, o.coeff_tol));
        checks.push_back(max_deviation(prefix + "b_q", cb, ob, o.coeff_tol));
        checks.push_back(max_deviation(prefix + "c_q", cc, oc, o.coeff_tol));
        checks.push_back(max_deviation(prefix + "determinant", std::vector<double>(det.size(), 0.25),
                                       det, o.coeff_tol));
        checks.push_back(max_deviation(prefix + "first_moments", zero, mean_dev, 1e-12));
    }

    // Pinned values at the first squeezing minimum and over one full period.
    const double t_half = half_period / 2.0;
    const QuadratureCoefficients k_half = coefficients(closed, t_half);
    const oracle::CovarianceState s_half =
        oracle::evolve_covariance(reference, t_half, 0.0, oracle::Propagator::MatrixExponential);
    const QuadratureCoefficients m_half = oracle::moments_from_covariance(s_half);
    checks.push_back(max_deviation("a_q_at_half_period", {k_half.a_q}, {m_half.a_q}, o.coeff_tol));
    checks.push_back(max_deviation("c_q_at_half_period", {k_half.c_q}, {m_half.c_q}, o.coeff_tol));
    const double zsq = std::pow(global_min_squeezing(closed), 2);
    const auto period_grid = linspace(0.0, half_period, 10001);
    const auto one_period =
        oracle::evolve_covariance(reference, period_grid, 0.0, oracle::Propagator::MatrixExponential);
    double oracle_zsq = 1.0;
    for (const auto& st : one_period) oracle_zsq = std::min(oracle_zsq, 2.0 * st.min_eigenvalue());
    checks.push_back(max_deviation("zeta_min_sq_global", {zsq}, {oracle_zsq}, o.coeff_tol));

    Document doc{"oracle-check", {}, {}, {}};
    c.describe(doc.config);
    doc.config["t-max"] = exact(o.t_max);
    doc.config["t-samples"] = std::to_string(o.t_samples);
    doc.config["beta-tol"] = exact(o.beta_tol);
    doc.config["coeff-tol"] = exact(o.coeff_tol);
    doc.config["rk4-fraction"] = exact(o.rk4_fraction);
    doc.config["perturb-gbeta"] = exact(o.perturb_gbeta);
    doc.table.columns = {"check", "closed_form", "oracle", "error", "tolerance", "pass"};
    for (const Check& ch : checks)
        doc.table.rows.push_back({ch.name, ch.closed, ch.oracle, ch.error, ch.tolerance,
                                  std::string(ch.ok() ? "true" : "false")});

    const auto worst = std::max_element(checks.begin(), checks.end(), [](const Check& a, const Check& b) {
        return a.error / a.tolerance < b.error / b.tolerance;
    });
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& ch) { return ch.ok(); });
    doc.summary["checks"] = std::to_string(checks.size());
    doc.summary["worst"] = worst->name;
    doc.summary["passed"] = ok ? "true" : "false";
    emit(doc, c, out);

    if (!ok) {
        err << "oracle-check: tolerance breach, worst offender " << worst->name << ": error "
            << exact(worst->error) << " > tolerance " << exact(worst->tolerance) << '\n';
        return kOracleMismatch;
    }
    err << "oracle-check: " << checks.size() << " checks passed (worst " << worst->name << ")\n";
    return kOk;
}

int exit_code_for(const Error& e) { return e.is_validation() ? kConfigError : kDomainError; }

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    for (std::size_t i = 1; i < args.size(); ++i) {
        std::string path;
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
        else
            continue;
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot read config file " + path);
        return apply_config(args, parse_config(in));
    }
    return args;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mean-field squeezing dynamics of the two-photon Dicke model", "dicke2p"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_version_flag("--version", DICKE2P_VERSION);

    CommonOptions common;
    RuleOptions series_rule;
    RuleOptions sweep_rule;
    SeriesOptions series;
    SweepOptions sweep;
    PhaseDiagramOptions pd;
    ScalingOptions scaling;
    OracleOptions oracle_opts;

    auto* solve = app.add_subcommand("solve", "Mean-field solution for both branches");
    add_common(solve, common);

    auto* series_cmd = app.add_subcommand("series", "Squeezing time series");
    add_common(series_cmd, common);
    add_rule(series_cmd, series_rule, "");
    series_cmd->add_option("--t-max", series.t_max, "End of the time window")->capture_default_str();
    series_cmd->add_option("--resolution", series.resolution, "Samples per period pi/omega_a")
        ->capture_default_str();

    auto* sweep_cmd = app.add_subcommand("sweep", "zeta_min against N epsilon");
    add_common(sweep_cmd, common);
    add_rule(sweep_cmd, sweep_rule, "near-half-omega");
    add_range(sweep_cmd, sweep.neps, "neps", "the N epsilon axis");
    sweep_cmd->add_option("--t", sweep.t, "Fixed time for a single sweep")->capture_default_str();
    add_range(sweep_cmd, sweep.times, "t", "the time grid (surface when points > 1)");

    auto* pd_cmd = app.add_subcommand("phase-diagram", "Phase classification over (N epsilon, g)");
    add_common(pd_cmd, common);
    add_range(pd_cmd, pd.g, "g", "the coupling axis");
    add_range(pd_cmd, pd.neps, "neps", "the N epsilon axis");

    auto* scaling_cmd = app.add_subcommand("scaling", "Squeezing and period scaling near g = omega/2");
    add_common(scaling_cmd, common);
    add_range(scaling_cmd, scaling.delta, "delta", "delta = omega/2 - g (log spaced)");
    scaling_cmd->add_option("--resolution", scaling.resolution, "Samples per period")->capture_default_str();
    scaling_cmd->add_flag("--self-test", scaling.self_test, "Fit an injected exact line instead");
    scaling_cmd->add_option("--self-test-slope", scaling.self_test_slope, "Slope of the injected line")
        ->capture_default_str();

    auto* oracle_cmd = app.add_subcommand("oracle-check", "Closed forms against independent oracles");
    add_common(oracle_cmd, common);
    oracle_cmd->add_option("--t-max", oracle_opts.t_max, "End of the compared window")->capture_default_str();
    oracle_cmd->add_option("--t-samples", oracle_opts.t_samples, "Compared time points")->capture_default_str();
    oracle_cmd->add_option("--beta-tol", oracle_opts.beta_tol, "Relative tolerance, mean-field values")
        ->capture_default_str();
    oracle_cmd->add_option("--coeff-tol", oracle_opts.coeff_tol, "Absolute tolerance, coefficients")
        ->capture_default_str();
    oracle_cmd->add_option("--rk4-fraction", oracle_opts.rk4_fraction, "RK4 step in units of pi/omega_a")
        ->capture_default_str();
    oracle_cmd->add_option("--perturb-gbeta", oracle_opts.perturb_gbeta,
                           "Test hook: offset added to the closed-form g_beta")
        ->capture_default_str();

    try {
        std::vector<std::string> args = expand_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << DICKE2P_VERSION << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "dicke2p: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        err << "dicke2p: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        if (solve->parsed()) return cmd_solve(common, out);
        if (series_cmd->parsed()) return cmd_series(common, series_rule, series, out);
        if (sweep_cmd->parsed()) return cmd_sweep(common, sweep_rule, sweep, out);
        if (pd_cmd->parsed()) return cmd_phase_diagram(common, pd, out);
        if (scaling_cmd->parsed()) return cmd_scaling(common, scaling, out, err);
        if (oracle_cmd->parsed()) return cmd_oracle_check(common, oracle_opts, out, err);
    } catch (const Error& e) {
        err << "dicke2p: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "dicke2p: " << e.what() << '\n';
        return kDomainError;
    }
    return kConfigError;
}

}  // namespace dicke2p::cli
