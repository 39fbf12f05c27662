#include <doctest.h>

#include <cmath>
#include <random>

#include "dicke2p/model.hpp"

using namespace dicke2p;

namespace {

// omega = 1, epsilon = 0.0008, N = 1000.
ModelParams base(double g) { return validate_params(1.0, 0.0008, 1000, g); }

// Values frozen from an independent bounded-Brent minimization of E_g(beta)
// (scipy, xatol 1e-12) and the g_beta / omega_a definitions evaluated there.
constexpr double kBeta049 = 18.8813532391;
constexpr double kGBeta049 = 0.4693876001;
constexpr double kOmegaA049 = 0.3445302942;
constexpr double kEg049 = -0.4425304528;
constexpr double kBeta045 = 5.4898581345;
constexpr double kGBeta045 = 0.1538716042;
constexpr double kOmegaA045 = 0.9514694518;
constexpr double kBeta047 = 14.3474468979;

}  // namespace

TEST_CASE("validate_params accepts physical inputs and derives lambda, mu") {
    const ModelParams p = base(0.49);
    CHECK(p.lambda() == doctest::Approx(0.625).epsilon(1e-15));
    CHECK(p.mu() == doctest::Approx(0.9604).epsilon(1e-15));
    CHECK(p.lambda() == p.omega() / (2.0 * p.epsilon() * static_cast<double>(p.n_qubits())));
    CHECK(p.mu() == 4.0 * p.g() * p.g() / (p.omega() * p.omega()));
    CHECK(p.n_epsilon() == doctest::Approx(0.8));
}

TEST_CASE("validate_params rejects non-physical inputs") {
    auto kind_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        FAIL("expected an Error");
        return ErrorKind::InvalidArgument;
    };
    CHECK(kind_of([] { base(0.50); }) == ErrorKind::UnboundedRegion);
    CHECK(kind_of([] { base(0.7); }) == ErrorKind::UnboundedRegion);
    CHECK(kind_of([] { validate_params(0.0, 0.0008, 1000, 0.1); }) == ErrorKind::NonPositiveFrequency);
    CHECK(kind_of([] { validate_params(1.0, -1.0, 1000, 0.1); }) == ErrorKind::NonPositiveFrequency);
    CHECK(kind_of([] { validate_params(1.0, 0.0008, 0, 0.1); }) == ErrorKind::ZeroQubits);
    CHECK(kind_of([] { validate_params(1.0, 0.0008, 1000, -0.1); }) == ErrorKind::NegativeCoupling);
    CHECK(kind_of([] { validate_params(1.0, 0.0008, 1000, std::nan("")); }) == ErrorKind::NegativeCoupling);

    // The guard sits min_delta below omega/2.
    CHECK_NOTHROW(base(0.5 - 2e-10));
    CHECK(kind_of([] { base(0.5 - 5e-11); }) == ErrorKind::UnboundedRegion);
    CHECK_NOTHROW(validate_params(1.0, 0.0008, 1000, 0.5 - 5e-11, 1e-11));
}

TEST_CASE("critical_coupling") {
    CHECK(critical_coupling(base(0.1)) == doctest::Approx(0.447214).epsilon(1e-6));
    CHECK(critical_coupling(validate_params(1.0, 0.001, 1000, 0.1)) == doctest::Approx(0.5));
    CHECK(critical_coupling(validate_params(1.0, 0.0002, 1000, 0.1)) ==
          doctest::Approx(0.223607).epsilon(1e-6));
    CHECK(critical_coupling(validate_params(2.0, 0.0008, 1000, 0.1)) ==
          doctest::Approx(std::sqrt(2.0 * 0.8 / 4.0)));
}

TEST_CASE("classify_phase, including the tie at g = g_t") {
    CHECK(classify_phase(base(0.40)).tag == PhaseTag::Normal);
    CHECK(classify_phase(base(0.49)).tag == PhaseTag::Superradiant);
    const double g_t = critical_coupling(base(0.1));
    CHECK(classify_phase(base(g_t)).tag == PhaseTag::Normal);
    CHECK(classify_phase(base(std::nextafter(g_t, 1.0))).tag == PhaseTag::Superradiant);
    CHECK(classify_phase(base(0.40)).g_t == doctest::Approx(g_t));
}

TEST_CASE("order_parameter matches the energy minimizer") {
    CHECK(order_parameter(base(0.40), Branch::Plus) == 0.0);
    CHECK(order_parameter(base(0.49), Branch::Plus) == doctest::Approx(kBeta049).epsilon(1e-8));
    CHECK(order_parameter(base(0.49), Branch::Minus) == doctest::Approx(-kBeta049).epsilon(1e-8));
    CHECK(order_parameter(base(0.45), Branch::Plus) == doctest::Approx(kBeta045).epsilon(1e-8));
    CHECK(order_parameter(base(0.47), Branch::Plus) == doctest::Approx(kBeta047).epsilon(1e-8));
}

TEST_CASE("order parameter vanishes continuously at g_t") {
    const double g_t = critical_coupling(base(0.1));
    // sqrt scaling: 40-digit reference values of the closed form at g_t + h.
    CHECK(order_parameter(base(g_t + 1e-8), Branch::Plus) == doctest::Approx(0.0105737119842).epsilon(1e-5));
    CHECK(order_parameter(base(g_t + 1e-10), Branch::Plus) < 1e-2);
    CHECK(order_parameter(base(g_t + 1e-10), Branch::Plus) ==
          doctest::Approx(0.00105737126279).epsilon(1e-4));
    double previous = 1e300;
    for (double h = 1e-2; h > 1e-12; h /= 10) {
        const double beta = order_parameter(base(g_t + h), Branch::Plus);
        CHECK(beta < previous);
        previous = beta;
    }
}

TEST_CASE("effective_coupling") {
    CHECK(effective_coupling(base(0.49), 0.0) == 0.0);
    CHECK(effective_coupling(base(0.49), 18.8814) == doctest::Approx(0.46939).epsilon(1e-5));
    CHECK(effective_coupling(base(0.49), -18.8814) == doctest::Approx(-0.46939).epsilon(1e-5));
    CHECK_THROWS_AS(effective_coupling(base(0.49), std::sqrt(1000.0)), Error);
    CHECK_THROWS_AS(effective_coupling(base(0.49), 40.0), Error);
}

TEST_CASE("bogoliubov_angle") {
    const ModelParams p = base(0.49);
    CHECK(bogoliubov_angle(p, 0.0) == 0.0);
    CHECK(bogoliubov_angle(p, 0.46939) == doctest::Approx(0.86384).epsilon(1e-5));
    CHECK_THROWS_AS(bogoliubov_angle(p, 0.5), Error);
    CHECK_THROWS_AS(bogoliubov_angle(p, -0.5), Error);
}

TEST_CASE("excitation_frequency") {
    const ModelParams p = base(0.49);
    CHECK(excitation_frequency(p, 0.0) == 1.0);
    CHECK(excitation_frequency(p, 0.46939) == doctest::Approx(0.34452).epsilon(1e-4));
    CHECK(excitation_frequency(p, 0.153881) == doctest::Approx(0.951464).epsilon(1e-6));
    CHECK_THROWS_AS(excitation_frequency(p, 0.5), Error);
    for (double gb : {-0.49, -0.3, 0.0, 0.1, 0.46939, 0.4999}) {
        const double theta = bogoliubov_angle(p, gb);
        const double wa = excitation_frequency(p, gb);
        const double rotated = p.omega() * std::cosh(2 * theta) - 2 * gb * std::sinh(2 * theta);
        CHECK(rotated == doctest::Approx(wa).epsilon(1e-10));
    }
}

TEST_CASE("ground_state_energy") {
    const ModelParams p = base(0.49);
    CHECK(ground_state_energy(p, 0.0) == doctest::Approx(-0.4).epsilon(1e-15));
    CHECK(ground_state_energy(p, kBeta049) == doctest::Approx(kEg049).epsilon(1e-9));
    CHECK(ground_state_energy(p, kBeta049) < -0.4);
    for (double b : {0.5, 3.0, 18.8814, 30.0})
        CHECK(ground_state_energy(p, b) == ground_state_energy(p, -b));
}

TEST_CASE("solve_mean_field reference points") {
    const MeanFieldSolution normal = solve_mean_field(base(0.40));
    CHECK(normal.phase.tag == PhaseTag::Normal);
    CHECK(normal.beta0 == 0.0);
    CHECK(normal.g_beta == 0.0);
    CHECK(normal.omega_a == 1.0);
    CHECK(normal.theta_a == 0.0);

    const MeanFieldSolution s49 = solve_mean_field(base(0.49));
    CHECK(s49.phase.tag == PhaseTag::Superradiant);
    CHECK(s49.beta0 == doctest::Approx(kBeta049).epsilon(1e-8));
    CHECK(s49.g_beta == doctest::Approx(kGBeta049).epsilon(1e-8));
    CHECK(s49.omega_a == doctest::Approx(kOmegaA049).epsilon(1e-8));
    CHECK(s49.e_g == doctest::Approx(kEg049).epsilon(1e-9));

    const MeanFieldSolution s45 = solve_mean_field(base(0.45));
    CHECK(s45.beta0 == doctest::Approx(kBeta045).epsilon(1e-8));
    CHECK(s45.g_beta == doctest::Approx(kGBeta045).epsilon(1e-8));
    CHECK(s45.omega_a == doctest::Approx(kOmegaA045).epsilon(1e-8));
}

TEST_CASE("mean-field invariants over random parameters") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> omega_dist(0.2, 5.0);
    std::uniform_real_distribution<double> ne_dist(0.01, 0.99);
    std::uniform_real_distribution<double> frac(1e-6, 1.0 - 1e-6);
    std::uniform_int_distribution<std::int64_t> n_dist(1, 100000);
    for (int i = 0; i < 2000; ++i) {
        const double omega = omega_dist(rng);
        const std::int64_t n = n_dist(rng);
        const double eps = ne_dist(rng) * omega / static_cast<double>(n);
        const double g_t = std::sqrt(omega * eps * static_cast<double>(n) / 4.0);
        const double g = g_t + frac(rng) * (omega / 2.0 - g_t);
        const ModelParams p = validate_params(omega, eps, n, g);
        const MeanFieldSolution plus = solve_mean_field(p, Branch::Plus);
        const MeanFieldSolution minus = solve_mean_field(p, Branch::Minus);

        CHECK(plus.beta0 * plus.beta0 < static_cast<double>(n));
        CHECK(2.0 * std::abs(plus.g_beta) < omega);
        CHECK(plus.omega_a * plus.omega_a + 4 * plus.g_beta * plus.g_beta ==
              doctest::Approx(omega * omega).epsilon(1e-12));
        CHECK(omega * std::cosh(2 * plus.theta_a) - 2 * plus.g_beta * std::sinh(2 * plus.theta_a) ==
              doctest::Approx(plus.omega_a).epsilon(1e-10));
        CHECK(minus.beta0 == -plus.beta0);
        CHECK(minus.g_beta == -plus.g_beta);
        CHECK(minus.omega_a == plus.omega_a);
        CHECK(minus.e_g == plus.e_g);

        // Local-minimum certificate.
        const double h = 1e-4 * std::sqrt(static_cast<double>(n));
        if (plus.beta0 > h) {
            CHECK(ground_state_energy(p, plus.beta0) <= ground_state_energy(p, plus.beta0 + h));
            CHECK(ground_state_energy(p, plus.beta0) <= ground_state_energy(p, plus.beta0 - h));
        }
    }
}

TEST_CASE("a superradiant window below omega/2 exists iff N epsilon < omega") {
    for (double ne : {0.2, 0.5, 0.8, 0.95, 0.999}) {
        const ModelParams p = validate_params(1.0, ne / 1000.0, 1000, 0.0);
        CHECK(critical_coupling(p) < 0.5);
        CHECK(classify_phase(p.with_g(0.5 - 1e-9)).tag == PhaseTag::Superradiant);
    }
    for (double ne : {1.0, 1.2, 2.0}) {
        const ModelParams p = validate_params(1.0, ne / 1000.0, 1000, 0.0);
        CHECK(critical_coupling(p) >= 0.5);
        CHECK(classify_phase(p.with_g(0.5 - 1e-9)).tag == PhaseTag::Normal);
    }
}
