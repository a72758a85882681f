#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uotto/kinematics.hpp"

#include <cmath>
#include <random>

using namespace uotto;

TEST_CASE("kappa_hat equals |ln alpha| and is inversion symmetric") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> ua(0.05, 20.0);
    for (int i = 0; i < 1000; ++i) {
        double alpha = ua(rng);
        if (std::abs(alpha - 1.0) < 1e-6) continue;
        double k = kappa_hat(alpha);
        CHECK(std::abs(k - std::abs(std::log(alpha))) <= 1e-12 * (1.0 + k));
        CHECK(kappa_hat(1.0 / alpha) == doctest::Approx(k).epsilon(1e-12));
        // definition: cosh(kappa_hat) = (alpha + 1/alpha)/2
        CHECK(std::cosh(k) ==
              doctest::Approx(0.5 * (alpha + 1.0 / alpha)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(kappa_hat(1.0), DegenerateKappa);
    CHECK_THROWS_AS(kappa_hat(1.0 + 1e-10), DegenerateKappa);
    CHECK_THROWS_AS(kappa_hat(0.0), DomainError);
    CHECK_THROWS_AS(kappa_hat(-2.0), DomainError);
}

TEST_CASE("interaction time inverts the velocity-duration relation") {
    for (double v : {0.1, 0.5, 0.9, 0.999}) {
        double at = interaction_time_dimensionless(v);
        CHECK(at == doctest::Approx(2.0 * std::atanh(v)).epsilon(1e-14));
        CHECK(std::tanh(at / 2.0) == doctest::Approx(v).epsilon(1e-14));
    }
    CHECK_THROWS_AS(interaction_time_dimensionless(1.0), DomainError);
    CHECK_THROWS_AS(interaction_time_dimensionless(-0.5), DomainError);
}

TEST_CASE("anti-parallel relative velocity is -tanh(2A)") {
    for (double A : {0.1, 0.33, 1.0, 3.0, 8.0}) {
        double v = relative_velocity_antiparallel(A);
        CHECK(v == doctest::Approx(-std::tanh(2.0 * A)).epsilon(1e-14));
        double t = std::tanh(A);
        CHECK(v ==
              doctest::Approx(-2.0 * t / (1.0 + t * t)).epsilon(1e-14));
    }
}

TEST_CASE("stage alphas: parallel keeps lab clocks aligned") {
    StageAlphas sa = stage_alphas(MotionKind::Parallel, 0.4, 0.2, 1.7);
    CHECK(sa.alpha_v == 1.0);
    CHECK(sa.alpha_heat_signed == 0.4);
    CHECK(sa.alpha_cool_signed == 0.2);
}

TEST_CASE("stage alphas: anti-parallel alpha_v = sech(2A), heats flip sign") {
    std::mt19937 rng(909);
    std::uniform_real_distribution<double> uA(0.05, 10.0);
    for (int i = 0; i < 1000; ++i) {
        double A = uA(rng);
        StageAlphas sa = stage_alphas(MotionKind::AntiParallel, 0.4, 0.2, A);
        CHECK(std::abs(sa.alpha_v - 1.0 / std::cosh(2.0 * A)) <= 1e-12);
        if (A < 2.0) { // 1 - v^2 cancels catastrophically at large A
            double v = relative_velocity_antiparallel(A);
            CHECK(sa.alpha_v ==
                  doctest::Approx(std::sqrt(1.0 - v * v)).epsilon(1e-9));
        }
        CHECK(sa.alpha_heat_signed == -0.4);
        CHECK(sa.alpha_cool_signed == -0.2);
    }
}

TEST_CASE("omega_1 solves the energy-balance sufficient condition") {
    CHECK(solve_omega1_hat(0.2, 0.2, 0.1) ==
          doctest::Approx(0.2 * (0.2 - 1.0) / (0.1 - 1.0)).epsilon(1e-14));
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int i = 0; i < 500; ++i) {
        double W = 0.05 + u(rng);
        double aH = u(rng);
        double aC = u(rng) * aH; // further from 1 on the same side
        double w1 = solve_omega1_hat(W, aH, aC);
        CHECK(W * (aH - 1.0) == doctest::Approx(w1 * (aC - 1.0)).epsilon(1e-12));
        CHECK(w1 > 0.0);
        CHECK(w1 < W);
    }
    CHECK_THROWS_AS(solve_omega1_hat(0.2, 1.0, 1.0), UnderdeterminedOmega1);
    CHECK_THROWS_AS(solve_omega1_hat(0.2, 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(solve_omega1_hat(0.2, 2.0, 0.5), NonPositiveOmega1);
    CHECK_THROWS_AS(solve_omega1_hat(-0.2, 0.5, 0.25), DomainError);
}

TEST_CASE("cooling stage durations scale with the acceleration ratio") {
    CoolingDurations d = cooling_duration_constraints(1.0, 0.5, 0.25, 2.0);
    CHECK(d.T_AC_over_T_AH == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(d.T_BC_over_T_AH == doctest::Approx(0.125).epsilon(1e-14));
}
