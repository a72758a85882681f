#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uotto/cycle.hpp"

#include <cmath>

using namespace uotto;

TEST_CASE("trace_quantity assembles the five scalars with signed alpha") {
    ResponseSet r{0.3, 0.4, 0.5, 0.6, -0.2};
    EntangledState st{0.6, 0.8};
    // part_a = 0.64*0.3 - 0.36*0.4 + 0.48*(-0.2) = -0.048
    // part_b = 0.36*0.5 - 0.64*0.6 + 0.48*(-0.2) = -0.3
    CHECK(trace_quantity(r, st, -0.7) ==
          doctest::Approx(-0.048 + (-0.7) * (-0.3)).epsilon(1e-14));
    CHECK(trace_quantity(r, st, 0.0) == doctest::Approx(-0.048).epsilon(1e-14));
}

TEST_CASE("state and parameter validation") {
    CHECK_THROWS_AS((EntangledState{0.6, 0.9}.validate()), DomainError);
    CHECK_NOTHROW((EntangledState{0.6, 0.8}.validate()));
    CHECK_THROWS_AS(state_from_b2(1.0), DomainError);
    EntangledState st = state_from_b2(-0.9);
    CHECK(st.b1 == doctest::Approx(std::sqrt(1.0 - 0.81)).epsilon(1e-15));
    CHECK(st.b2 == -0.9);
    // alpha_H and alpha_C straddling 1 has no omega_1 solution
    EngineParams bad{MotionKind::Parallel, 1.0, 0.2, 0.5, 2.0,
                     state_from_b2(0.9)};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    EngineParams ok{MotionKind::Parallel, 1.0, 0.2, 0.5, 0.25,
                    state_from_b2(0.9)};
    CHECK_NOTHROW(ok.validate());
}

TEST_CASE("threshold deviation and quadratic remainder, frozen values") {
    // 60+ digit arbitrary-precision evaluations, rounded to double.
    struct Row {
        double A, W, e0, tr;
    };
    const Row rows[] = {
        {10, 0.1, 0.010459633119, 4.62254844196e-5},
        {20, 0.1, 0.0054649316661, 2.41518139989e-5},
        {30, 0.1, 0.00367562617349, 1.62441262024e-5},
        {40, 0.1, 0.00276542804724, 1.22215807818e-5},
        {50, 0.1, 0.00221559939353, 9.79165847225e-6},
        {10, 0.01, 0.00104626373977, 4.62387615814e-7},
        {20, 0.01, 0.000546536146255, 2.41537134488e-7},
        {30, 0.01, 0.000367575710656, 1.62447048503e-7},
        {40, 0.01, 0.000276548383884, 1.22218273482e-7},
        {50, 0.01, 0.000221562809256, 9.79178530522e-8},
    };
    for (const Row& r : rows) {
        CHECK(epsilon0(r.A, r.W) == doctest::Approx(r.e0).epsilon(1e-9));
        CHECK(trace_at_epsilon0(r.A, r.W) ==
              doctest::Approx(r.tr).epsilon(1e-9));
        // identity: remainder = eps0 * W / (16 sqrt(2))
        CHECK(trace_at_epsilon0(r.A, r.W) ==
              doctest::Approx(epsilon0(r.A, r.W) * r.W /
                              (16.0 * std::sqrt(2.0)))
                  .epsilon(1e-12));
    }
}

TEST_CASE("anti-parallel non-maximal cycle is feasible at A = 1") {
    EngineParams p{MotionKind::AntiParallel, 1.0, 0.2, 0.2, 0.1,
                   state_from_b2(0.9)};
    CycleAssessment a = assess(p);
    CHECK(a.feasible);
    CHECK(a.reasons.empty());
    CHECK(a.trace_work > 0.0);
    CHECK(a.trace_heat_in > 0.0);
    CHECK(a.trace_heat_out > 0.0);
    REQUIRE(a.omega1_hat.has_value());
    CHECK(*a.omega1_hat ==
          doctest::Approx(0.2 * (0.2 - 1.0) / (0.1 - 1.0)).epsilon(1e-14));
    REQUIRE(a.eta_ratio.has_value());
    REQUIRE(a.eta_E.has_value());
    CHECK(*a.eta_ratio == doctest::Approx(a.trace_work / a.trace_heat_in)
                              .epsilon(1e-14));
    CHECK(*a.eta_E ==
          doctest::Approx((1.0 - *a.omega1_hat / p.W) * *a.eta_ratio)
              .epsilon(1e-14));
    CHECK(*a.eta_E > 0.0);
    CHECK(*a.eta_E < 1.0);
    CHECK(a.energy_residual ==
          doctest::Approx(p.W * a.trace_heat_in -
                          *a.omega1_hat * a.trace_heat_out -
                          (p.W - *a.omega1_hat) * a.trace_work)
              .epsilon(1e-12));
}

TEST_CASE("maximally entangled states never output work") {
    for (MotionKind motion :
         {MotionKind::Parallel, MotionKind::AntiParallel}) {
        for (double b2 : {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)}) {
            EngineParams p{motion, 1.0, 0.2, 0.2, 0.1, state_from_b2(b2)};
            CycleAssessment a = assess(p);
            CHECK(a.trace_work < 0.0);
            CHECK_FALSE(a.feasible);
            bool has_work_reason = false;
            for (auto r : a.reasons)
                has_work_reason |= r == InfeasibleReason::WorkNonPositive;
            CHECK(has_work_reason);
        }
    }
}

TEST_CASE("maximal anti-parallel traces follow the quadratic-order formula") {
    // With b1^2 = b2^2 = 1/2 the trace reduces to
    //   work:    -(1 + alpha_v alpha_H) W / 16
    //   heat in: -(1 - alpha_H^2) W / 16
    for (double A : {0.5, 1.0, 3.0}) {
        for (double W : {0.1, 0.7}) {
            for (double aH : {0.2, 0.5}) {
                EngineParams p{MotionKind::AntiParallel, A, W, aH, 0.5 * aH,
                               state_from_b2(1.0 / std::sqrt(2.0))};
                CycleAssessment a = assess(p);
                double av = 1.0 / std::cosh(2.0 * A);
                CHECK(std::abs(a.trace_work - (-(1.0 + av * aH) * W / 16.0)) <=
                      1e-12);
                CHECK(std::abs(a.trace_heat_in -
                               (-(1.0 - aH * aH) * W / 16.0)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("anti-parallel assessments are invariant under b2 sign flip") {
    for (double A : {0.7, 2.0}) {
        for (double b2 : {0.9, 0.4}) {
            EngineParams pp{MotionKind::AntiParallel, A, 0.2, 0.2, 0.1,
                            state_from_b2(b2)};
            EngineParams pm{MotionKind::AntiParallel, A, 0.2, 0.2, 0.1,
                            state_from_b2(-b2)};
            CycleAssessment ap = assess(pp);
            CycleAssessment am = assess(pm);
            CHECK(ap.trace_work == doctest::Approx(am.trace_work).epsilon(1e-14));
            CHECK(ap.trace_heat_in ==
                  doctest::Approx(am.trace_heat_in).epsilon(1e-14));
            CHECK(ap.trace_heat_out ==
                  doctest::Approx(am.trace_heat_out).epsilon(1e-14));
            CHECK(ap.feasible == am.feasible);
        }
    }
}

TEST_CASE("degenerate alpha_H = alpha_C = 1 leaves omega_1 underdetermined") {
    EngineParams p{MotionKind::AntiParallel, 1.0, 0.2, 1.0, 1.0,
                   state_from_b2(0.9)};
    CycleAssessment a = assess(p);
    CHECK(a.omega1_underdetermined);
    CHECK_FALSE(a.omega1_hat.has_value());
    CHECK(std::isnan(a.energy_residual));
}

TEST_CASE("scenario classification on a reduced grid matches the pattern") {
    ScenarioGrid grid;
    grid.steps_A = 12;
    grid.steps_W = 8;
    auto rows = classify_scenarios(grid);
    REQUIRE(rows.size() == 6);
    for (const auto& r : rows) {
        bool expect = r.motion == MotionKind::AntiParallel &&
                      r.state_class == "non-maximal";
        CHECK(r.any_feasible == expect);
        CHECK(r.points_checked + r.points_masked > 0);
    }
}
