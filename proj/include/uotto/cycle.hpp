#pragma once

#include "uotto/response.hpp"

#include <optional>
#include <string>
#include <vector>

namespace uotto {

struct EntangledState {
    double b1;
    double b2;

    void validate() const; // b1^2 + b2^2 = 1 to 1e-12
};

// b1 taken positive, b2 carries the relative sign.
EntangledState state_from_b2(double b2);

struct EngineParams {
    MotionKind motion;
    double A;
    double W;
    double alpha_H;
    double alpha_C;
    EntangledState state;

    void validate() const;
};

enum class InfeasibleReason {
    WorkNonPositive,
    HeatInNonPositive,
    HeatOutNonPositive,
    Omega1Invalid
};

const char* reason_name(InfeasibleReason r);

struct CycleAssessment {
    double trace_work;
    double trace_heat_in;
    double trace_heat_out;
    std::optional<double> omega1_hat; // empty: underdetermined (both alphas 1)
    bool omega1_underdetermined = false;
    std::optional<double> eta_ratio; // eta_E / eta_0
    std::optional<double> eta_E;
    double energy_residual; // diagnostic: W*Qin - w1*Qout - (W-w1)*Work
    bool feasible;
    std::vector<InfeasibleReason> reasons;
};

// Tr(delta rho^H h_alpha) assembled from the five response scalars:
// {b2^2 P_A(W) - b1^2 P_A(-W) + b1 b2 dP_AB}
//   + alpha_signed * {b1^2 P_B(W) - b2^2 P_B(-W) + b1 b2 dP_AB}.
double trace_quantity(const ResponseSet& resp, const EntangledState& state,
                      double alpha_signed);

CycleAssessment assess(const EngineParams& params);

// Threshold deviation of b2 from 1/sqrt(2) at which the work trace turns
// positive: (W/8) / (2 sqrt(2) [P_A(W) + P_A(-W)]). Independent of alpha.
double epsilon0(double A, double W);

// Work trace at b2 = 1/sqrt(2) + epsilon0: the quadratic remainder
// epsilon0^2 (P_A(W) + P_A(-W)).
double trace_at_epsilon0(double A, double W);

struct ScenarioVerdict {
    MotionKind motion;
    std::string state_class; // "symmetric", "anti-symmetric", "non-maximal"
    bool any_feasible;
    long points_checked;
    long points_masked;
};

struct ScenarioGrid {
    int steps_A = 40;
    int steps_W = 40;
    double A_min = 0.1, A_max = 10.0;
    double W_min = 0.05, W_max = 2.0;
    std::vector<double> alpha_H_values{0.2, 0.5, 1.0, 1.2, 1.5, 2.0};
    std::vector<double> b2_nonmax{0.9, -0.9};
    unsigned workers = 0; // 0: hardware_concurrency
};

// Six-row feasibility matrix over the default grid: for each motion and
// state class, whether any grid point yields a feasible cycle.
std::vector<ScenarioVerdict> classify_scenarios(const ScenarioGrid& grid = {});

} // namespace uotto
