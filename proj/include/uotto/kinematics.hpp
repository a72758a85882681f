#pragma once

#include "uotto/errors.hpp"

namespace uotto {

enum class MotionKind { Parallel, AntiParallel };

// Signed alpha values entering the free-Hamiltonian trace h_alpha for the
// three cycle stages that need one.
struct StageAlphas {
    double alpha_v;           // free-flight clock ratio (work trace)
    double alpha_heat_signed; // Stage II (heating)
    double alpha_cool_signed; // Stage IV (cooling)
};

struct CoolingDurations {
    double T_AC_over_T_AH;
    double T_BC_over_T_AH;
};

// Tolerance below which an acceleration ratio counts as degenerate (alpha = 1).
inline constexpr double kDegenerateAlphaTol = 1e-9;

// a*T = 2*artanh(v): dimensionless product of proper acceleration and
// interaction duration for a stage that reverses velocity -v -> +v.
double interaction_time_dimensionless(double v);

// a_A * kappa solving cosh(a_A kappa) = (alpha + 1/alpha)/2; equals |ln alpha|.
double kappa_hat(double alpha);

// v_rel between the two detectors at the end of the heating stage,
// anti-parallel motion: -2 tanh(A) / (1 + tanh^2(A)) = -tanh(2A).
double relative_velocity_antiparallel(double A);

StageAlphas stage_alphas(MotionKind motion, double alpha_H, double alpha_C,
                         double A);

// omega_1 * T_AH from the energy-conservation sufficient condition
// W (alpha_H - 1) / (alpha_C - 1). Caller checks 0 < result < W.
double solve_omega1_hat(double W, double alpha_H, double alpha_C);

CoolingDurations cooling_duration_constraints(double A, double alpha_H,
                                              double alpha_C,
                                              double aA_cool_over_aA_heat);

} // namespace uotto
