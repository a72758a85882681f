#include "uotto/kinematics.hpp"

#include <cmath>

namespace uotto {

double interaction_time_dimensionless(double v) {
    if (!(v > 0.0 && v < 1.0))
        throw DomainError("interaction_time_dimensionless: v outside (0, 1)");
    return 2.0 * std::atanh(v);
}

double kappa_hat(double alpha) {
    if (!(alpha > 0.0))
        throw DomainError("kappa_hat: alpha must be positive");
    if (std::abs(alpha - 1.0) < kDegenerateAlphaTol)
        throw DegenerateKappa("kappa_hat: alpha within tolerance of 1");
    return std::acosh(0.5 * (alpha + 1.0 / alpha));
}

double relative_velocity_antiparallel(double A) {
    if (!(A > 0.0))
        throw DomainError("relative_velocity_antiparallel: A must be positive");
    double t = std::tanh(A);
    return -2.0 * t / (1.0 + t * t);
}

StageAlphas stage_alphas(MotionKind motion, double alpha_H, double alpha_C,
                         double A) {
    if (!(alpha_H > 0.0 && alpha_C > 0.0 && A > 0.0))
        throw DomainError("stage_alphas: arguments must be positive");
    if (motion == MotionKind::Parallel)
        return {1.0, alpha_H, alpha_C};
    // sqrt(1 - v_rel^2) with v_rel = -tanh(2A) reduces to sech(2A); the
    // direct form avoids the cancellation in 1 - v^2 at large A.
    return {1.0 / std::cosh(2.0 * A), -alpha_H, -alpha_C};
}

double solve_omega1_hat(double W, double alpha_H, double alpha_C) {
    if (!(W > 0.0 && alpha_H > 0.0 && alpha_C > 0.0))
        throw DomainError("solve_omega1_hat: arguments must be positive");
    bool h_one = std::abs(alpha_H - 1.0) < kDegenerateAlphaTol;
    bool c_one = std::abs(alpha_C - 1.0) < kDegenerateAlphaTol;
    if (h_one && c_one)
        throw UnderdeterminedOmega1("solve_omega1_hat: alpha_H = alpha_C = 1 leaves omega_1 free");
    if (c_one)
        throw DomainError("solve_omega1_hat: alpha_C at 1 with alpha_H away from 1");
    double w1 = W * (alpha_H - 1.0) / (alpha_C - 1.0);
    if (!(w1 > 0.0))
        throw NonPositiveOmega1("solve_omega1_hat: computed omega_1 <= 0 (alphas straddle 1)");
    return w1;
}

CoolingDurations cooling_duration_constraints(double A, double alpha_H,
                                              double alpha_C,
                                              double aA_cool_over_aA_heat) {
    if (!(A > 0.0 && alpha_H > 0.0 && alpha_C > 0.0 &&
          aA_cool_over_aA_heat > 0.0))
        throw DomainError("cooling_duration_constraints: arguments must be positive");
    double t_ac = 1.0 / aA_cool_over_aA_heat;
    return {t_ac, alpha_C * t_ac};
}

} // namespace uotto
