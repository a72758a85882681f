#pragma once

#include "uotto/errors.hpp"
#include "uotto/kinematics.hpp"

namespace uotto {

// One dimensionless parameter point: A = a_AH * T_AH, W = omega_2 * T_AH,
// alpha = a_AH / a_BH. Coupling constants are fixed to 1; physical couplings
// rescale every trace by c^2 without moving feasibility signs or eta ratios.
struct ResponsePoint {
    double A;
    double W;
    double alpha;
    MotionKind motion;
};

// The five response scalars the engine traces consume.
struct ResponseSet {
    double pA_plus;  // P_A(+W)
    double pA_minus; // P_A(-W) = W/8 + P_A(+W)
    double pB_plus;  // P_B(+W)
    double pB_minus; // P_B(-W) = alpha*W/8 + P_B(+W)
    double dP_AB;    // Delta P_AB (0 for anti-parallel motion)
};

// Half-width of the rejected bands around A = 2*pi*n (n >= 1), where the
// sin^-2 term and a Lerch offset pole collide and the combined limit is not
// established.
inline constexpr double kSingularARadius = 0.05;

// Minimum W/A the series evaluation is validated for.
inline constexpr double kMinWOverA = 1e-4;

// Throws NearSingularA / DomainError if (A, W) violate the point invariants.
void validate_response_args(double A, double W);

// True if A lies inside an exclusion band around some 2*pi*n, n >= 1.
bool near_singular_a(double A);

double p_a(double A, double W);
double p_a_neg(double A, double W);
double p_b(double A, double W, double alpha);
double p_b_neg(double A, double W, double alpha);

double delta_p_ab(const ResponsePoint& point);

ResponseSet response_set(const ResponsePoint& point);

} // namespace uotto
