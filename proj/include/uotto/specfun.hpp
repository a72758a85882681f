#pragma once

#include "uotto/errors.hpp"

namespace uotto {

// Arguments of the Lerch transcendent Phi(z, s, a) = sum_{k>=0} z^k / (k+a)^s.
// Only the parameter ranges the response formulas produce are supported:
// 0 <= z < 1, s in {1, 2}, real a (possibly negative, never a non-positive
// integer).
struct LerchArgs {
    double z;
    int s;
    double a;
};

// Tolerance below which an offset `a` counts as sitting on a non-positive
// integer pole of the series.
inline constexpr double kLerchSingularTol = 1e-9;

// Maximum number of series terms before giving up with NoConvergence.
inline constexpr long kLerchTermBudget = 10'000'000;

// Evaluates Phi(z, s, a) by compensated direct summation with a geometric
// tail bound as the stopping criterion; rel_tol must lie in [1e-14, 1e-3].
// Terms with k + a <= 0 are summed separately before the monotone tail.
// For z > 0.9 an iterated-Aitken pass on the partial sums accelerates
// convergence.
// Throws SingularOffset, NoConvergence, DomainError.
double lerch_phi(const LerchArgs& args, double rel_tol);

} // namespace uotto
