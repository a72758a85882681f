#include "uotto/response.hpp"

#include "uotto/specfun.hpp"

#include <cmath>
#include <numbers>

namespace uotto {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLerchRelTol = 1e-12;

// The shared three-term closed form: first argument is A, second the
// effective frequency (W for detector A, alpha*W for detector B).
double response_terms(double A, double Weff) {
    double z = std::exp(-2.0 * kPi * Weff / A);
    double half = 0.5 * A;
    double sin_half = std::sin(half);
    double t1 = half * half * std::exp(-Weff) / (16.0 * sin_half * sin_half);
    double ap = 1.0 + A / (2.0 * kPi);
    double am = 1.0 - A / (2.0 * kPi);
    double d2 = lerch_phi({z, 2, ap}, kLerchRelTol) -
                lerch_phi({z, 2, am}, kLerchRelTol);
    double d1 = lerch_phi({z, 1, ap}, kLerchRelTol) -
                lerch_phi({z, 1, am}, kLerchRelTol);
    double t2 = A * A * z / (64.0 * kPi * kPi) * d2;
    double t3 = A * Weff * z / (32.0 * kPi) * d1;
    return t1 + t2 + t3;
}

} // namespace

bool near_singular_a(double A) {
    double n = std::round(A / (2.0 * kPi));
    return n >= 1.0 && std::abs(A - 2.0 * kPi * n) < kSingularARadius;
}

void validate_response_args(double A, double W) {
    if (!(A > 0.0 && W > 0.0))
        throw DomainError("response: A and W must be positive");
    if (W / A < kMinWOverA)
        throw DomainError("response: W/A below 1e-4 convergence clamp");
    if (near_singular_a(A))
        throw NearSingularA("response: A within exclusion radius of 2*pi*n");
}

double p_a(double A, double W) {
    validate_response_args(A, W);
    return response_terms(A, W);
}

double p_a_neg(double A, double W) {
    return W / 8.0 + p_a(A, W);
}

double p_b(double A, double W, double alpha) {
    if (!(alpha > 0.0)) throw DomainError("p_b: alpha must be positive");
    validate_response_args(A, W);
    return response_terms(A, alpha * W);
}

double p_b_neg(double A, double W, double alpha) {
    return alpha * W / 8.0 + p_b(A, W, alpha);
}

double delta_p_ab(const ResponsePoint& point) {
    const double A = point.A;
    const double W = point.W;
    const double alpha = point.alpha;
    if (!(alpha > 0.0)) throw DomainError("delta_p_ab: alpha must be positive");
    validate_response_args(A, W);

    if (point.motion == MotionKind::AntiParallel) return 0.0;
    if (std::abs(alpha - 1.0) < kDegenerateAlphaTol) return -W / 8.0;

    double K = kappa_hat(alpha) / A;
    double b = A / alpha;
    double pref = -alpha * b / (std::sinh(A * K) * 16.0 * K * (K * K + 1.0));
    double sins = K * std::sin(alpha * K * W) + K * std::sin(K * W);
    double coss = std::cos(alpha * K * W) - std::cos(K * W);
    if (alpha < 1.0)
        return pref * std::exp(-0.5 * (1.0 - alpha) * W) * (sins + coss);
    return pref * std::exp(-0.5 * (alpha - 1.0) * W) * (sins - coss);
}

ResponseSet response_set(const ResponsePoint& point) {
    ResponseSet r;
    r.pA_plus = p_a(point.A, point.W);
    r.pA_minus = point.W / 8.0 + r.pA_plus;
    r.pB_plus = p_b(point.A, point.W, point.alpha);
    r.pB_minus = point.alpha * point.W / 8.0 + r.pB_plus;
    r.dP_AB = delta_p_ab(point);
    return r;
}

} // namespace uotto
