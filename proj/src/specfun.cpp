#include "uotto/specfun.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace uotto {

namespace {

double ipow_inv(double x, int s) {
    // 1/x^s for s in {1,2}
    return s == 1 ? 1.0 / x : 1.0 / (x * x);
}

struct KahanSum {
    double sum = 0.0;
    double c = 0.0;
    void add(double term) {
        double y = term - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

// One iterated-Aitken (Shanks) pass over a short window of partial sums.
// Returns the most accelerated value available, or NaN if the window is
// degenerate.
double aitken_estimate(const std::array<double, 8>& s, int n) {
    std::array<double, 8> w = s;
    while (n >= 3) {
        int m = 0;
        for (int i = 0; i + 2 < n; ++i) {
            double d1 = w[i + 1] - w[i];
            double d2 = w[i + 2] - w[i + 1];
            double den = d2 - d1;
            if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
            w[m++] = w[i + 2] - d2 * d2 / den;
        }
        n = m;
    }
    return n > 0 ? w[n - 1] : std::numeric_limits<double>::quiet_NaN();
}

} // namespace

double lerch_phi(const LerchArgs& args, double rel_tol) {
    const double z = args.z;
    const double a = args.a;
    const int s = args.s;

    if (!(rel_tol >= 1e-14 && rel_tol <= 1e-3))
        throw DomainError("lerch_phi: rel_tol outside [1e-14, 1e-3]");
    if (!(z >= 0.0 && z < 1.0))
        throw DomainError("lerch_phi: z outside [0, 1)");
    if (s != 1 && s != 2)
        throw DomainError("lerch_phi: order s must be 1 or 2");
    if (a <= 0.5) {
        double r = std::round(a);
        if (r <= 0.0 && std::abs(a - r) < kLerchSingularTol)
            throw SingularOffset("lerch_phi: offset a at a non-positive integer");
    }

    // Head: the finitely many terms with k + a <= 0, summed explicitly so the
    // accelerated tail stays monotone.
    KahanSum acc;
    long k0 = 0;
    if (a <= 0.0) {
        k0 = static_cast<long>(std::floor(-a)) + 1;
        double zk = 1.0;
        for (long k = 0; k < k0; ++k) {
            acc.add(zk * ipow_inv(static_cast<double>(k) + a, s));
            zk *= z;
        }
        if (z == 0.0) return acc.sum; // only k=0 contributes
    }

    if (z == 0.0) return ipow_inv(a, s);

    const bool accelerate = z > 0.9;
    const double geom = z / (1.0 - z);
    std::array<double, 8> window{};
    int win_n = 0;
    double prev_ait = std::numeric_limits<double>::quiet_NaN();

    double zk = std::pow(z, static_cast<double>(k0));
    for (long k = k0; k < kLerchTermBudget; ++k) {
        double term = zk * ipow_inv(static_cast<double>(k) + a, s);
        acc.add(term);
        zk *= z;

        double tail_bound = std::abs(term) * geom;
        if (tail_bound <= rel_tol * std::abs(acc.sum) || tail_bound <= 1e-300)
            return acc.sum;

        if (accelerate && (k & 31) == 31) {
            if (win_n == 8) {
                for (int i = 0; i < 7; ++i) window[i] = window[i + 1];
                win_n = 7;
            }
            window[win_n++] = acc.sum;
            if (win_n >= 4) {
                double ait = aitken_estimate(window, win_n);
                if (std::isfinite(ait) && std::isfinite(prev_ait) &&
                    std::abs(ait - prev_ait) <= 0.25 * rel_tol * std::abs(ait) &&
                    std::abs(ait - acc.sum) <= tail_bound)
                    return ait;
                prev_ait = ait;
            }
        }
    }
    throw NoConvergence("lerch_phi: term budget exhausted");
}

} // namespace uotto
