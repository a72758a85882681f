#pragma once

#include "uotto/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace uotto {

// Adaptive Gauss7/Kronrod15 panel integration for complex-valued integrands.
// Panels seeded from the sorted breakpoint list so regulated poles always sit
// on panel edges.
namespace quad {

inline constexpr double kG7K15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529}};

template <class F>
std::complex<double> g7k15(const F& f, double a, double b, double& err) {
    const double x0 = 0.5 * (a + b);
    const double m = b - x0;

    std::complex<double> y0 = f(x0);
    std::complex<double> g7 = kG7K15[0][1] * y0;
    std::complex<double> k15 = kG7K15[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        double mx = m * kG7K15[i][0];
        std::complex<double> yi = f(x0 + mx) + f(x0 - mx);
        k15 += kG7K15[i][2] * yi;
        g7 += kG7K15[i][1] * yi;
    }
    g7 *= m;
    k15 *= m;

    double d = std::abs(g7 - k15);
    err = 200.0 * d * std::sqrt(200.0 * d);
    return k15;
}

template <class F>
std::complex<double> integrate(const F& f, const std::vector<double>& edges,
                               double rel_tol, double abs_tol,
                               double* est_err = nullptr,
                               int max_intervals = 4000) {
    struct Seg {
        double a, b;
    };
    std::vector<Seg> stack;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (edges[i + 1] > edges[i]) stack.push_back({edges[i], edges[i + 1]});

    std::complex<double> sum = 0.0;
    double err_sum = 0.0;
    int used = static_cast<int>(stack.size());
    while (!stack.empty()) {
        Seg seg = stack.back();
        stack.pop_back();
        double err;
        std::complex<double> s = g7k15(f, seg.a, seg.b, err);
        if (err < rel_tol * std::abs(s) || err < abs_tol) {
            sum += s;
            err_sum += err;
            continue;
        }
        if (used + 2 > max_intervals)
            throw QuadratureDivergence("quad::integrate: interval budget exhausted");
        double mid = 0.5 * (seg.a + seg.b);
        stack.push_back({seg.a, mid});
        stack.push_back({mid, seg.b});
        used += 2;
    }
    if (est_err) *est_err = err_sum;
    return sum;
}

// Convenience: symmetric domain [-L, L] with interior breakpoints clamped in.
inline std::vector<double> make_edges(double L,
                                      const std::vector<double>& interior) {
    std::vector<double> edges{-L};
    for (double x : interior)
        if (x > -L && x < L) edges.push_back(x);
    edges.push_back(L);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

} // namespace quad
} // namespace uotto
