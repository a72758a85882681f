#include "uotto/oracle.hpp"

#include "uotto/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

namespace uotto {

namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

// Inner quadrature tolerances (well below the oracle acceptance bars).
constexpr double kInnerRelTol = 1e-9;
constexpr double kInnerAbsTol = 1e-14;

double lorentzian_chi(double tau) { return 0.25 / (tau * tau + 0.25); }

// \int dT chi((T+s)/2) chi((T-s)/2), closed Lorentzian result, T_A = 1 units.
double chi_overlap_analytic(double sigma) {
    return kPi / (2.0 * (sigma * sigma + 1.0));
}

double chi_overlap_numeric(double sigma, double L) {
    auto f = [sigma](double T) -> cplx {
        return lorentzian_chi(0.5 * (T + sigma)) *
               lorentzian_chi(0.5 * (T - sigma));
    };
    auto edges = quad::make_edges(L, {-sigma, 0.0, sigma});
    return quad::integrate(f, edges, kInnerRelTol, kInnerAbsTol).real();
}

// \int dT e^{i phi T} / ((T^2 - T1^2)(T^2 - T2^2)) with T1 = sigma + i,
// T2 = -sigma + i; equals the chi-product (divided by T^4) times the phase.
cplx chi_phase_integral(double sigma, double phi, double L) {
    cplx T1sq = cplx(sigma, 1.0) * cplx(sigma, 1.0);
    cplx T2sq = cplx(-sigma, 1.0) * cplx(-sigma, 1.0);
    auto f = [=](double T) -> cplx {
        double Tsq = T * T;
        return std::exp(kI * (phi * T)) / ((Tsq - T1sq) * (Tsq - T2sq));
    };
    auto edges = quad::make_edges(L, {-sigma, 0.0, sigma});
    return quad::integrate(f, edges, kInnerRelTol, kInnerAbsTol);
}

// Quadratic (Neville) extrapolation of v(eps) to eps = 0 through the last
// three schedule points; linear through two; identity for one.
double extrapolate(const std::vector<double>& eps,
                   const std::vector<double>& v) {
    std::size_t n = eps.size();
    if (n == 1) return v[0];
    if (n == 2)
        return v[1] + (v[1] - v[0]) * eps[1] / (eps[0] - eps[1]);
    std::size_t i = n - 3;
    double e0 = eps[i], e1 = eps[i + 1], e2 = eps[i + 2];
    double p01 = ((0.0 - e1) * v[i] + (e0 - 0.0) * v[i + 1]) / (e0 - e1);
    double p12 = ((0.0 - e2) * v[i + 1] + (e1 - 0.0) * v[i + 2]) / (e1 - e2);
    return ((0.0 - e2) * p01 + (e0 - 0.0) * p12) / (e0 - e2);
}

struct EpsSeries {
    double extrapolated;
    double est_error;
};

EpsSeries finish_series(const QuadratureConfig& cfg,
                        const std::vector<double>& vals, double quad_err) {
    const auto& eps = cfg.epsilon_schedule;
    double extrap = extrapolate(eps, vals);
    double est = quad_err;
    if (vals.size() >= 2) {
        std::size_t n = vals.size();
        double lin = vals[n - 1] +
                     (vals[n - 1] - vals[n - 2]) * eps[n - 1] /
                         (eps[n - 2] - eps[n - 1]);
        est += std::abs(extrap - lin);
    }
    if (vals.size() >= 3) {
        std::size_t n = vals.size();
        double d1 = vals[n - 2] - vals[n - 3];
        double d2 = vals[n - 1] - vals[n - 2];
        if (d1 * d2 < 0.0 &&
            std::min(std::abs(d1), std::abs(d2)) >
                10.0 * (quad_err + cfg.abs_tol))
            throw QuadratureDivergence(
                "oracle: epsilon series non-monotone beyond tolerance");
    }
    return {extrap, est};
}

OracleReport make_report(std::string kind, const ResponsePoint& point,
                         double closed, const EpsSeries& s,
                         const QuadratureConfig& cfg) {
    OracleReport r;
    r.kind = std::move(kind);
    r.point = point;
    r.closed_form = closed;
    r.oracle_value = s.extrapolated;
    r.est_quadrature_error = s.est_error;
    double denom = std::abs(closed);
    r.rel_deviation = denom > 0.0
                          ? std::abs(closed - s.extrapolated) / denom
                          : std::abs(closed - s.extrapolated);
    r.pass = r.rel_deviation <= cfg.rel_tol ||
             std::abs(closed - s.extrapolated) <= cfg.abs_tol;
    return r;
}

double check_real(cplx v, double abs_tol) {
    if (std::abs(v.imag()) > 10.0 * abs_tol)
        throw QuadratureDivergence("oracle: non-negligible imaginary part");
    return v.real();
}

} // namespace

void QuadratureConfig::validate() const {
    if (epsilon_schedule.empty())
        throw DomainError("QuadratureConfig: empty epsilon schedule");
    double prev = std::numeric_limits<double>::infinity();
    for (double e : epsilon_schedule) {
        if (!(e > 0.0 && e < prev))
            throw DomainError(
                "QuadratureConfig: epsilon schedule must be strictly decreasing and positive");
        prev = e;
    }
    if (n_max < 10) throw DomainError("QuadratureConfig: n_max < 10");
    if (domain_half_width < 5.0)
        throw DomainError("QuadratureConfig: domain_half_width < 5");
    if (!(abs_tol > 0.0 && rel_tol > 0.0))
        throw DomainError("QuadratureConfig: tolerances must be positive");
}

std::complex<double> wightman_single(double sigma_hat, double A, double epsilon,
                                     int n_max) {
    cplx sum = 0.0;
    for (int n = -n_max; n <= n_max; ++n) {
        cplx d(sigma_hat, -epsilon - 2.0 * kPi * n / A);
        sum += 1.0 / (d * d);
    }
    // leading tail of the dropped image pairs: sum_{|n|>n_max} of the pair
    // approaches -2 (A/2pi)^2 sum 1/n^2 ~ -A^2/(2 pi^2 n_max)
    double tail = A * A / (2.0 * kPi * kPi * n_max);
    return -(sum - tail) / (4.0 * kPi * kPi);
}

std::complex<double> wightman_cross(MotionKind motion, double sigma_hat,
                                    double A, double alpha, double epsilon) {
    double b = A / alpha;
    cplx z(sigma_hat, -epsilon);
    if (motion == MotionKind::Parallel) {
        double K = kappa_hat(alpha) / A;
        cplx den = std::sinh(0.5 * A * (z - K)) * std::sinh(0.5 * A * (z + K));
        return -A * b / (16.0 * kPi * kPi * den);
    }
    double K = std::abs(std::log(alpha)) / A;
    cplx den = std::cosh(0.5 * A * (z - K)) * std::cosh(0.5 * A * (z + K));
    return A * b / (16.0 * kPi * kPi * den);
}

OracleReport oracle_p_single(Detector det, FreqSign sign,
                             const ResponsePoint& point,
                             const QuadratureConfig& cfg) {
    cfg.validate();
    const double A = point.A;
    const double W = point.W;
    const double alpha = point.alpha;
    const double L = cfg.domain_half_width;
    const double s = sign == FreqSign::Plus ? 1.0 : -1.0;

    // Detector B is mapped onto tau_A (tau_B = +-alpha*tau_A), so its kernel
    // is evaluated at alpha*sigma_hat with acceleration A/alpha and its
    // phase carries alpha*W. The self-response kernel is even and the
    // orientation sign flips the iota-epsilon prescription together with the
    // phase, so the result is the same for both motions.
    double phase_w, kernel_scale, prefactor, kernel_A;
    if (det == Detector::A) {
        phase_w = s * W;
        kernel_scale = 1.0;
        prefactor = 0.5;
        kernel_A = A;
    } else {
        phase_w = s * alpha * W;
        kernel_scale = alpha;
        prefactor = 0.5 * alpha * alpha;
        kernel_A = A / alpha;
    }

    std::vector<double> vals;
    double quad_err_total = 0.0;
    for (double eps : cfg.epsilon_schedule) {
        auto f = [&](double sg) -> cplx {
            cplx ker = std::conj(
                wightman_single(kernel_scale * sg, kernel_A, eps, cfg.n_max));
            double overlap = cfg.mode == OracleMode::Analytic1D
                                 ? chi_overlap_analytic(sg)
                                 : chi_overlap_numeric(sg, L);
            return prefactor * std::exp(kI * (phase_w * sg)) * ker * overlap;
        };
        double err = 0.0;
        cplx v = quad::integrate(f, quad::make_edges(L, {0.0}), 1e-7, 1e-12,
                                 &err);
        vals.push_back(check_real(v, cfg.abs_tol));
        quad_err_total += err;
    }
    EpsSeries series = finish_series(cfg, vals, quad_err_total);

    double closed;
    std::string kind;
    if (det == Detector::A) {
        closed = sign == FreqSign::Plus ? p_a(A, W) : p_a_neg(A, W);
        kind = sign == FreqSign::Plus ? "pA_plus" : "pA_minus";
    } else {
        closed = sign == FreqSign::Plus ? p_b(A, W, alpha)
                                        : p_b_neg(A, W, alpha);
        kind = sign == FreqSign::Plus ? "pB_plus" : "pB_minus";
    }
    return make_report(kind, point, closed, series, cfg);
}

OracleReport oracle_delta_p_ab(const ResponsePoint& point,
                               const QuadratureConfig& cfg) {
    cfg.validate();
    const double A = point.A;
    const double W = point.W;
    const double alpha = point.alpha;
    const double L = cfg.domain_half_width;
    const bool parallel = point.motion == MotionKind::Parallel;

    // Phase omega(tau_A - tau_B') in (T, sigma) coordinates:
    // parallel:      W(1+alpha)/2 * sigma + W(1-alpha)/2 * T
    // anti-parallel: W(1-alpha)/2 * sigma + W(1+alpha)/2 * T
    double phi_sigma = parallel ? 0.5 * W * (1.0 + alpha) : 0.5 * W * (1.0 - alpha);
    double phi_T = parallel ? 0.5 * W * (1.0 - alpha) : 0.5 * W * (1.0 + alpha);

    std::vector<double> interior{0.0};
    if (parallel) {
        double K = kappa_hat(alpha) / A;
        interior.push_back(K);
        interior.push_back(-K);
    }

    std::vector<double> vals;
    double quad_err_total = 0.0;
    for (double eps : cfg.epsilon_schedule) {
        cplx branch[2];
        for (int bi = 0; bi < 2; ++bi) {
            double s = bi == 0 ? 1.0 : -1.0;
            auto f = [&](double sg) -> cplx {
                cplx ker =
                    std::conj(wightman_cross(point.motion, sg, A, alpha, eps));
                return 0.5 * alpha * std::exp(kI * (s * phi_sigma * sg)) * ker *
                       chi_phase_integral(sg, s * phi_T, L);
            };
            double err = 0.0;
            branch[bi] = quad::integrate(f, quad::make_edges(L, interior),
                                         1e-7, 1e-12, &err);
            quad_err_total += err;
        }
        vals.push_back(check_real(branch[0] - branch[1], cfg.abs_tol));
    }
    EpsSeries series = finish_series(cfg, vals, quad_err_total);
    return make_report("dP_AB", point, delta_p_ab(point), series, cfg);
}

std::vector<Checkpoint> builtin_checkpoints() {
    using MK = MotionKind;
    return {
        {"pA_plus", {0.5, 0.2, 1.0, MK::Parallel}},
        {"pA_minus", {0.5, 0.2, 1.0, MK::Parallel}},
        {"pA_plus", {5.0, 1.0, 1.0, MK::Parallel}},
        {"pA_minus", {2.0, 0.5, 1.0, MK::Parallel}},
        {"pB_plus", {0.5, 0.2, 2.0, MK::Parallel}},
        {"pB_minus", {0.5, 0.2, 2.0, MK::Parallel}},
        {"pB_plus", {5.0, 0.2, 0.2, MK::AntiParallel}},
        {"pB_minus", {2.0, 1.0, 0.5, MK::AntiParallel}},
        {"dP_AB", {2.0, 1.0, 0.5, MK::Parallel}},
        {"dP_AB", {1.0, 0.5, 2.0, MK::Parallel}},
        {"dP_AB", {1.0, 1.0, 0.2, MK::Parallel}},
        {"dP_AB", {2.0, 0.5, 5.0, MK::Parallel}},
    };
}

std::vector<Checkpoint> antiparallel_checkpoints() {
    using MK = MotionKind;
    return {
        {"dP_AB", {0.5, 0.1, 0.2, MK::AntiParallel}},
        {"dP_AB", {5.0, 1.0, 0.2, MK::AntiParallel}},
        {"dP_AB", {0.5, 1.0, 1.0, MK::AntiParallel}},
        {"dP_AB", {5.0, 0.1, 1.0, MK::AntiParallel}},
        {"dP_AB", {0.5, 1.0, 5.0, MK::AntiParallel}},
        {"dP_AB", {5.0, 0.1, 5.0, MK::AntiParallel}},
    };
}

std::vector<OracleReport> run_checkpoints(const std::vector<Checkpoint>& pts,
                                          const QuadratureConfig& cfg,
                                          unsigned workers) {
    std::vector<OracleReport> out(pts.size());
    std::vector<std::exception_ptr> errs(pts.size());
    std::atomic<std::size_t> next{0};
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, pts.size() ? pts.size() : 1);

    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= pts.size()) return;
            try {
                const auto& cp = pts[i];
                if (cp.kind == "dP_AB")
                    out[i] = oracle_delta_p_ab(cp.point, cfg);
                else {
                    Detector det =
                        cp.kind.rfind("pA", 0) == 0 ? Detector::A : Detector::B;
                    FreqSign sign = cp.kind.find("plus") != std::string::npos
                                        ? FreqSign::Plus
                                        : FreqSign::Minus;
                    out[i] = oracle_p_single(det, sign, cp.point, cfg);
                }
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

} // namespace uotto
