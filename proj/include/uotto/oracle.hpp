#pragma once

#include "uotto/response.hpp"

#include <complex>
#include <string>
#include <vector>

namespace uotto {

enum class OracleMode {
    Analytic1D, // inner T-integral replaced by its closed Lorentzian result
    Full2D      // inner T-integral done numerically (authoritative path)
};

struct QuadratureConfig {
    std::vector<double> epsilon_schedule{0.05, 0.025, 0.0125};
    int n_max = 200;
    double domain_half_width = 20.0;
    double abs_tol = 1e-6;
    double rel_tol = 1e-2;
    OracleMode mode = OracleMode::Full2D;

    void validate() const;
};

struct OracleReport {
    std::string kind; // pA_plus, pA_minus, pB_plus, pB_minus, dP_AB
    ResponsePoint point;
    double closed_form;
    double oracle_value;
    double est_quadrature_error;
    double rel_deviation;
    bool pass;
};

enum class Detector { A, B };
enum class FreqSign { Plus, Minus };

// Truncated image-sum Wightman kernel of a single uniformly accelerated
// detector, in sigma_hat = sigma/T units with pole spacing 2*pi/A:
// -(1/4pi^2) sum_{|n|<=n_max} 1/(sigma_hat - i*eps - 2*pi*i*n/A)^2.
std::complex<double> wightman_single(double sigma_hat, double A, double epsilon,
                                     int n_max);

// Cross-detector kernel: parallel sinh*sinh form (real poles at +-K),
// anti-parallel cosh*cosh form (no real poles).
std::complex<double> wightman_cross(MotionKind motion, double sigma_hat,
                                    double A, double alpha, double epsilon);

OracleReport oracle_p_single(Detector det, FreqSign sign,
                             const ResponsePoint& point,
                             const QuadratureConfig& cfg);

OracleReport oracle_delta_p_ab(const ResponsePoint& point,
                               const QuadratureConfig& cfg);

struct Checkpoint {
    std::string kind;
    ResponsePoint point;
};

// 12-point set spanning P_A(+-W), P_B(+-W) and both parallel dP_AB branches.
std::vector<Checkpoint> builtin_checkpoints();

// 6 anti-parallel dP_AB checkpoints spanning alpha {0.2,1,5}, A {0.5,5},
// W {0.1,1}.
std::vector<Checkpoint> antiparallel_checkpoints();

// Evaluates checkpoints concurrently; result order matches input order.
std::vector<OracleReport> run_checkpoints(const std::vector<Checkpoint>& pts,
                                          const QuadratureConfig& cfg,
                                          unsigned workers);

} // namespace uotto
