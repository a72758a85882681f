#include "uotto/cycle.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace uotto {

namespace {

constexpr double kNormTol = 1e-12;

// Positivity floor for the trace conditions, relative to the W/8 scale of
// the traces: at Bell states with alpha_H = alpha_C = 1 all three traces
// are analytically zero, and bare `> 0` would promote roundoff (~1e-18)
// into a feasible verdict.
constexpr double kTracePositivityFloor = 1e-12;

double alpha_C_for(double alpha_H) {
    // Same side of 1 as alpha_H and further from it, so omega_1 < omega_2
    // stays reachable.
    if (alpha_H < 1.0) return 0.5 * alpha_H;
    if (alpha_H > 1.0) return 2.0 * alpha_H - 1.0;
    return 1.0;
}

} // namespace

void EntangledState::validate() const {
    if (std::abs(b1 * b1 + b2 * b2 - 1.0) > kNormTol)
        throw DomainError("EntangledState: b1^2 + b2^2 != 1");
}

EntangledState state_from_b2(double b2) {
    if (!(b2 > -1.0 && b2 < 1.0))
        throw DomainError("state_from_b2: b2 outside (-1, 1)");
    return {std::sqrt(1.0 - b2 * b2), b2};
}

void EngineParams::validate() const {
    state.validate();
    validate_response_args(A, W);
    if (!(alpha_H > 0.0 && alpha_C > 0.0))
        throw DomainError("EngineParams: alphas must be positive");
    bool h_one = std::abs(alpha_H - 1.0) < kDegenerateAlphaTol;
    bool c_one = std::abs(alpha_C - 1.0) < kDegenerateAlphaTol;
    if (!(h_one && c_one) && (alpha_H - 1.0) * (alpha_C - 1.0) <= 0.0)
        throw DomainError("EngineParams: alpha_C must sit on the same side of 1 as alpha_H");
}

const char* reason_name(InfeasibleReason r) {
    switch (r) {
        case InfeasibleReason::WorkNonPositive: return "WorkNonPositive";
        case InfeasibleReason::HeatInNonPositive: return "HeatInNonPositive";
        case InfeasibleReason::HeatOutNonPositive: return "HeatOutNonPositive";
        case InfeasibleReason::Omega1Invalid: return "Omega1Invalid";
    }
    return "?";
}

double trace_quantity(const ResponseSet& resp, const EntangledState& state,
                      double alpha_signed) {
    double b1sq = state.b1 * state.b1;
    double b2sq = state.b2 * state.b2;
    double cross = state.b1 * state.b2 * resp.dP_AB;
    double part_a = b2sq * resp.pA_plus - b1sq * resp.pA_minus + cross;
    double part_b = b1sq * resp.pB_plus - b2sq * resp.pB_minus + cross;
    return part_a + alpha_signed * part_b;
}

CycleAssessment assess(const EngineParams& params) {
    params.validate();
    StageAlphas sa =
        stage_alphas(params.motion, params.alpha_H, params.alpha_C, params.A);
    ResponseSet resp =
        response_set({params.A, params.W, params.alpha_H, params.motion});

    CycleAssessment out{};
    out.trace_work = trace_quantity(resp, params.state, sa.alpha_v);
    out.trace_heat_in =
        trace_quantity(resp, params.state, sa.alpha_heat_signed);
    out.trace_heat_out =
        trace_quantity(resp, params.state, sa.alpha_cool_signed);

    bool omega1_ok = false;
    try {
        double w1 = solve_omega1_hat(params.W, params.alpha_H, params.alpha_C);
        out.omega1_hat = w1;
        omega1_ok = w1 > 0.0 && w1 < params.W;
    } catch (const UnderdeterminedOmega1&) {
        // alpha_H = alpha_C = 1: any omega_1 in (0, omega_2) conserves energy.
        out.omega1_underdetermined = true;
        omega1_ok = true;
    } catch (const Error&) {
        omega1_ok = false;
    }

    double floor = kTracePositivityFloor * params.W;
    if (!(out.trace_work > floor))
        out.reasons.push_back(InfeasibleReason::WorkNonPositive);
    if (!(out.trace_heat_in > floor))
        out.reasons.push_back(InfeasibleReason::HeatInNonPositive);
    if (!(out.trace_heat_out > floor))
        out.reasons.push_back(InfeasibleReason::HeatOutNonPositive);
    if (!omega1_ok)
        out.reasons.push_back(InfeasibleReason::Omega1Invalid);
    out.feasible = out.reasons.empty();

    if (out.trace_heat_in != 0.0)
        out.eta_ratio = out.trace_work / out.trace_heat_in;
    if (out.eta_ratio && out.omega1_hat)
        out.eta_E = (1.0 - *out.omega1_hat / params.W) * *out.eta_ratio;

    if (out.omega1_hat) {
        double w1 = *out.omega1_hat;
        out.energy_residual = params.W * out.trace_heat_in -
                              w1 * out.trace_heat_out -
                              (params.W - w1) * out.trace_work;
    } else {
        out.energy_residual = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

double epsilon0(double A, double W) {
    double sum = 2.0 * p_a(A, W) + W / 8.0; // P_A(W) + P_A(-W)
    return (W / 8.0) / (2.0 * std::sqrt(2.0) * sum);
}

double trace_at_epsilon0(double A, double W) {
    double sum = 2.0 * p_a(A, W) + W / 8.0;
    double e0 = (W / 8.0) / (2.0 * std::sqrt(2.0) * sum);
    return e0 * e0 * sum;
}

std::vector<ScenarioVerdict> classify_scenarios(const ScenarioGrid& grid) {
    struct Class {
        const char* name;
        std::vector<double> b2_values;
    };
    std::vector<Class> classes{
        {"symmetric", {1.0 / std::sqrt(2.0)}},
        {"anti-symmetric", {-1.0 / std::sqrt(2.0)}},
        {"non-maximal", grid.b2_nonmax},
    };
    const MotionKind motions[2] = {MotionKind::Parallel,
                                   MotionKind::AntiParallel};

    struct Task {
        MotionKind motion;
        int cls;
        double b2, alpha_H, A, W;
    };
    std::vector<Task> tasks;
    for (MotionKind motion : motions)
        for (int c = 0; c < 3; ++c)
            for (double b2 : classes[c].b2_values)
                for (double aH : grid.alpha_H_values)
                    for (int i = 0; i < grid.steps_A; ++i)
                        for (int j = 0; j < grid.steps_W; ++j) {
                            double A = grid.A_min +
                                       (grid.A_max - grid.A_min) * i /
                                           (grid.steps_A - 1);
                            double W = grid.W_min +
                                       (grid.W_max - grid.W_min) * j /
                                           (grid.steps_W - 1);
                            tasks.push_back({motion, c, b2, aH, A, W});
                        }

    std::atomic<bool> feasible_flag[2][3] = {};
    std::atomic<long> checked[2][3] = {};
    std::atomic<long> masked[2][3] = {};
    std::atomic<std::size_t> next{0};

    unsigned workers = grid.workers ? grid.workers
                                    : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            int m = t.motion == MotionKind::Parallel ? 0 : 1;
            try {
                EngineParams p{t.motion,  t.A,
                               t.W,       t.alpha_H,
                               alpha_C_for(t.alpha_H), state_from_b2(t.b2)};
                if (assess(p).feasible)
                    feasible_flag[m][t.cls].store(true);
                checked[m][t.cls].fetch_add(1);
            } catch (const NearSingularA&) {
                masked[m][t.cls].fetch_add(1);
            } catch (const DomainError&) {
                masked[m][t.cls].fetch_add(1);
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    std::vector<ScenarioVerdict> rows;
    for (int m = 0; m < 2; ++m)
        for (int c = 0; c < 3; ++c)
            rows.push_back({motions[m], classes[c].name,
                            feasible_flag[m][c].load(), checked[m][c].load(),
                            masked[m][c].load()});
    return rows;
}

} // namespace uotto
