#pragma once

#include "uotto/cycle.hpp"

#include <map>
#include <string>
#include <vector>

namespace uotto {

// Axis names: A, W, alpha_H, alpha_C, b2.
struct ScanAxis {
    std::string name;
    std::vector<double> values;
};

struct ScanSpec {
    std::vector<ScanAxis> axes;
    std::map<std::string, double> fixed;
    MotionKind motion = MotionKind::AntiParallel;
    // Output columns, in order; subset of
    // {traces, eta_ratio, eta_E, feasible}.
    std::vector<std::string> outputs{"traces", "eta_ratio", "eta_E",
                                     "feasible"};

    void validate() const;
};

struct ScanRow {
    std::vector<double> coords; // axis values, axis order
    bool masked;                // A inside an exclusion band (or W/A clamp)
    CycleAssessment assessment; // valid when !masked
};

struct ScanResult {
    ScanSpec spec;
    std::vector<ScanRow> rows; // lexicographic over axes
};

ScanResult run_scan(const ScanSpec& spec, unsigned workers);

// Deterministic CSV: '#' metadata lines, header, then one row per grid
// point; floats printed with 9 significant digits.
std::string scan_to_csv(const ScanResult& result);

// Formats a double exactly as the CSV writer does.
std::string format_double(double v);

} // namespace uotto
