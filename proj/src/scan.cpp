#include "uotto/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

namespace uotto {

namespace {

const std::set<std::string> kParamNames{"A", "W", "alpha_H", "alpha_C", "b2"};
const std::set<std::string> kOutputNames{"traces", "eta_ratio", "eta_E",
                                         "feasible"};

EngineParams params_at(const ScanSpec& spec, const std::vector<double>& coords) {
    std::map<std::string, double> vals = spec.fixed;
    for (std::size_t i = 0; i < spec.axes.size(); ++i)
        vals[spec.axes[i].name] = coords[i];
    return {spec.motion,        vals.at("A"),       vals.at("W"),
            vals.at("alpha_H"), vals.at("alpha_C"), state_from_b2(vals.at("b2"))};
}

} // namespace

void ScanSpec::validate() const {
    std::set<std::string> seen;
    for (const auto& ax : axes) {
        if (!kParamNames.count(ax.name))
            throw DomainError("ScanSpec: unknown axis " + ax.name);
        if (ax.values.size() < 2)
            throw DomainError("ScanSpec: axis " + ax.name + " needs >= 2 values");
        if (!seen.insert(ax.name).second)
            throw DomainError("ScanSpec: duplicate axis " + ax.name);
    }
    for (const auto& [k, v] : fixed) {
        if (!kParamNames.count(k))
            throw DomainError("ScanSpec: unknown fixed parameter " + k);
        if (seen.count(k))
            throw DomainError("ScanSpec: parameter " + k + " is both axis and fixed");
        seen.insert(k);
    }
    for (const auto& name : kParamNames)
        if (!seen.count(name))
            throw DomainError("ScanSpec: parameter " + name + " unspecified");
    for (const auto& o : outputs)
        if (!kOutputNames.count(o))
            throw DomainError("ScanSpec: unknown output " + o);
}

ScanResult run_scan(const ScanSpec& spec, unsigned workers) {
    spec.validate();

    std::size_t total = 1;
    for (const auto& ax : spec.axes) total *= ax.values.size();

    ScanResult result{spec, std::vector<ScanRow>(total)};
    std::atomic<std::size_t> next{0};
    if (workers == 0) workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;

    auto work = [&]() {
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= total) return;
            // lexicographic decode, last axis fastest
            std::vector<double> coords(spec.axes.size());
            std::size_t rem = idx;
            for (std::size_t a = spec.axes.size(); a-- > 0;) {
                const auto& vals = spec.axes[a].values;
                coords[a] = vals[rem % vals.size()];
                rem /= vals.size();
            }
            ScanRow& row = result.rows[idx];
            row.coords = coords;
            try {
                row.assessment = assess(params_at(spec, coords));
                row.masked = false;
            } catch (const NearSingularA&) {
                row.masked = true;
            } catch (const DomainError&) {
                row.masked = true;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    return result;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string scan_to_csv(const ScanResult& result) {
    const ScanSpec& spec = result.spec;
    std::ostringstream os;
    os << "# uotto scan v1\n";
    os << "# motion="
       << (spec.motion == MotionKind::Parallel ? "parallel" : "antiparallel")
       << "\n";
    for (const auto& ax : spec.axes) {
        os << "# axis " << ax.name << " =";
        for (double v : ax.values) os << ' ' << format_double(v);
        os << "\n";
    }
    for (const auto& [k, v] : spec.fixed)
        os << "# fixed " << k << " = " << format_double(v) << "\n";
    os << "# mask: A within " << format_double(kSingularARadius)
       << " of 2*pi*n (n>=1), or W/A < " << format_double(kMinWOverA) << "\n";

    bool want_traces = false, want_ratio = false, want_eta = false,
         want_feasible = false;
    for (const auto& o : spec.outputs) {
        if (o == "traces") want_traces = true;
        if (o == "eta_ratio") want_ratio = true;
        if (o == "eta_E") want_eta = true;
        if (o == "feasible") want_feasible = true;
    }

    for (std::size_t i = 0; i < spec.axes.size(); ++i)
        os << (i ? "," : "") << spec.axes[i].name;
    os << ",masked";
    if (want_traces) os << ",trace_work,trace_heat_in,trace_heat_out";
    if (want_ratio) os << ",eta_ratio";
    if (want_eta) os << ",eta_E";
    if (want_feasible) os << ",feasible";
    os << "\n";

    auto opt_field = [&](const std::optional<double>& v) {
        return v ? format_double(*v) : std::string("nan");
    };
    for (const auto& row : result.rows) {
        for (std::size_t i = 0; i < row.coords.size(); ++i)
            os << (i ? "," : "") << format_double(row.coords[i]);
        os << ',' << (row.masked ? 1 : 0);
        if (row.masked) {
            int extra = (want_traces ? 3 : 0) + (want_ratio ? 1 : 0) +
                        (want_eta ? 1 : 0) + (want_feasible ? 1 : 0);
            for (int i = 0; i < extra; ++i) os << ",nan";
        } else {
            const auto& a = row.assessment;
            if (want_traces)
                os << ',' << format_double(a.trace_work) << ','
                   << format_double(a.trace_heat_in) << ','
                   << format_double(a.trace_heat_out);
            if (want_ratio) os << ',' << opt_field(a.eta_ratio);
            if (want_eta) os << ',' << opt_field(a.eta_E);
            if (want_feasible) os << ',' << (a.feasible ? 1 : 0);
        }
        os << "\n";
    }
    return os.str();
}

} // namespace uotto
