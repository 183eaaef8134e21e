#include "bigmeans/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bigmeans/core.hpp"

namespace bigmeans {

double relative_accuracy(double f, double f_star) {
    if (!(f_star > 0.0)) {
        throw ContractError("relative_accuracy: reference objective must be positive");
    }
    return 100.0 * (f - f_star) / f_star;
}

std::optional<double> baseline_time(const RunTrace& trace, double f_baseline) {
    if (trace.events.empty()) {
        throw ContractError("baseline_time: empty trace");
    }
    for (const auto& e : trace.events) {
        if (e.best_sample_objective <= f_baseline) {
            return e.elapsed_seconds;
        }
    }
    return std::nullopt;
}

std::optional<double> baseline_time(std::span<const RunTrace> worker_traces, double f_baseline) {
    std::optional<double> best;
    for (const auto& t : worker_traces) {
        if (t.events.empty()) {
            continue;
        }
        const auto tw = baseline_time(t, f_baseline);
        if (tw && (!best || *tw < *best)) {
            best = tw;
        }
    }
    return best;
}

double run_final_sample_objective(const RunTraces& run) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& t : run) {
        best = std::min(best, t.final_sample_objective());
    }
    return best;
}

double median(std::span<const double> values) {
    if (values.empty()) {
        throw ContractError("median: empty input");
    }
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double compute_baseline(std::span<const std::vector<RunTraces>> runs_per_algorithm) {
    if (runs_per_algorithm.empty()) {
        throw ContractError("compute_baseline: no algorithms");
    }
    double baseline = -std::numeric_limits<double>::infinity();
    for (const auto& runs : runs_per_algorithm) {
        if (runs.empty()) {
            throw ContractError("compute_baseline: algorithm without runs");
        }
        std::vector<double> finals;
        finals.reserve(runs.size());
        for (const auto& run : runs) {
            finals.push_back(run_final_sample_objective(run));
        }
        baseline = std::max(baseline, median(finals));
    }
    return baseline;
}

Summary summarize(std::span<const double> values) {
    if (values.empty()) {
        throw ContractError("summarize: empty input");
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return {*lo, median(values), *hi};
}

std::vector<std::size_t> count_successes(std::span<const std::vector<double>> objectives_per_algorithm,
                                         double rel_tol) {
    std::vector<std::size_t> wins(objectives_per_algorithm.size(), 0);
    if (objectives_per_algorithm.empty()) {
        return wins;
    }
    const std::size_t runs = objectives_per_algorithm.front().size();
    for (const auto& v : objectives_per_algorithm) {
        if (v.size() != runs) {
            throw ContractError("count_successes: algorithms have different run counts");
        }
    }
    for (std::size_t r = 0; r < runs; ++r) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& v : objectives_per_algorithm) {
            best = std::min(best, v[r]);
        }
        for (std::size_t a = 0; a < objectives_per_algorithm.size(); ++a) {
            if (objectives_per_algorithm[a][r] - best <= rel_tol * std::abs(best)) {
                ++wins[a];
            }
        }
    }
    return wins;
}

}  // namespace bigmeans
