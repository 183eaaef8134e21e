#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bigmeans/trace.hpp"

namespace bigmeans {

/// 100 * (f - f_star) / f_star. Negative when f beats the reference.
double relative_accuracy(double f, double f_star);

/// Earliest elapsed time at which the trace's best sample objective is at or
/// below `f_baseline`; empty when never reached.
std::optional<double> baseline_time(const RunTrace& trace, double f_baseline);

/// Multi-worker run: the fastest worker's baseline time.
std::optional<double> baseline_time(std::span<const RunTrace> worker_traces, double f_baseline);

/// All traces of one run; a single entry for a sequential run, one per worker otherwise.
using RunTraces = std::vector<RunTrace>;

/// Best final sample objective over the traces of one run.
double run_final_sample_objective(const RunTraces& run);

/**
 * Baseline sample objective: for each algorithm the median over its runs of
 * the run-final best sample objective, then the maximum of those medians.
 */
double compute_baseline(std::span<const std::vector<RunTraces>> runs_per_algorithm);

struct Summary {
    double min = 0.0;
    double median = 0.0;
    double max = 0.0;
};

/// Order statistics; an even count takes the mean of the two middle values.
Summary summarize(std::span<const double> values);

double median(std::span<const double> values);

/**
 * Per-algorithm success counts. Experiment r is a success for an algorithm
 * when its objective is within `rel_tol` (relative) of the best objective
 * any algorithm reached in experiment r.
 */
std::vector<std::size_t> count_successes(std::span<const std::vector<double>> objectives_per_algorithm,
                                         double rel_tol);

}  // namespace bigmeans
