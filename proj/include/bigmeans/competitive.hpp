#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "bigmeans/bigmeans.hpp"
#include "bigmeans/core.hpp"
#include "bigmeans/kmeans.hpp"
#include "bigmeans/random.hpp"
#include "bigmeans/trace.hpp"

namespace bigmeans {

enum class ExecutionMode {
    parallel,    // one thread per worker
    sequential,  // workers simulated one after another on the calling thread
};

/**
 * Parameters of the competitive sample-size Big-means run. Every worker runs
 * exactly `epochs` epochs of `passes_per_epoch` Big-means passes, drawing a
 * fresh sample size from [s_min, s_max] at the start of each epoch.
 */
struct CompetitiveConfig {
    std::size_t k = 0;
    std::size_t workers = 1;
    std::size_t s_min = 0;
    std::size_t s_max = 0;
    std::size_t passes_per_epoch = 10;
    std::size_t epochs = 1;
    /// Wall-clock limit shared by all workers, checked between passes.
    std::optional<double> time_budget_seconds;
    LloydConfig lloyd;
    std::size_t n_candidates = kDefaultCandidates;
    std::uint64_t seed = 0;
    ExecutionMode mode = ExecutionMode::parallel;
    /// Print one line per worker epoch to std::clog.
    bool verbose = false;

    void validate(std::size_t point_count) const;
};

struct SampleSizeRange {
    std::size_t s_min = 0;
    std::size_t s_max = 0;
};

/// [round(s/2), min(2s, m)], the range paired with a fixed Big-means size s.
SampleSizeRange range_around(std::size_t sample_size, std::size_t point_count);

struct WorkerState {
    std::size_t id = 0;
    Incumbent incumbent;
    std::size_t s_w = 0;
    std::size_t t_w = 0;  // epochs completed
    std::size_t p_w = 0;  // passes completed in the current epoch
    Rng rng;
    RunTrace trace;

    static WorkerState fresh(std::size_t id, std::size_t k, std::size_t dims);
};

/// Shared append-only multiset of sample sizes that improved some worker.
class ImprovementLog {
  public:
    void append(std::size_t sample_size);
    std::vector<std::size_t> snapshot() const;
    std::size_t size() const;

  private:
    mutable std::mutex mutex_;
    std::vector<std::size_t> entries_;
};

/// Uniform integer in [s_min, s_max], both ends inclusive.
std::size_t draw_sample_size(Rng& rng, std::size_t s_min, std::size_t s_max);

/**
 * Switch the worker to sample size `new_s` and re-measure its incumbent on
 * a fresh sample of that size. The incumbent centroids never change; an
 * uninitialized worker only records the new size.
 */
void recalibrate(WorkerState& worker, std::size_t new_s, const DataMatrix& data);

/**
 * One epoch of one worker: reseed the worker stream from (seed, id, epoch),
 * draw s_w, recalibrate, then run up to `passes_per_epoch` Big-means passes,
 * appending s_w to `log` on every improvement.
 *
 * Returns false when the time budget cut the epoch short.
 */
bool run_worker_epoch(WorkerState& worker, const DataMatrix& data, const CompetitiveConfig& cfg, ImprovementLog& log,
                      const Stopwatch& clock);
bool run_worker_epoch(WorkerState& worker, const DataMatrix& data, const CompetitiveConfig& cfg, ImprovementLog& log);

struct SampleSizeChoice {
    std::size_t s_opt = 0;
    /// Set when the log was empty and the range midpoint was used.
    bool fallback = false;
};

/// Rounded (half up) mean of the log entries, clamped to [s_min, s_max].
SampleSizeChoice select_s_opt(std::span<const std::size_t> entries, std::size_t s_min, std::size_t s_max);

struct FinalEvaluation {
    std::size_t best_id = 0;
    std::vector<double> f_hat;
};

/// Scores every worker on one shared sample of size s_opt (clamped to m).
FinalEvaluation final_evaluation(std::span<const WorkerState> workers, std::size_t s_opt, const DataMatrix& data,
                                 Rng& rng);

struct CompetitiveResult {
    CentroidSet centroids;
    Assignment assignment;
    std::size_t s_opt = 0;
    bool s_opt_fallback = false;
    std::vector<std::size_t> log;
    std::size_t best_worker = 0;
    std::vector<double> per_worker_f_hat;
    std::vector<CentroidSet> worker_centroids;
    std::vector<std::size_t> epochs_completed;
    std::vector<RunTrace> traces;
    /// Full-data objective of `centroids`.
    double objective = 0.0;
};

CompetitiveResult run_competitive(const DataMatrix& data, const CompetitiveConfig& cfg);

}  // namespace bigmeans
