#pragma once

#include <cstddef>
#include <limits>
#include <optional>

#include "bigmeans/core.hpp"
#include "bigmeans/kmeans.hpp"
#include "bigmeans/random.hpp"
#include "bigmeans/trace.hpp"

namespace bigmeans {

/// Best centroids seen so far and their sample objective.
struct Incumbent {
    CentroidSet centroids;
    double f_hat = std::numeric_limits<double>::infinity();
    bool initialized = false;

    /// k centers all flagged degenerate, f_hat = +inf.
    static Incumbent empty(std::size_t k, std::size_t dims) {
        return {CentroidSet(k, dims), std::numeric_limits<double>::infinity(), false};
    }
};

struct StopCondition {
    std::optional<std::size_t> max_samples;
    std::optional<double> time_budget_seconds;

    /// At least one limit must be set and each set limit must be positive.
    void validate() const;
};

struct BigMeansOptions {
    std::size_t k = 0;
    std::size_t sample_size = 0;
    StopCondition stop;
    LloydConfig lloyd;
    std::size_t n_candidates = kDefaultCandidates;
};

struct StepOutcome {
    bool improved = false;
    double sample_objective = 0.0;
};

/**
 * Starting centroids for Lloyd on a fresh sample: K-means++ when the
 * incumbent is uninitialized, otherwise the incumbent with only its
 * degenerate centers reseeded on `sample`.
 */
CentroidSet prepare_start(const DataMatrix& sample, const Incumbent& incumbent, std::size_t k,
                          std::size_t n_candidates, Rng& rng);

/**
 * One Big-means iteration: draw a uniform sample of `sample_size` rows,
 * prepare starting centroids, run Lloyd, and replace the incumbent when
 * the new sample objective is strictly lower than f_hat.
 */
StepOutcome big_means_step(const DataMatrix& data, Incumbent& incumbent, std::size_t sample_size, std::size_t k,
                           const LloydConfig& lloyd_cfg, std::size_t n_candidates, Rng& rng);

struct BigMeansResult {
    CentroidSet centroids;
    Assignment assignment;
    RunTrace trace;
    double f_hat = 0.0;
    std::size_t samples = 0;
    /// Objective on the full data of the returned centroids.
    double objective = 0.0;
};

BigMeansResult big_means(const DataMatrix& data, const BigMeansOptions& opts, Rng& rng);

}  // namespace bigmeans
