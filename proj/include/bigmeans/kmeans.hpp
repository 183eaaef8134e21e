#pragma once

#include <cstddef>
#include <vector>

#include "bigmeans/core.hpp"
#include "bigmeans/random.hpp"

namespace bigmeans {

inline constexpr std::size_t kDefaultCandidates = 3;

struct LloydConfig {
    std::size_t max_iter = 300;
    double rel_tol = 1e-4;

    void validate() const;
};

struct LloydResult {
    CentroidSet centroids;
    double objective = 0.0;
    std::size_t iterations = 0;
    Assignment assignment;
    /// Objective of the starting centroids, then one entry per iteration.
    std::vector<double> history;
};

/**
 * Greedy K-means++ seeding. The first center is a uniform pick; every later
 * center is the best of `n_candidates` D^2-weighted draws, judged by the
 * resulting total D^2 over `data`.
 *
 * If `data` has fewer than k distinct points the remaining centers are
 * uniform draws flagged degenerate.
 */
CentroidSet kmeanspp_init(const DataMatrix& data, std::size_t k, std::size_t n_candidates, Rng& rng);

/**
 * Replace each degenerate center, in index order, with a K-means++ draw
 * whose D^2 is measured against the kept centers and those already
 * replaced. Non-degenerate centers are untouched; all flags are cleared.
 */
CentroidSet kmeanspp_reseed(const DataMatrix& data, CentroidSet centroids, std::size_t n_candidates, Rng& rng);

/**
 * Lloyd iterations from `initial`. Empty clusters keep their previous center
 * and come back flagged degenerate; no reseeding happens here.
 */
LloydResult lloyd(const DataMatrix& data, const CentroidSet& initial, const LloydConfig& cfg = {});

}  // namespace bigmeans
