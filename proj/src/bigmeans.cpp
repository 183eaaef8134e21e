#include "bigmeans/bigmeans.hpp"

#include <string>

namespace bigmeans {

void StopCondition::validate() const {
    if (!max_samples && !time_budget_seconds) {
        throw ContractError("StopCondition: set max_samples, a time budget, or both");
    }
    if (max_samples && *max_samples == 0) {
        throw ContractError("StopCondition: max_samples must be at least 1");
    }
    if (time_budget_seconds && !(*time_budget_seconds > 0.0)) {
        throw ContractError("StopCondition: time budget must be positive");
    }
}

CentroidSet prepare_start(const DataMatrix& sample, const Incumbent& incumbent, std::size_t k,
                          std::size_t n_candidates, Rng& rng) {
    if (!incumbent.initialized) {
        return kmeanspp_init(sample, k, n_candidates, rng);
    }
    if (incumbent.centroids.degenerate_count() == 0) {
        return incumbent.centroids;
    }
    return kmeanspp_reseed(sample, incumbent.centroids, n_candidates, rng);
}

StepOutcome big_means_step(const DataMatrix& data, Incumbent& incumbent, std::size_t sample_size, std::size_t k,
                           const LloydConfig& lloyd_cfg, std::size_t n_candidates, Rng& rng) {
    if (sample_size < 1 || sample_size > data.rows()) {
        throw ContractError("big_means_step: sample size " + std::to_string(sample_size) + " outside [1, " +
                            std::to_string(data.rows()) + "]");
    }
    if (incumbent.initialized && incumbent.centroids.size() != k) {
        throw ContractError("big_means_step: incumbent has wrong centroid count");
    }
    const DataMatrix sample = draw_sample(data, sample_size, rng);
    CentroidSet start = prepare_start(sample, incumbent, k, n_candidates, rng);
    LloydResult fit = lloyd(sample, start, lloyd_cfg);

    StepOutcome out{false, fit.objective};
    if (fit.objective < incumbent.f_hat) {
        incumbent.centroids = std::move(fit.centroids);
        incumbent.f_hat = fit.objective;
        incumbent.initialized = true;
        out.improved = true;
    }
    return out;
}

BigMeansResult big_means(const DataMatrix& data, const BigMeansOptions& opts, Rng& rng) {
    opts.stop.validate();
    opts.lloyd.validate();
    if (data.empty()) {
        throw ContractError("big_means: empty data");
    }
    if (opts.k == 0 || opts.k > opts.sample_size) {
        throw ContractError("big_means: k must lie in [1, sample size]");
    }
    if (opts.sample_size > data.rows()) {
        throw ContractError("big_means: sample size " + std::to_string(opts.sample_size) +
                            " exceeds point count " + std::to_string(data.rows()));
    }

    const Stopwatch clock;
    Incumbent inc = Incumbent::empty(opts.k, data.cols());
    BigMeansResult res;
    auto keep_going = [&]() {
        if (res.samples == 0) {
            return true;
        }
        if (opts.stop.max_samples && res.samples >= *opts.stop.max_samples) {
            return false;
        }
        if (opts.stop.time_budget_seconds && clock.elapsed() >= *opts.stop.time_budget_seconds) {
            return false;
        }
        return true;
    };
    while (keep_going()) {
        big_means_step(data, inc, opts.sample_size, opts.k, opts.lloyd, opts.n_candidates, rng);
        ++res.samples;
        res.trace.record(clock.elapsed(), inc.f_hat);
    }
    res.centroids = std::move(inc.centroids);
    res.f_hat = inc.f_hat;
    res.assignment = assign_all(data, res.centroids);
    res.objective = evaluate_objective(res.centroids, data);
    res.trace.final_full_objective = res.objective;
    return res;
}

}  // namespace bigmeans
