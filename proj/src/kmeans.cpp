#include "bigmeans/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bigmeans/log.hpp"

namespace bigmeans {

void LloydConfig::validate() const {
    if (max_iter < 1) {
        throw ContractError("LloydConfig: max_iter must be at least 1");
    }
    if (!(rel_tol >= 0.0) || !std::isfinite(rel_tol)) {
        throw ContractError("LloydConfig: rel_tol must be finite and nonnegative");
    }
}

namespace {

void distances_to(const DataMatrix& data, std::span<const double> center, std::vector<double>& out) {
    out.resize(data.rows());
    for (std::size_t i = 0; i < data.rows(); ++i) {
        out[i] = squared_euclidean(data.row(i), center);
    }
}

long double total_of(const std::vector<double>& v) {
    long double s = 0.0L;
    for (const double x : v) {
        s += x;
    }
    return s;
}

// Index drawn with probability proportional to weights; `total` is their sum (> 0).
std::size_t weighted_draw(const std::vector<double>& weights, long double total, Rng& rng) {
    const double u = std::uniform_real_distribution<double>(0.0, static_cast<double>(total))(rng);
    long double cum = 0.0L;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) {
            continue;
        }
        cum += weights[i];
        last_positive = i;
        if (cum > u) {
            return i;
        }
    }
    return last_positive;
}

struct Seeder {
    const DataMatrix& data;
    std::size_t n_candidates;
    Rng& rng;
    std::vector<double> min_dist;  // D^2 to the nearest chosen center
    std::vector<double> scratch;
    std::vector<double> best_scratch;

    void add_center(std::span<const double> c) {
        if (min_dist.empty()) {
            distances_to(data, c, min_dist);
            return;
        }
        for (std::size_t i = 0; i < data.rows(); ++i) {
            min_dist[i] = std::min(min_dist[i], squared_euclidean(data.row(i), c));
        }
    }

    // Returns the chosen row, or nullopt-like flag via `fallback` when all
    // remaining D^2 mass is zero (no unseen distinct point left).
    std::size_t pick(bool& fallback) {
        fallback = false;
        if (min_dist.empty()) {
            return uniform_index(rng, data.rows());
        }
        const long double total = total_of(min_dist);
        if (!(total > 0.0L)) {
            fallback = true;
            return uniform_index(rng, data.rows());
        }
        std::size_t best = 0;
        long double best_cost = std::numeric_limits<long double>::infinity();
        for (std::size_t c = 0; c < n_candidates; ++c) {
            const std::size_t idx = weighted_draw(min_dist, total, rng);
            const auto cand = data.row(idx);
            scratch.resize(data.rows());
            long double cost = 0.0L;
            for (std::size_t i = 0; i < data.rows(); ++i) {
                scratch[i] = std::min(min_dist[i], squared_euclidean(data.row(i), cand));
                cost += scratch[i];
            }
            if (cost < best_cost) {
                best_cost = cost;
                best = idx;
                best_scratch.swap(scratch);
            }
        }
        min_dist.swap(best_scratch);
        return best;
    }
};

}  // namespace

CentroidSet kmeanspp_init(const DataMatrix& data, std::size_t k, std::size_t n_candidates, Rng& rng) {
    if (data.empty()) {
        throw ContractError("kmeanspp_init: empty data");
    }
    if (k == 0) {
        throw ContractError("kmeanspp_init: k must be at least 1");
    }
    if (k > data.rows()) {
        throw ContractError("kmeanspp_init: k = " + std::to_string(k) + " exceeds point count " +
                            std::to_string(data.rows()));
    }
    if (n_candidates == 0) {
        throw ContractError("kmeanspp_init: n_candidates must be at least 1");
    }
    CentroidSet out(k, data.cols());
    out.clear_degenerate();
    Seeder seeder{data, n_candidates, rng, {}, {}, {}};
    for (std::size_t j = 0; j < k; ++j) {
        bool fallback = false;
        const std::size_t idx = seeder.pick(fallback);
        out.set_center(j, data.row(idx));
        out.set_degenerate(j, fallback);
        if (!fallback) {
            seeder.add_center(data.row(idx));
        }
    }
    return out;
}

CentroidSet kmeanspp_reseed(const DataMatrix& data, CentroidSet centroids, std::size_t n_candidates, Rng& rng) {
    if (data.empty()) {
        throw ContractError("kmeanspp_reseed: empty data");
    }
    if (centroids.dims() != data.cols()) {
        throw ContractError("kmeanspp_reseed: dimension mismatch");
    }
    if (centroids.degenerate_count() == 0) {
        throw ContractError("kmeanspp_reseed: no degenerate centroid to reseed");
    }
    if (n_candidates == 0) {
        throw ContractError("kmeanspp_reseed: n_candidates must be at least 1");
    }
    Seeder seeder{data, n_candidates, rng, {}, {}, {}};
    for (std::size_t j = 0; j < centroids.size(); ++j) {
        if (!centroids.is_degenerate(j)) {
            seeder.add_center(centroids.center(j));
        }
    }
    bool warned = false;
    for (std::size_t j = 0; j < centroids.size(); ++j) {
        if (!centroids.is_degenerate(j)) {
            continue;
        }
        bool fallback = false;
        const std::size_t idx = seeder.pick(fallback);
        centroids.set_center(j, data.row(idx));
        if (fallback) {
            if (!warned) {
                warn("kmeanspp_reseed: too few distinct points in sample, filling with uniform draws");
                warned = true;
            }
        } else {
            seeder.add_center(data.row(idx));
        }
    }
    centroids.clear_degenerate();
    return centroids;
}

LloydResult lloyd(const DataMatrix& data, const CentroidSet& initial, const LloydConfig& cfg) {
    cfg.validate();
    if (data.empty()) {
        throw ContractError("lloyd: empty data");
    }
    if (initial.size() == 0 || initial.dims() != data.cols()) {
        throw ContractError("lloyd: dimension mismatch between data and centroids");
    }
    const std::size_t k = initial.size();
    const std::size_t n = data.cols();
    const std::size_t m = data.rows();

    LloydResult res;
    res.centroids = initial;
    res.centroids.clear_degenerate();
    auto& labels = res.assignment.labels;
    labels.resize(m);

    auto assign = [&]() {
        long double f = 0.0L;
        for (std::size_t i = 0; i < m; ++i) {
            const Nearest nc = nearest_centroid(data.row(i), res.centroids);
            labels[i] = static_cast<std::uint32_t>(nc.index);
            f += nc.sqdist;
        }
        return static_cast<double>(f);
    };

    double f_prev = assign();
    res.history.push_back(f_prev);

    std::vector<long double> sums(k * n);
    std::vector<std::size_t> counts(k);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    while (res.iterations < cfg.max_iter) {
        std::fill(sums.begin(), sums.end(), 0.0L);
        std::fill(counts.begin(), counts.end(), std::size_t{0});
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t j = labels[i];
            ++counts[j];
            const auto x = data.row(i);
            for (std::size_t d = 0; d < n; ++d) {
                sums[j * n + d] += x[d];
            }
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (counts[j] == 0) {
                continue;
            }
            auto c = res.centroids.center(j);
            for (std::size_t d = 0; d < n; ++d) {
                c[d] = static_cast<double>(sums[j * n + d] / static_cast<long double>(counts[j]));
            }
        }
        ++res.iterations;
        const double f_curr = assign();
        res.history.push_back(f_curr);
        const bool converged = f_curr == 0.0 || (f_prev - f_curr) / std::max(f_curr, eps) < cfg.rel_tol;
        f_prev = f_curr;
        if (converged) {
            break;
        }
    }

    std::fill(counts.begin(), counts.end(), std::size_t{0});
    for (const auto j : labels) {
        ++counts[j];
    }
    for (std::size_t j = 0; j < k; ++j) {
        res.centroids.set_degenerate(j, counts[j] == 0);
    }
    res.objective = f_prev;
    return res;
}

}  // namespace bigmeans
