#include "bigmeans/competitive.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <string>
#include <thread>

#include "bigmeans/log.hpp"

namespace bigmeans {

namespace {
constexpr std::uint64_t kFinalSampleKey = ~std::uint64_t{0};

bool budget_spent(const CompetitiveConfig& cfg, const Stopwatch& clock) {
    return cfg.time_budget_seconds && clock.elapsed() >= *cfg.time_budget_seconds;
}
}  // namespace

void CompetitiveConfig::validate(std::size_t point_count) const {
    auto fail = [](const std::string& what) { throw ContractError("CompetitiveConfig: " + what); };
    if (k == 0) fail("k must be at least 1");
    if (workers == 0) fail("workers must be at least 1");
    if (passes_per_epoch == 0) fail("passes per epoch must be at least 1");
    if (epochs == 0) fail("epochs must be at least 1");
    if (n_candidates == 0) fail("n_candidates must be at least 1");
    if (s_min < 1 || s_min > s_max) fail("need 1 <= s_min <= s_max");
    if (s_max > point_count) {
        fail("s_max = " + std::to_string(s_max) + " exceeds point count " + std::to_string(point_count));
    }
    if (s_min < k) fail("s_min must be at least k so K-means++ can seed every center");
    if (time_budget_seconds && !(*time_budget_seconds > 0.0)) fail("time budget must be positive");
    lloyd.validate();
}

SampleSizeRange range_around(std::size_t sample_size, std::size_t point_count) {
    SampleSizeRange r;
    r.s_min = std::max<std::size_t>(1, (sample_size + 1) / 2);
    r.s_max = std::min(2 * sample_size, point_count);
    return r;
}

WorkerState WorkerState::fresh(std::size_t id, std::size_t k, std::size_t dims) {
    WorkerState w;
    w.id = id;
    w.incumbent = Incumbent::empty(k, dims);
    return w;
}

void ImprovementLog::append(std::size_t sample_size) {
    std::lock_guard lock(mutex_);
    entries_.push_back(sample_size);
}

std::vector<std::size_t> ImprovementLog::snapshot() const {
    std::lock_guard lock(mutex_);
    return entries_;
}

std::size_t ImprovementLog::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

std::size_t draw_sample_size(Rng& rng, std::size_t s_min, std::size_t s_max) {
    if (s_min > s_max) {
        throw ContractError("draw_sample_size: s_min > s_max");
    }
    if (s_min == s_max) {
        return s_min;
    }
    return std::uniform_int_distribution<std::size_t>(s_min, s_max)(rng);
}

void recalibrate(WorkerState& worker, std::size_t new_s, const DataMatrix& data) {
    if (new_s < 1 || new_s > data.rows()) {
        throw ContractError("recalibrate: sample size " + std::to_string(new_s) + " outside [1, " +
                            std::to_string(data.rows()) + "]");
    }
    worker.s_w = new_s;
    if (!worker.incumbent.initialized) {
        return;
    }
    const DataMatrix sample = draw_sample(data, new_s, worker.rng);
    worker.incumbent.f_hat = evaluate_objective(worker.incumbent.centroids, sample);
}

bool run_worker_epoch(WorkerState& worker, const DataMatrix& data, const CompetitiveConfig& cfg, ImprovementLog& log,
                      const Stopwatch& clock) {
    if (worker.t_w >= cfg.epochs) {
        throw ContractError("run_worker_epoch: worker already ran all epochs");
    }
    if (worker.incumbent.initialized && budget_spent(cfg, clock)) {
        return false;
    }
    const std::size_t epoch = worker.t_w;
    worker.rng = make_stream(cfg.seed, {worker.id, epoch});
    const std::size_t s = draw_sample_size(worker.rng, cfg.s_min, cfg.s_max);
    recalibrate(worker, s, data);
    if (worker.incumbent.initialized) {
        worker.trace.record(clock.elapsed(), worker.incumbent.f_hat, epoch);
    }

    bool completed = true;
    for (worker.p_w = 0; worker.p_w < cfg.passes_per_epoch; ++worker.p_w) {
        if (worker.incumbent.initialized && budget_spent(cfg, clock)) {
            completed = false;
            break;
        }
        const StepOutcome step = big_means_step(data, worker.incumbent, worker.s_w, cfg.k, cfg.lloyd,
                                                cfg.n_candidates, worker.rng);
        if (step.improved) {
            log.append(worker.s_w);
        }
        worker.trace.record(clock.elapsed(), worker.incumbent.f_hat, epoch);
    }
    ++worker.t_w;

    if (cfg.verbose) {
        std::ostringstream line;
        line << "worker " << worker.id << " epoch " << epoch << ": s_w=" << worker.s_w
             << " f_hat=" << worker.incumbent.f_hat << " passes=" << worker.p_w;
        info(line.str());
    }
    return completed;
}

bool run_worker_epoch(WorkerState& worker, const DataMatrix& data, const CompetitiveConfig& cfg, ImprovementLog& log) {
    const Stopwatch clock;
    return run_worker_epoch(worker, data, cfg, log, clock);
}

SampleSizeChoice select_s_opt(std::span<const std::size_t> entries, std::size_t s_min, std::size_t s_max) {
    if (s_min > s_max) {
        throw ContractError("select_s_opt: s_min > s_max");
    }
    if (entries.empty()) {
        warn("improvement log is empty; using the midpoint of [s_min, s_max] as s_opt");
        return {s_min + (s_max - s_min + 1) / 2, true};
    }
    // round(sum / count) half up, exact in integers
    unsigned long long sum = 0;
    for (const auto e : entries) {
        sum += e;
    }
    const unsigned long long count = entries.size();
    const auto rounded = static_cast<std::size_t>((2 * sum + count) / (2 * count));
    return {std::clamp(rounded, s_min, s_max), false};
}

FinalEvaluation final_evaluation(std::span<const WorkerState> workers, std::size_t s_opt, const DataMatrix& data,
                                 Rng& rng) {
    if (workers.empty()) {
        throw ContractError("final_evaluation: no workers");
    }
    const std::size_t s = std::clamp<std::size_t>(s_opt, 1, data.rows());
    const DataMatrix shared = draw_sample(data, s, rng);
    FinalEvaluation out;
    out.f_hat.reserve(workers.size());
    bool any = false;
    for (std::size_t w = 0; w < workers.size(); ++w) {
        const auto& inc = workers[w].incumbent;
        const double f = inc.initialized ? evaluate_objective(inc.centroids, shared)
                                         : std::numeric_limits<double>::infinity();
        out.f_hat.push_back(f);
        if (inc.initialized && (!any || f < out.f_hat[out.best_id])) {
            out.best_id = w;
            any = true;
        }
    }
    if (!any) {
        throw ContractError("final_evaluation: no worker produced centroids");
    }
    return out;
}

CompetitiveResult run_competitive(const DataMatrix& data, const CompetitiveConfig& cfg) {
    if (data.empty()) {
        throw ContractError("run_competitive: empty data");
    }
    cfg.validate(data.rows());

    std::vector<WorkerState> workers;
    workers.reserve(cfg.workers);
    for (std::size_t w = 0; w < cfg.workers; ++w) {
        workers.push_back(WorkerState::fresh(w, cfg.k, data.cols()));
    }
    ImprovementLog log;
    const Stopwatch clock;

    auto run_all_epochs = [&](WorkerState& worker) {
        while (worker.t_w < cfg.epochs) {
            if (!run_worker_epoch(worker, data, cfg, log, clock)) {
                break;
            }
        }
    };

    if (cfg.mode == ExecutionMode::sequential || cfg.workers == 1) {
        for (auto& worker : workers) {
            run_all_epochs(worker);
        }
    } else {
        std::vector<std::exception_ptr> errors(cfg.workers);
        {
            std::vector<std::jthread> threads;
            threads.reserve(cfg.workers);
            for (std::size_t w = 0; w < cfg.workers; ++w) {
                threads.emplace_back([&, w] {
                    try {
                        run_all_epochs(workers[w]);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }

    CompetitiveResult res;
    res.log = log.snapshot();
    const SampleSizeChoice choice = select_s_opt(res.log, cfg.s_min, cfg.s_max);
    res.s_opt = choice.s_opt;
    res.s_opt_fallback = choice.fallback;

    Rng final_rng = make_stream(cfg.seed, {kFinalSampleKey});
    FinalEvaluation fe = final_evaluation(workers, res.s_opt, data, final_rng);
    res.best_worker = fe.best_id;
    res.per_worker_f_hat = std::move(fe.f_hat);

    res.centroids = workers[res.best_worker].incumbent.centroids;
    res.assignment = assign_all(data, res.centroids);
    res.objective = evaluate_objective(res.centroids, data);
    for (auto& worker : workers) {
        res.worker_centroids.push_back(worker.incumbent.centroids);
        res.epochs_completed.push_back(worker.t_w);
        res.traces.push_back(std::move(worker.trace));
    }
    res.traces[res.best_worker].final_full_objective = res.objective;
    return res;
}

}  // namespace bigmeans
