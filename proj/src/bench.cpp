#include "bigmeans/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

#include "bigmeans/kmeans.hpp"
#include "bigmeans/random.hpp"

namespace bigmeans {

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::kmeans: return "kmeans";
        case Algorithm::bigmeans: return "bigmeans";
        case Algorithm::competitive: return "competitive";
    }
    return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "kmeans") return Algorithm::kmeans;
    if (name == "bigmeans") return Algorithm::bigmeans;
    if (name == "competitive") return Algorithm::competitive;
    throw ContractError("unknown algorithm '" + name + "' (expected kmeans, bigmeans or competitive)");
}

namespace {

BenchRun run_once(const DataMatrix& data, const BenchSpec& spec, Algorithm algo, std::uint64_t seed) {
    BenchRun run;
    run.seed = seed;
    const Stopwatch clock;
    switch (algo) {
        case Algorithm::kmeans: {
            Rng rng(seed);
            const CentroidSet start = kmeanspp_init(data, spec.bigmeans.k, spec.n_candidates, rng);
            const LloydResult fit = lloyd(data, start, spec.lloyd);
            RunTrace trace;
            trace.record(clock.elapsed(), fit.objective);
            trace.final_full_objective = fit.objective;
            run.objective = fit.objective;
            run.traces.push_back(std::move(trace));
            break;
        }
        case Algorithm::bigmeans: {
            Rng rng(seed);
            BigMeansResult res = big_means(data, spec.bigmeans, rng);
            run.objective = res.objective;
            run.traces.push_back(std::move(res.trace));
            break;
        }
        case Algorithm::competitive: {
            CompetitiveConfig cfg = spec.competitive;
            cfg.seed = seed;
            CompetitiveResult res = run_competitive(data, cfg);
            run.objective = res.objective;
            run.s_opt = res.s_opt;
            run.traces = std::move(res.traces);
            break;
        }
    }
    run.elapsed_seconds = clock.elapsed();
    run.final_sample_objective = run_final_sample_objective(run.traces);
    return run;
}

nlohmann::json summary_json(const Summary& s) { return {{"min", s.min}, {"median", s.median}, {"max", s.max}}; }

}  // namespace

BenchReport run_bench(const DataMatrix& data, const BenchSpec& spec) {
    if (spec.algorithms.empty()) {
        throw ContractError("run_bench: no algorithms selected");
    }
    if (spec.n_exec == 0) {
        throw ContractError("run_bench: n_exec must be at least 1");
    }
    BenchReport report;
    report.dataset = spec.dataset;
    report.k = spec.bigmeans.k;
    report.success_tol = spec.success_tol;
    report.n_exec = spec.n_exec;
    for (const auto algo : spec.algorithms) {
        AlgorithmBench entry;
        entry.algorithm = algo;
        report.algorithms.push_back(std::move(entry));
    }
    for (std::size_t r = 0; r < spec.n_exec; ++r) {
        const std::uint64_t seed = derive_seed(spec.seed, {r});
        for (auto& entry : report.algorithms) {
            entry.runs.push_back(run_once(data, spec, entry.algorithm, seed));
        }
    }
    finalize_report(report, spec.f_star);
    return report;
}

void finalize_report(BenchReport& report, std::optional<double> f_star) {
    std::vector<std::vector<double>> objectives;
    std::vector<std::vector<RunTraces>> traces;
    double observed = std::numeric_limits<double>::infinity();
    for (const auto& a : report.algorithms) {
        std::vector<double> obj;
        std::vector<RunTraces> tr;
        for (const auto& run : a.runs) {
            obj.push_back(run.objective);
            tr.push_back(run.traces);
            observed = std::min(observed, run.objective);
        }
        objectives.push_back(std::move(obj));
        if (a.algorithm != Algorithm::kmeans) {
            traces.push_back(std::move(tr));
        }
    }
    // Plain K-means has no sample objective; it only sets the baseline when
    // it is the sole algorithm.
    if (traces.empty()) {
        for (const auto& a : report.algorithms) {
            std::vector<RunTraces> tr;
            for (const auto& run : a.runs) tr.push_back(run.traces);
            traces.push_back(std::move(tr));
        }
    }
    report.f_star_observed = !f_star.has_value();
    report.f_star = f_star.value_or(observed);
    report.f_baseline = compute_baseline(traces);

    const auto wins = count_successes(objectives, report.success_tol);
    for (std::size_t a = 0; a < report.algorithms.size(); ++a) {
        auto& entry = report.algorithms[a];
        entry.successes = wins[a];
        entry.epsilon.clear();
        entry.baseline_times.clear();
        std::vector<double> reached;
        for (const auto& run : entry.runs) {
            entry.epsilon.push_back(relative_accuracy(run.objective, report.f_star));
            const auto t = baseline_time(std::span<const RunTrace>(run.traces), report.f_baseline);
            entry.baseline_times.push_back(t);
            if (t) {
                reached.push_back(*t);
            }
        }
        entry.epsilon_summary = summarize(entry.epsilon);
        entry.baseline_reached = reached.size();
        entry.baseline_time_summary =
            reached.empty() ? std::nullopt : std::optional<Summary>(summarize(reached));
    }
}

nlohmann::json to_json(const BenchReport& report, bool include_timing) {
    nlohmann::json algos = nlohmann::json::array();
    for (const auto& a : report.algorithms) {
        nlohmann::json runs = nlohmann::json::array();
        for (std::size_t r = 0; r < a.runs.size(); ++r) {
            const auto& run = a.runs[r];
            nlohmann::json j = {{"seed", run.seed},
                                {"objective", run.objective},
                                {"epsilon", a.epsilon[r]},
                                {"final_sample_objective", run.final_sample_objective}};
            if (run.s_opt) {
                j["s_opt"] = *run.s_opt;
            }
            if (include_timing) {
                j["elapsed_seconds"] = run.elapsed_seconds;
                j["baseline_time"] = a.baseline_times[r] ? nlohmann::json(*a.baseline_times[r]) : nlohmann::json();
            }
            runs.push_back(std::move(j));
        }
        nlohmann::json entry = {{"name", to_string(a.algorithm)},
                                {"successes", a.successes},
                                {"runs", std::move(runs)},
                                {"epsilon", summary_json(a.epsilon_summary)}};
        if (include_timing) {
            entry["baseline_reached"] = a.baseline_reached;
            entry["baseline_time"] =
                a.baseline_time_summary ? summary_json(*a.baseline_time_summary) : nlohmann::json();
        }
        algos.push_back(std::move(entry));
    }
    return {{"schema_version", 1},
            {"kind", "bench"},
            {"dataset", report.dataset},
            {"k", report.k},
            {"n_exec", report.n_exec},
            {"f_star", report.f_star},
            {"f_star_source", report.f_star_observed ? "observed" : "reference"},
            {"f_baseline", report.f_baseline},
            {"success_tol", report.success_tol},
            {"algorithms", std::move(algos)}};
}

std::string format_table(const BenchReport& report, bool include_timing) {
    std::ostringstream out;
    out << "dataset: " << report.dataset << "  k: " << report.k << "  n_exec: " << report.n_exec << '\n';
    out << std::setprecision(10) << "f*: " << report.f_star << (report.f_star_observed ? " (best observed)" : "")
        << "  baseline f_s: " << report.f_baseline << '\n';
    out << std::left << std::setw(13) << "Algorithm" << std::right << std::setw(9) << "#Succ" << std::setw(10)
        << "eps Min" << std::setw(11) << "eps Med" << std::setw(10) << "eps Max";
    if (include_timing) {
        out << std::setw(11) << "t Min" << std::setw(11) << "t Med" << std::setw(11) << "t Max";
    }
    out << '\n' << std::fixed;
    for (const auto& a : report.algorithms) {
        const std::string succ = std::to_string(a.successes) + "/" + std::to_string(a.runs.size());
        out << std::left << std::setw(13) << to_string(a.algorithm) << std::right << std::setw(9) << succ
            << std::setprecision(2) << std::setw(10) << a.epsilon_summary.min << std::setw(11)
            << a.epsilon_summary.median << std::setw(10) << a.epsilon_summary.max;
        if (include_timing) {
            if (a.baseline_time_summary) {
                out << std::setprecision(3) << std::setw(11) << a.baseline_time_summary->min << std::setw(11)
                    << a.baseline_time_summary->median << std::setw(11) << a.baseline_time_summary->max;
            } else {
                out << std::setw(11) << "-" << std::setw(11) << "-" << std::setw(11) << "-";
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace bigmeans
