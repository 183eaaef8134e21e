#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bigmeans/bigmeans.hpp"
#include "bigmeans/competitive.hpp"
#include "bigmeans/core.hpp"
#include "bigmeans/metrics.hpp"

namespace bigmeans {

enum class Algorithm { kmeans, bigmeans, competitive };

std::string to_string(Algorithm a);
/// Throws ContractError on an unknown name.
Algorithm parse_algorithm(const std::string& name);

struct BenchSpec {
    std::string dataset = "input";
    std::vector<Algorithm> algorithms;
    std::size_t n_exec = 5;
    std::uint64_t seed = 0;
    /// k, sample sizes and stopping for each algorithm; the seed fields are
    /// overwritten per execution.
    CompetitiveConfig competitive;
    BigMeansOptions bigmeans;
    LloydConfig lloyd;
    std::size_t n_candidates = kDefaultCandidates;
    /// Best known objective for (dataset, k). When absent the best objective
    /// observed in this bench stands in.
    std::optional<double> f_star;
    double success_tol = 1e-4;
};

struct BenchRun {
    std::uint64_t seed = 0;
    double objective = 0.0;
    double final_sample_objective = 0.0;
    double elapsed_seconds = 0.0;
    RunTraces traces;
    std::optional<std::size_t> s_opt;
};

struct AlgorithmBench {
    Algorithm algorithm = Algorithm::kmeans;
    std::vector<BenchRun> runs;
    std::size_t successes = 0;
    std::vector<double> epsilon;
    std::vector<std::optional<double>> baseline_times;
    Summary epsilon_summary;
    /// Over the runs that reached the baseline; empty when none did.
    std::optional<Summary> baseline_time_summary;
    std::size_t baseline_reached = 0;
};

struct BenchReport {
    std::string dataset;
    std::size_t k = 0;
    double f_star = 0.0;
    bool f_star_observed = false;
    double f_baseline = 0.0;
    double success_tol = 0.0;
    std::size_t n_exec = 0;
    std::vector<AlgorithmBench> algorithms;
};

BenchReport run_bench(const DataMatrix& data, const BenchSpec& spec);

/// Fill successes, epsilon, baseline times and summaries from the raw runs.
void finalize_report(BenchReport& report, std::optional<double> f_star);

/// Timing-dependent fields (baseline times, elapsed) are omitted when
/// `include_timing` is false so that output is reproducible.
nlohmann::json to_json(const BenchReport& report, bool include_timing);

/// Plain-text table: #Succ and Min/Median/Max of epsilon and baseline time.
std::string format_table(const BenchReport& report, bool include_timing);

}  // namespace bigmeans
