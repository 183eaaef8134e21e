// Acceptance suite: one pass/fail line per criterion.
//
//   acceptance            run everything
//   acceptance --only 3   run a single criterion (used by ctest)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bigmeans/bigmeans.hpp"
#include "bigmeans/competitive.hpp"
#include "bigmeans/ingest.hpp"
#include "bigmeans/kmeans.hpp"
#include "bigmeans/log.hpp"
#include "bigmeans/metrics.hpp"
#include "oracles.hpp"
#include "schema_check.hpp"

using namespace bigmeans;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::string fmt(double v, int precision = 6) {
    std::ostringstream ss;
    ss << std::setprecision(precision) << v;
    return ss.str();
}

double median_of(std::vector<double> v) { return median(v); }

// Round-half-up mean of positive integers, computed exactly.
std::size_t rounded_mean(const std::vector<std::size_t>& v) {
    unsigned long long sum = 0;
    for (auto x : v) sum += x;
    return static_cast<std::size_t>((2 * sum + v.size()) / (2 * v.size()));
}

Outcome lloyd_matches_brute_force() {
    std::mt19937_64 gen(20240601);
    std::uniform_int_distribution<std::size_t> pick_m(4, 12), pick_n(1, 2), pick_k(1, 3);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    double worst = 0.0;
    std::size_t failures = 0;
    for (int inst = 0; inst < 20; ++inst) {
        const std::size_t m = pick_m(gen), n = pick_n(gen), k = std::min(pick_k(gen), m);
        DataMatrix x(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t d = 0; d < n; ++d) x(i, d) = coord(gen);
        const double opt = oracle::brute_force_mssc(x, k);
        double best = std::numeric_limits<double>::infinity();
        for (std::uint64_t r = 0; r < 50; ++r) {
            Rng rng = make_stream(inst, {r});
            best = std::min(best, lloyd(x, kmeanspp_init(x, k, kDefaultCandidates, rng)).objective);
        }
        const double rel = std::abs(best - opt) / std::max(opt, 1e-300);
        worst = std::max(worst, rel);
        if (rel > 1e-9) ++failures;
    }
    return {failures == 0, "worst relative gap " + fmt(worst) + ", failing instances " + std::to_string(failures)};
}

Outcome lloyd_monotone() {
    const auto blobs = synth_blobs(1000, 5, 4, 1.0, 11);
    std::size_t violations = 0;
    double worst = 0.0;
    for (std::uint64_t r = 0; r < 1000; ++r) {
        Rng rng = make_stream(11, {r});
        const auto fit = lloyd(blobs.points, kmeanspp_init(blobs.points, 4, kDefaultCandidates, rng));
        for (std::size_t i = 1; i < fit.history.size(); ++i) {
            const double rise = (fit.history[i] - fit.history[i - 1]) / fit.history[i - 1];
            worst = std::max(worst, rise);
            if (rise > 1e-12) ++violations;
        }
    }
    return {violations == 0, "violations " + std::to_string(violations) + ", largest relative rise " + fmt(worst)};
}

Outcome kmeanspp_weighting() {
    std::vector<std::vector<double>> rows(99, {0.0});
    rows.push_back({10.0});
    const auto x = DataMatrix::from_rows(rows);
    constexpr int draws = 10000;
    int hits = 0;
    for (int i = 0; i < draws; ++i) {
        Rng rng = make_stream(3, {static_cast<std::uint64_t>(i)});
        hits += kmeanspp_init(x, 2, 1, rng).center(1)[0] == 10.0;
    }
    const double freq = static_cast<double>(hits) / draws;
    const double target = 100.0 / 199.0;
    const double sigma = std::sqrt(target * (1 - target) / draws);
    std::vector<double> pts(99, 0.0);
    pts.push_back(10.0);
    const double exact = oracle::second_pick_distribution(pts).back();
    const bool pass = std::abs(freq - target) <= 3 * sigma;
    return {pass, "frequency " + fmt(freq) + " vs target " + fmt(target) + " +/- " + fmt(3 * sigma) +
                      "; exact D^2 probability " + fmt(exact)};
}

Outcome bigmeans_incumbent() {
    const auto blobs = synth_blobs(10000, 2, 3, 1.0, 4);
    BigMeansOptions opts;
    opts.k = 3;
    opts.sample_size = 500;
    opts.stop.max_samples = 30;
    Rng rng(4);
    const auto res = big_means(blobs.points, opts, rng);
    bool monotone = res.trace.events.size() == 30;
    for (std::size_t i = 1; i < res.trace.events.size(); ++i) {
        monotone = monotone &&
                   res.trace.events[i].best_sample_objective <= res.trace.events[i - 1].best_sample_objective;
    }
    double full = std::numeric_limits<double>::infinity();
    for (std::uint64_t r = 0; r < 10; ++r) {
        Rng ref = make_stream(40, {r});
        full = std::min(full, lloyd(blobs.points, kmeanspp_init(blobs.points, 3, kDefaultCandidates, ref)).objective);
    }
    const double ratio = res.objective / full;
    return {monotone && ratio <= 1.02,
            std::string("trace non-increasing: ") + (monotone ? "yes" : "no") + ", objective ratio " + fmt(ratio)};
}

CompetitiveConfig competitive_base(std::size_t k, std::uint64_t seed) {
    CompetitiveConfig cfg;
    cfg.k = k;
    cfg.workers = 4;
    cfg.epochs = 5;
    cfg.passes_per_epoch = 10;
    cfg.s_min = 100;
    cfg.s_max = 400;
    cfg.seed = seed;
    return cfg;
}

Outcome competitive_structure() {
    const auto blobs = synth_blobs(20000, 2, 3, 1.0, 5);
    const auto res = run_competitive(blobs.points, competitive_base(3, 5));
    const bool in_range = res.s_opt >= 100 && res.s_opt <= 400;
    const bool mean_ok = !res.log.empty() && res.s_opt == std::clamp<std::size_t>(rounded_mean(res.log), 100, 400);
    const std::size_t argmin = static_cast<std::size_t>(
        std::min_element(res.per_worker_f_hat.begin(), res.per_worker_f_hat.end()) - res.per_worker_f_hat.begin());
    const bool bit_equal = res.best_worker == argmin && res.centroids == res.worker_centroids[argmin];
    const bool log_ok = res.log.size() >= 4;
    return {in_range && mean_ok && bit_equal && log_ok,
            "s_opt " + std::to_string(res.s_opt) + (mean_ok ? " = " : " != ") + "rounded mean of " +
                std::to_string(res.log.size()) + " log entries; centroids of argmin worker " +
                std::to_string(argmin) + (bit_equal ? " bit-equal" : " differ")};
}

Outcome parallel_equals_sequential() {
    const auto blobs = synth_blobs(20000, 2, 3, 1.0, 6);
    std::size_t mismatches = 0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto cfg = competitive_base(3, seed);
        cfg.mode = ExecutionMode::parallel;
        const auto par = run_competitive(blobs.points, cfg);
        cfg.mode = ExecutionMode::sequential;
        const auto seq = run_competitive(blobs.points, cfg);
        auto la = par.log, lb = seq.log;
        std::sort(la.begin(), la.end());
        std::sort(lb.begin(), lb.end());
        const bool same = par.centroids == seq.centroids && par.assignment.labels == seq.assignment.labels &&
                          par.s_opt == seq.s_opt && la == lb;
        mismatches += !same;
    }
    return {mismatches == 0, "seeds differing " + std::to_string(mismatches) + " of 5"};
}

Outcome degenerate_range() {
    const auto blobs = synth_blobs(20000, 2, 3, 1.0, 7);
    const std::size_t s = 250;
    auto cfg = competitive_base(3, 7);
    cfg.s_min = cfg.s_max = s;
    const auto res = run_competitive(blobs.points, cfg);
    const bool all_s = std::all_of(res.log.begin(), res.log.end(), [&](std::size_t v) { return v == s; });

    // One worker, one epoch: nothing but p fixed-size Big-means steps.
    auto one = cfg;
    one.workers = 1;
    one.epochs = 1;
    const auto single = run_competitive(blobs.points, one);
    BigMeansOptions opts;
    opts.k = 3;
    opts.sample_size = s;
    opts.stop.max_samples = one.passes_per_epoch;
    Rng rng = make_stream(one.seed, {0, 0});
    const auto bm = big_means(blobs.points, opts, rng);
    const bool matches = single.centroids == bm.centroids;
    return {res.s_opt == s && all_s && !res.log.empty() && matches,
            "s_opt " + std::to_string(res.s_opt) + ", log entries all " + std::to_string(s) + ": " +
                (all_s ? "yes" : "no") + ", single epoch equals fixed-size Big-means: " + (matches ? "yes" : "no")};
}

Outcome competitive_vs_bigmeans() {
    constexpr int instances = 10, runs = 7;
    const std::size_t workers = 4, epochs = 5, passes = 10, s_min = 500, s_max = 2000;
    const auto s_geo = static_cast<std::size_t>(std::llround(std::sqrt(double(s_min) * s_max)));
    int passed = 0;
    double worst = 0.0;
    for (int inst = 0; inst < instances; ++inst) {
        const auto blobs = synth_blobs(50000, 10, 10, 2.0, 800 + inst);
        std::vector<double> comp, big;
        for (int r = 0; r < runs; ++r) {
            const std::uint64_t seed = derive_seed(inst, {static_cast<std::uint64_t>(r)});
            CompetitiveConfig cfg;
            cfg.k = 10;
            cfg.workers = workers;
            cfg.epochs = epochs;
            cfg.passes_per_epoch = passes;
            cfg.s_min = s_min;
            cfg.s_max = s_max;
            cfg.seed = seed;
            comp.push_back(run_competitive(blobs.points, cfg).objective);

            BigMeansOptions opts;
            opts.k = 10;
            opts.sample_size = s_geo;
            opts.stop.max_samples = workers * epochs * passes;
            Rng rng(seed);
            big.push_back(big_means(blobs.points, opts, rng).objective);
        }
        const double ratio = median_of(comp) / median_of(big);
        worst = std::max(worst, ratio);
        passed += ratio <= 1.01;
    }
    return {passed == instances,
            std::to_string(passed) + "/" + std::to_string(instances) + " instances within 1.01, worst median ratio " +
                fmt(worst)};
}

Outcome metrics_examples() {
    int bad = 0;
    auto expect = [&](bool ok) { bad += !ok; };
    auto throws = [&](auto&& f) {
        try {
            f();
        } catch (const ContractError&) {
            return;
        }
        ++bad;
    };
    expect(relative_accuracy(100.0, 100.0) == 0.0);
    expect(relative_accuracy(101.0, 100.0) == 1.0);
    expect(std::round(relative_accuracy(99.93, 100.0) * 100) / 100 == -0.07);
    throws([] { relative_accuracy(1.0, 0.0); });

    RunTrace t;
    t.record(1.0, 50.0);
    t.record(2.0, 10.0);
    expect(baseline_time(t, 20.0) == 2.0);
    expect(baseline_time(t, 100.0) == 1.0);
    expect(!baseline_time(t, 5.0).has_value());

    auto single = [](double f) {
        RunTrace r;
        r.record(1.0, f);
        return RunTraces{r};
    };
    const std::vector<std::vector<RunTraces>> one{{single(10), single(20), single(30)}};
    expect(compute_baseline(one) == 20.0);
    const std::vector<std::vector<RunTraces>> two{{single(10), single(20), single(30)},
                                                  {single(35), single(35), single(40)}};
    expect(compute_baseline(two) == 35.0);

    const auto s1 = summarize(std::vector<double>{3});
    expect(s1.min == 3 && s1.median == 3 && s1.max == 3);
    expect(summarize(std::vector<double>{1, 2, 9}).median == 2);
    const auto s4 = summarize(std::vector<double>{10, 1, 3, 2});
    expect(s4.min == 1 && s4.median == 2.5 && s4.max == 10);
    throws([] { summarize(std::vector<double>{}); });
    return {bad == 0, std::to_string(bad) + " mismatching examples"};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int shell(const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

Outcome cli_round_trip() {
    const fs::path dir = fs::temp_directory_path() / ("bigmeans_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string bin = BIGMEANS_CLI_PATH;
    const std::string data = (dir / "blobs.csv").string();
    if (shell(bin + " synth --m 20000 --n 2 --k 3 --seed 1 --output " + data) != 0) {
        return {false, "synth failed"};
    }
    const std::string invocation = bin + " competitive --input " + data +
                                   " --k 3 --s-min 100 --s-max 400 --p 10 --T 5 --workers 4 --seed 7";
    const fs::path timed = dir / "timed.json", a = dir / "a.json", b = dir / "b.json";
    const int rc0 = shell(invocation + " --output " + timed.string());
    const int rc1 = shell(invocation + " --no-timing --output " + a.string());
    const int rc2 = shell(invocation + " --no-timing --output " + b.string());
    if (rc0 || rc1 || rc2) return {false, "CLI exited non-zero"};

    std::ifstream schema_in(BIGMEANS_SCHEMA_PATH);
    const schema_check::Validator validator(nlohmann::json::parse(schema_in));
    std::vector<std::string> errors;
    for (const auto& p : {timed, a}) {
        const auto doc = nlohmann::json::parse(slurp(p));
        for (auto& e : validator.validate(doc)) errors.push_back(p.filename().string() + " " + e);
        for (const char* key : {"centroids", "s_opt", "objective", "per_worker_f_hat"}) {
            if (!doc.contains(key)) errors.push_back(p.filename().string() + " missing " + key);
        }
    }
    const bool identical = slurp(a) == slurp(b) && !slurp(a).empty();
    fs::remove_all(dir);
    std::string detail = std::string("schema errors ") + std::to_string(errors.size()) +
                         ", repeat output byte-identical: " + (identical ? "yes" : "no");
    if (!errors.empty()) detail += " (" + errors.front() + ")";
    return {errors.empty() && identical, detail};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    app.add_option("--only", only, "Run a single criterion")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);
    set_warnings_enabled(false);

    const std::vector<Criterion> all{
        {1, "Lloyd best-of-50 matches exhaustive optimum", 10, lloyd_matches_brute_force},
        {2, "Lloyd objective non-increasing over 1000 runs", 30, lloyd_monotone},
        {3, "K-means++ second pick frequency near 100/199", 5, kmeanspp_weighting},
        {4, "Big-means incumbent monotone and within 2% of Lloyd", 60, bigmeans_incumbent},
        {5, "Competitive run structure (s_opt, argmin centroids, log)", 60, competitive_structure},
        {6, "Parallel and sequential runs identical over 5 seeds", 120, parallel_equals_sequential},
        {7, "s_min = s_max collapses to fixed-size Big-means", 60, degenerate_range},
        {8, "Competitive median within 1% of Big-means median", 600, competitive_vs_bigmeans},
        {9, "Metrics reproduce documented examples", 1, metrics_examples},
        {10, "CLI JSON is schema-valid and reproducible", 60, cli_round_trip},
    };

    int failed = 0;
    for (const auto& c : all) {
        if (only && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_seconds;
        const bool pass = out.pass && in_time;
        failed += !pass;
        std::cout << "AC" << c.id << ' ' << (pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << std::fixed
                  << std::setprecision(2) << secs << " s / " << c.limit_seconds << " s" << (in_time ? "" : " EXCEEDED")
                  << "]  " << out.detail << std::endl;
        std::cout.unsetf(std::ios::fixed);
    }
    return failed == 0 ? 0 : 1;
}
