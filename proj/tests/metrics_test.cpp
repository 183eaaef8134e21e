#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "bigmeans/metrics.hpp"
#include "bigmeans/core.hpp"

using namespace bigmeans;

namespace {

RunTrace trace_of(std::vector<std::pair<double, double>> ev) {
    RunTrace t;
    for (auto [time, f] : ev) t.record(time, f);
    return t;
}

RunTraces single(double final_objective) { return {trace_of({{1.0, final_objective}})}; }

}  // namespace

TEST(RelativeAccuracy, Examples) {
    EXPECT_EQ(relative_accuracy(123.0, 123.0), 0.0);
    EXPECT_DOUBLE_EQ(relative_accuracy(101.0, 100.0), 1.0);
    const double neg = relative_accuracy(99.93, 100.0);
    EXPECT_NEAR(neg, -0.07, 1e-12);
    EXPECT_EQ(std::round(neg * 100) / 100, -0.07);
    EXPECT_THROW(relative_accuracy(1.0, 0.0), ContractError);
    EXPECT_THROW(relative_accuracy(1.0, -5.0), ContractError);
}

TEST(BaselineTime, Examples) {
    const auto t = trace_of({{1.0, 50.0}, {2.0, 10.0}});
    EXPECT_EQ(baseline_time(t, 20.0), 2.0);
    EXPECT_EQ(baseline_time(t, 100.0), 1.0);
    EXPECT_FALSE(baseline_time(t, 5.0).has_value());
    EXPECT_THROW(baseline_time(RunTrace{}, 1.0), ContractError);
}

TEST(BaselineTime, FastestWorker) {
    const std::vector<RunTrace> ws{trace_of({{1.0, 50.0}, {3.0, 10.0}}), trace_of({{0.5, 40.0}, {2.5, 15.0}})};
    EXPECT_EQ(baseline_time(std::span<const RunTrace>(ws), 20.0), 2.5);
    EXPECT_EQ(baseline_time(std::span<const RunTrace>(ws), 12.0), 3.0);
    EXPECT_FALSE(baseline_time(std::span<const RunTrace>(ws), 1.0).has_value());
}

TEST(BaselineTime, MonotoneInBaseline) {
    std::mt19937_64 gen(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    RunTrace t;
    double f = 100.0;
    for (int i = 0; i < 50; ++i) {
        f -= u(gen);
        t.record(i * 0.1 + 0.1, f);
    }
    double prev = -1.0;
    for (double b = 50.0; b <= 101.0; b += 0.5) {
        const auto tb = baseline_time(t, b);
        if (!tb) continue;
        if (prev >= 0.0) EXPECT_LE(*tb, prev);
        prev = *tb;
    }
}

TEST(ComputeBaseline, Examples) {
    const std::vector<std::vector<RunTraces>> one{{single(10), single(20), single(30)}};
    EXPECT_EQ(compute_baseline(one), 20.0);
    const std::vector<std::vector<RunTraces>> two{{single(10), single(20), single(30)},
                                                  {single(35), single(35), single(40)}};
    EXPECT_EQ(compute_baseline(two), 35.0);
    const std::vector<std::vector<RunTraces>> even{{single(10), single(20)}};
    EXPECT_EQ(compute_baseline(even), 15.0);
    EXPECT_THROW(compute_baseline(std::vector<std::vector<RunTraces>>{}), ContractError);
}

TEST(ComputeBaseline, MultiWorkerRunUsesBestWorker) {
    const RunTraces run{trace_of({{1.0, 30.0}}), trace_of({{1.0, 12.0}})};
    EXPECT_EQ(run_final_sample_objective(run), 12.0);
}

TEST(Summarize, Examples) {
    auto s = summarize(std::vector<double>{3});
    EXPECT_EQ(s.min, 3);
    EXPECT_EQ(s.median, 3);
    EXPECT_EQ(s.max, 3);
    s = summarize(std::vector<double>{1, 2, 9});
    EXPECT_EQ(s.median, 2);
    s = summarize(std::vector<double>{10, 1, 3, 2});
    EXPECT_EQ(s.min, 1);
    EXPECT_EQ(s.median, 2.5);
    EXPECT_EQ(s.max, 10);
    EXPECT_THROW(summarize(std::vector<double>{}), ContractError);
}

TEST(Summarize, PermutationInvariantAndOrdered) {
    std::mt19937_64 gen(2);
    std::normal_distribution<double> val(0.0, 5.0);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> v(1 + trial);
        for (auto& x : v) x = val(gen);
        const auto a = summarize(v);
        std::shuffle(v.begin(), v.end(), gen);
        const auto b = summarize(v);
        EXPECT_EQ(a.min, b.min);
        EXPECT_EQ(a.median, b.median);
        EXPECT_EQ(a.max, b.max);
        EXPECT_LE(a.min, a.median);
        EXPECT_LE(a.median, a.max);
    }
}

TEST(CountSuccesses, BestPerExperiment) {
    const std::vector<std::vector<double>> obj{{10.0, 20.0, 30.0}, {10.0, 19.0, 31.0}};
    const auto wins = count_successes(obj, 1e-9);
    EXPECT_EQ(wins, (std::vector<std::size_t>{2, 2}));
    EXPECT_EQ(count_successes(obj, 0.1), (std::vector<std::size_t>{3, 3}));
}
