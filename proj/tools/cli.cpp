#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bigmeans/bench.hpp"
#include "bigmeans/bigmeans.hpp"
#include "bigmeans/competitive.hpp"
#include "bigmeans/core.hpp"
#include "bigmeans/ingest.hpp"
#include "bigmeans/kmeans.hpp"
#include "bigmeans/log.hpp"
#include "bigmeans/metrics.hpp"
#include "bigmeans/random.hpp"
#include "bigmeans/trace.hpp"

namespace bigmeans::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

const CLI::Validator kAtLeastOne(
    [](std::string& v) { return v.find_first_not_of("0") == std::string::npos ? "must be at least 1" : std::string(); },
    "", "AT_LEAST_ONE");

// Bad flag values or combinations; reported like a CLI11 parse error.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::size_t default_workers() {
    if (const char* env = std::getenv("BIGMEANS_WORKERS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct Options {
    // input
    std::string input;
    std::string delimiter = ",";
    bool skip_header = false;
    std::string columns;
    std::string normalize = "none";

    // algorithm
    std::size_t k = 0;
    std::size_t s = 0;
    std::size_t s_min = 0;
    std::size_t s_max = 0;
    std::size_t p = 10;
    std::size_t T = 10;
    std::size_t workers = 1;
    std::uint64_t seed = 0;
    std::size_t max_samples = 0;
    double time_budget = 0.0;
    std::size_t n_exec = 5;
    std::size_t restarts = 1;
    std::size_t max_iter = 300;
    double tol = 1e-4;
    std::size_t candidates = kDefaultCandidates;
    bool sequential = false;

    // bench / metrics
    std::string algos = "competitive,bigmeans";
    std::string dataset;
    std::string reference;
    double f_star = 0.0;
    double success_tol = 1e-4;

    // synth
    std::size_t m = 10000;
    std::size_t n = 2;
    double spread = 1.0;

    // output
    std::string output;
    std::string format = "json";
    std::string labels;
    bool no_timing = false;
    bool verbose = false;
    bool quiet = false;

    // which optional flags were given
    bool has_s = false, has_s_min = false, has_s_max = false, has_max_samples = false, has_time_budget = false,
         has_f_star = false, has_k = false;
};

void add_input_flags(CLI::App* sub, Options& o) {
    sub->add_option("--input", o.input, "Delimited text file (.gz is decompressed)")->required();
    sub->add_option("--delimiter", o.delimiter, "Field separator, one character or 'tab'")->capture_default_str();
    sub->add_flag("--skip-header", o.skip_header, "Ignore the first non-blank line");
    sub->add_option("--columns", o.columns, "Zero-based columns to keep, e.g. 0,2,3");
    sub->add_option("--normalize", o.normalize, "Per-column scaling")
        ->check(CLI::IsMember({"none", "minmax"}))
        ->capture_default_str();
}

void add_lloyd_flags(CLI::App* sub, Options& o) {
    sub->add_option("--max-iter", o.max_iter, "Lloyd iteration cap")->check(kAtLeastOne)->capture_default_str();
    sub->add_option("--tol", o.tol, "Lloyd relative improvement tolerance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sub->add_option("--candidates", o.candidates, "K-means++ candidates per center")
        ->check(kAtLeastOne)
        ->capture_default_str();
}

void add_output_flags(CLI::App* sub, Options& o, bool with_format) {
    sub->add_option("--output", o.output, "Result file (default: standard output)");
    if (with_format) {
        sub->add_option("--format", o.format, "json, or csv for a centroid dump")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_option("--labels", o.labels, "Also write one label per line to this file");
    }
    sub->add_flag("--no-timing", o.no_timing, "Leave wall-clock fields out of the output");
    sub->add_flag("--quiet", o.quiet, "Suppress warnings");
}

void add_f_star_flags(CLI::App* sub, Options& o) {
    sub->add_option("--f-star", o.f_star, "Best known objective, enables epsilon")->check(CLI::PositiveNumber);
    sub->add_option("--reference", o.reference, "JSON file of best known objectives per (dataset, k)")
        ->check(CLI::ExistingFile);
    sub->add_option("--dataset", o.dataset, "Dataset name for reference lookup (default: input file stem)");
}

void add_competitive_flags(CLI::App* sub, Options& o) {
    sub->add_option("--s-min", o.s_min, "Smallest sample size")->check(kAtLeastOne);
    sub->add_option("--s-max", o.s_max, "Largest sample size")->check(kAtLeastOne);
    sub->add_option("--p", o.p, "Passes per epoch")->check(kAtLeastOne)->capture_default_str();
    sub->add_option("--T", o.T, "Epochs")->check(kAtLeastOne)->capture_default_str();
    sub->add_option("--workers", o.workers, "Worker count (default: $BIGMEANS_WORKERS or hardware threads)")
        ->check(kAtLeastOne);
    sub->add_flag("--sequential", o.sequential, "Run workers one after another on one thread");
    sub->add_flag("--verbose", o.verbose, "One log line per worker epoch");
}

std::vector<std::size_t> parse_columns(const std::string& text) {
    std::vector<std::size_t> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != item.size() || item.front() == '-') {
            throw UsageError("--columns: '" + item + "' is not a column index");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

char parse_delimiter(const std::string& text) {
    if (text == "tab" || text == "\\t") return '\t';
    if (text.size() != 1) throw UsageError("--delimiter: expected one character or 'tab', got '" + text + "'");
    return text[0];
}

IngestSpec ingest_spec(const Options& o) {
    IngestSpec spec;
    spec.path = o.input;
    spec.delimiter = parse_delimiter(o.delimiter);
    spec.skip_header = o.skip_header;
    spec.columns = parse_columns(o.columns);
    spec.normalization = o.normalize == "minmax" ? Normalization::min_max : Normalization::none;
    return spec;
}

LloydConfig lloyd_config(const Options& o) {
    LloydConfig cfg;
    cfg.max_iter = o.max_iter;
    cfg.rel_tol = o.tol;
    return cfg;
}

std::string dataset_name(const Options& o) {
    if (!o.dataset.empty()) return o.dataset;
    std::filesystem::path p(o.input);
    if (p.extension() == ".gz") p = p.stem();
    return p.stem().string();
}

// Reference file: {"references": [{"dataset": "...", "k": 3, "f_star": 123.4}, ...]}
std::optional<double> lookup_reference(const std::string& path, const std::string& dataset, std::size_t k) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reference file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw std::runtime_error("reference file '" + path + "': " + e.what());
    }
    if (!doc.contains("references") || !doc["references"].is_array()) {
        throw std::runtime_error("reference file '" + path + "': missing \"references\" array");
    }
    for (const auto& r : doc["references"]) {
        if (r.value("dataset", "") == dataset && r.value("k", std::size_t{0}) == k) {
            const double f = r.at("f_star").get<double>();
            if (!(f > 0)) throw std::runtime_error("reference for " + dataset + ": f_star must be positive");
            return f;
        }
    }
    return std::nullopt;
}

std::optional<double> resolve_f_star(const Options& o) {
    if (o.has_f_star) return o.f_star;
    if (o.reference.empty()) return std::nullopt;
    const std::string name = dataset_name(o);
    auto f = lookup_reference(o.reference, name, o.k);
    if (!f) warn("no reference objective for dataset '" + name + "' with k = " + std::to_string(o.k));
    return f;
}

json centroids_json(const CentroidSet& c) {
    json rows = json::array();
    for (std::size_t j = 0; j < c.size(); ++j) {
        const auto r = c.center(j);
        rows.push_back(std::vector<double>(r.begin(), r.end()));
    }
    return rows;
}

json trace_json(const RunTrace& t, bool timing) {
    json events = json::array();
    for (const auto& e : t.events) {
        json ev = {{"segment", e.segment}, {"objective", e.best_sample_objective}};
        if (timing) ev["elapsed_seconds"] = e.elapsed_seconds;
        events.push_back(std::move(ev));
    }
    return events;
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

std::string centroids_csv(const CentroidSet& c) {
    std::ostringstream ss;
    ss.precision(17);
    for (std::size_t j = 0; j < c.size(); ++j) {
        const auto r = c.center(j);
        for (std::size_t d = 0; d < r.size(); ++d) ss << (d ? "," : "") << r[d];
        ss << '\n';
    }
    return ss.str();
}

// Common result fields, then write in the requested format.
void emit(const Options& o, const std::string& command, const DataMatrix& data, json params,
          const CentroidSet& centroids, const Assignment& assignment, double objective, json extra,
          const Stopwatch& clock, std::ostream& out) {
    if (!o.labels.empty()) {
        std::ostringstream ss;
        for (const auto l : assignment.labels) ss << l << '\n';
        write_text(ss.str(), o.labels, out);
    }
    if (o.format == "csv") {
        write_text(centroids_csv(centroids), o.output, out);
        return;
    }
    json j = {{"schema_version", kSchemaVersion},
              {"command", command},
              {"input", {{"path", o.input}, {"m", data.rows()}, {"n", data.cols()}}},
              {"params", std::move(params)},
              {"k", centroids.size()},
              {"centroids", centroids_json(centroids)},
              {"labels", assignment.labels},
              {"objective", objective}};
    if (const auto f = resolve_f_star(o)) {
        j["f_star"] = *f;
        j["epsilon"] = relative_accuracy(objective, *f);
    }
    for (auto& [key, value] : extra.items()) j[key] = value;
    if (!o.no_timing) j["elapsed_seconds"] = clock.elapsed();
    write_text(j.dump() + "\n", o.output, out);
}

json base_params(const Options& o) {
    return {{"k", o.k},       {"seed", o.seed},         {"max_iter", o.max_iter},
            {"tol", o.tol},   {"candidates", o.candidates}, {"normalize", o.normalize}};
}

void check_k(const Options& o, const DataMatrix& data) {
    if (o.k > data.rows()) {
        throw UsageError("--k: " + std::to_string(o.k) + " exceeds the number of points (" +
                         std::to_string(data.rows()) + ")");
    }
}

// Fill s_min/s_max from --s when they were not given.
SampleSizeRange sample_range(const Options& o, std::size_t m) {
    SampleSizeRange r{o.s_min, o.s_max};
    if (o.has_s) {
        const auto around = range_around(o.s, m);
        if (!o.has_s_min) r.s_min = around.s_min;
        if (!o.has_s_max) r.s_max = around.s_max;
    }
    if (r.s_max > m) throw UsageError("--s-max: " + std::to_string(r.s_max) + " exceeds the number of points");
    if (r.s_min > r.s_max) throw UsageError("--s-min must not exceed --s-max");
    if (r.s_min < o.k) throw UsageError("--s-min: sample size must be at least --k");
    return r;
}

CompetitiveConfig competitive_config(const Options& o, const SampleSizeRange& r) {
    CompetitiveConfig cfg;
    cfg.k = o.k;
    cfg.workers = o.workers;
    cfg.s_min = r.s_min;
    cfg.s_max = r.s_max;
    cfg.passes_per_epoch = o.p;
    cfg.epochs = o.T;
    if (o.has_time_budget) cfg.time_budget_seconds = o.time_budget;
    cfg.lloyd = lloyd_config(o);
    cfg.n_candidates = o.candidates;
    cfg.seed = o.seed;
    cfg.mode = o.sequential ? ExecutionMode::sequential : ExecutionMode::parallel;
    cfg.verbose = o.verbose;
    return cfg;
}

// Checks that need no data.
void validate_flags(const std::string& cmd, const Options& o) {
    if (cmd == "synth") return;
    parse_delimiter(o.delimiter);
    parse_columns(o.columns);
    if (o.has_f_star && !o.reference.empty()) throw UsageError("--f-star and --reference are mutually exclusive");
    if (cmd == "bigmeans") {
        if (!o.has_s) throw UsageError("--s is required");
        if (!o.has_max_samples && !o.has_time_budget) {
            throw UsageError("bigmeans needs a stop condition: --max-samples and/or --time-budget");
        }
    }
    if (cmd == "competitive" || cmd == "bench") {
        const bool needs_range = cmd == "competitive" || o.algos.find("competitive") != std::string::npos ||
                                 o.algos.find("bigmeans") != std::string::npos;
        if (needs_range && !o.has_s && !(o.has_s_min && o.has_s_max)) {
            throw UsageError("give --s, or both --s-min and --s-max");
        }
        if (o.has_s_min && o.has_s_max && o.s_min > o.s_max) throw UsageError("--s-min must not exceed --s-max");
    }
    if (o.has_s && o.s < o.k) throw UsageError("--s: sample size must be at least --k");
}

int cmd_kmeans(const Options& o, std::ostream& out) {
    const Stopwatch clock;
    const DataMatrix data = load(ingest_spec(o));
    check_k(o, data);
    Rng rng(o.seed);
    std::optional<LloydResult> best;
    for (std::size_t r = 0; r < o.restarts; ++r) {
        LloydResult fit = lloyd(data, kmeanspp_init(data, o.k, o.candidates, rng), lloyd_config(o));
        if (!best || fit.objective < best->objective) best = std::move(fit);
    }
    json params = base_params(o);
    params["restarts"] = o.restarts;
    emit(o, "kmeans", data, std::move(params), best->centroids, best->assignment, best->objective,
         {{"iterations", best->iterations}}, clock, out);
    return kExitOk;
}

int cmd_bigmeans(const Options& o, std::ostream& out) {
    const Stopwatch clock;
    const DataMatrix data = load(ingest_spec(o));
    check_k(o, data);
    if (o.s > data.rows()) throw UsageError("--s: " + std::to_string(o.s) + " exceeds the number of points");
    BigMeansOptions opts;
    opts.k = o.k;
    opts.sample_size = o.s;
    if (o.has_max_samples) opts.stop.max_samples = o.max_samples;
    if (o.has_time_budget) opts.stop.time_budget_seconds = o.time_budget;
    opts.lloyd = lloyd_config(o);
    opts.n_candidates = o.candidates;
    Rng rng(o.seed);
    const auto res = big_means(data, opts, rng);

    json params = base_params(o);
    params["s"] = o.s;
    if (o.has_max_samples) params["max_samples"] = o.max_samples;
    if (o.has_time_budget) params["time_budget"] = o.time_budget;
    json extra = {{"f_hat", res.f_hat}, {"samples", res.samples}, {"trace", trace_json(res.trace, !o.no_timing)}};
    emit(o, "bigmeans", data, std::move(params), res.centroids, res.assignment, res.objective, std::move(extra),
         clock, out);
    return kExitOk;
}

int cmd_competitive(const Options& o, std::ostream& out) {
    const Stopwatch clock;
    const DataMatrix data = load(ingest_spec(o));
    check_k(o, data);
    const auto range = sample_range(o, data.rows());
    const auto cfg = competitive_config(o, range);
    auto res = run_competitive(data, cfg);

    json params = base_params(o);
    params["workers"] = o.workers;
    params["s_min"] = range.s_min;
    params["s_max"] = range.s_max;
    params["p"] = o.p;
    params["T"] = o.T;
    if (o.has_time_budget) params["time_budget"] = o.time_budget;

    // The log is a multiset; its order depends on thread timing.
    auto log = res.log;
    std::sort(log.begin(), log.end());
    json traces = json::array();
    for (const auto& t : res.traces) traces.push_back(trace_json(t, !o.no_timing));
    json extra = {{"s_opt", res.s_opt},
                  {"s_opt_fallback", res.s_opt_fallback},
                  {"best_worker", res.best_worker},
                  {"per_worker_f_hat", res.per_worker_f_hat},
                  {"epochs_completed", res.epochs_completed},
                  {"improvement_log", log},
                  {"traces", std::move(traces)}};
    emit(o, "competitive", data, std::move(params), res.centroids, res.assignment, res.objective, std::move(extra),
         clock, out);
    return kExitOk;
}

std::vector<Algorithm> parse_algorithms(const std::string& text) {
    std::vector<Algorithm> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_algorithm(item));
        } catch (const ContractError& e) {
            throw UsageError(std::string("--algo: ") + e.what());
        }
    }
    if (out.empty()) throw UsageError("--algo: no algorithms given");
    return out;
}

int cmd_bench(const Options& o, std::ostream& out) {
    const auto algorithms = parse_algorithms(o.algos);
    const DataMatrix data = load(ingest_spec(o));
    check_k(o, data);

    BenchSpec spec;
    spec.dataset = dataset_name(o);
    spec.algorithms = algorithms;
    spec.n_exec = o.n_exec;
    spec.seed = o.seed;
    spec.lloyd = lloyd_config(o);
    spec.n_candidates = o.candidates;
    spec.success_tol = o.success_tol;
    spec.f_star = resolve_f_star(o);

    const bool sampled = std::any_of(algorithms.begin(), algorithms.end(),
                                     [](Algorithm a) { return a != Algorithm::kmeans; });
    SampleSizeRange range{o.k, o.k};
    if (sampled) range = sample_range(o, data.rows());
    spec.competitive = competitive_config(o, range);

    // Big-means gets the competitive run's total pass budget unless told otherwise.
    spec.bigmeans.k = o.k;
    // Without --s, Big-means runs at the geometric mean of the competitive range.
    spec.bigmeans.sample_size =
        o.has_s ? o.s
                : static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(range.s_min) * range.s_max)));
    if (o.has_max_samples) {
        spec.bigmeans.stop.max_samples = o.max_samples;
    } else if (!o.has_time_budget) {
        spec.bigmeans.stop.max_samples = o.workers * o.T * o.p;
    }
    if (o.has_time_budget) spec.bigmeans.stop.time_budget_seconds = o.time_budget;
    spec.bigmeans.lloyd = spec.lloyd;
    spec.bigmeans.n_candidates = o.candidates;

    const auto report = run_bench(data, spec);
    const bool timing = !o.no_timing;
    out << format_table(report, timing);
    if (!o.output.empty()) {
        json j = to_json(report, timing);
        json traces = json::array();
        for (const auto& a : report.algorithms) {
            json per_algo = json::array();
            for (const auto& run : a.runs) {
                json per_run = json::array();
                for (const auto& t : run.traces) per_run.push_back(trace_json(t, timing));
                per_algo.push_back(std::move(per_run));
            }
            traces.push_back({{"name", to_string(a.algorithm)}, {"runs", std::move(per_algo)}});
        }
        j["traces"] = std::move(traces);
        write_text(j.dump() + "\n", o.output, out);
    }
    return kExitOk;
}

int cmd_synth(const Options& o, std::ostream& out) {
    if (o.k > o.m) throw UsageError("--k: more blobs than points");
    const auto blobs = synth_blobs(o.m, o.n, o.k, o.spread, o.seed);
    if (o.output.empty()) {
        std::ostringstream ss;
        ss.precision(17);
        for (std::size_t i = 0; i < blobs.points.rows(); ++i) {
            const auto r = blobs.points.row(i);
            for (std::size_t d = 0; d < r.size(); ++d) ss << (d ? "," : "") << r[d];
            ss << '\n';
        }
        out << ss.str();
    } else {
        write_csv(blobs.points, o.output);
    }
    if (!o.labels.empty()) {
        std::ostringstream ss;
        for (const auto l : blobs.truth) ss << l << '\n';
        write_text(ss.str(), o.labels, out);
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    o.workers = default_workers();

    CLI::App app{"MSSC clustering: K-means, Big-means and competitive sample-size Big-means"};
    app.require_subcommand(1);

    auto* km = app.add_subcommand("kmeans", "K-means++ seeded Lloyd on the full data");
    auto* bm = app.add_subcommand("bigmeans", "Big-means with a fixed sample size");
    auto* cp = app.add_subcommand("competitive", "Parallel Big-means with competitive sample-size selection");
    auto* bn = app.add_subcommand("bench", "Repeated runs with relative accuracy and baseline-time summaries");
    auto* sy = app.add_subcommand("synth", "Write a Gaussian blob dataset as CSV");

    std::vector<CLI::Option*> k_opts, s_opts, s_min_opts, s_max_opts, ms_opts, tb_opts, fs_opts;
    for (auto* sub : {km, bm, cp, bn}) {
        add_input_flags(sub, o);
        add_lloyd_flags(sub, o);
        add_output_flags(sub, o, sub != bn);
        add_f_star_flags(sub, o);
        k_opts.push_back(sub->add_option("--k", o.k, "Number of clusters")->required()->check(kAtLeastOne));
        sub->add_option("--seed", o.seed, "Master seed")->capture_default_str();
    }
    km->add_option("--restarts", o.restarts, "Keep the best of this many seeded runs")
        ->check(kAtLeastOne)
        ->capture_default_str();
    for (auto* sub : {bm, cp, bn}) {
        s_opts.push_back(sub->add_option("--s", o.s, "Sample size")->check(kAtLeastOne));
        tb_opts.push_back(
            sub->add_option("--time-budget", o.time_budget, "Wall-clock limit in seconds")->check(CLI::PositiveNumber));
    }
    for (auto* sub : {bm, bn}) {
        ms_opts.push_back(sub->add_option("--max-samples", o.max_samples, "Number of Big-means samples")
                              ->check(kAtLeastOne));
    }
    for (auto* sub : {cp, bn}) add_competitive_flags(sub, o);
    for (auto* sub : {km, bm, cp, bn}) {
        for (auto* opt : sub->get_options()) {
            if (opt->get_name() == "--s-min") s_min_opts.push_back(opt);
            if (opt->get_name() == "--s-max") s_max_opts.push_back(opt);
            if (opt->get_name() == "--f-star") fs_opts.push_back(opt);
        }
    }
    bn->add_option("--algo", o.algos, "Comma-separated: kmeans, bigmeans, competitive")->capture_default_str();
    bn->add_option("--n-exec", o.n_exec, "Executions per algorithm")->check(kAtLeastOne)->capture_default_str();
    bn->add_option("--success-tol", o.success_tol, "Relative tolerance for counting a run as a success")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    sy->add_option("--m", o.m, "Points")->check(kAtLeastOne)->capture_default_str();
    sy->add_option("--n", o.n, "Dimensions")->check(kAtLeastOne)->capture_default_str();
    sy->add_option("--k", o.k, "Blobs")->required()->check(kAtLeastOne);
    sy->add_option("--spread", o.spread, "Blob standard deviation")->check(CLI::NonNegativeNumber)->capture_default_str();
    sy->add_option("--seed", o.seed, "Seed")->capture_default_str();
    sy->add_option("--output", o.output, "CSV file (default: standard output)");
    sy->add_option("--labels", o.labels, "Also write the generating blob of each point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o_out, o_err;
        const int code = app.exit(e, o_out, o_err);
        out << o_out.str();
        err << o_err.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto given = [](const std::vector<CLI::Option*>& opts) {
        return std::any_of(opts.begin(), opts.end(), [](const CLI::Option* opt) { return opt->count() > 0; });
    };
    o.has_k = given(k_opts);
    o.has_s = given(s_opts);
    o.has_s_min = given(s_min_opts);
    o.has_s_max = given(s_max_opts);
    o.has_max_samples = given(ms_opts);
    o.has_time_budget = given(tb_opts);
    o.has_f_star = given(fs_opts);

    const std::string cmd = app.get_subcommands().front()->get_name();
    const bool prev_warn = warnings_enabled();
    if (o.quiet) set_warnings_enabled(false);
    int code = kExitOk;
    try {
        validate_flags(cmd, o);
        if (cmd == "kmeans") code = cmd_kmeans(o, out);
        else if (cmd == "bigmeans") code = cmd_bigmeans(o, out);
        else if (cmd == "competitive") code = cmd_competitive(o, out);
        else if (cmd == "bench") code = cmd_bench(o, out);
        else code = cmd_synth(o, out);
    } catch (const UsageError& e) {
        err << "bigmeans " << cmd << ": " << e.what() << "\nRun with --help for more information.\n";
        code = kExitUsage;
    } catch (const std::exception& e) {
        err << "bigmeans " << cmd << ": error: " << e.what() << '\n';
        code = kExitRuntime;
    }
    set_warnings_enabled(prev_warn);
    return code;
}

}  // namespace bigmeans::cli
