#include "bigmeans/ingest.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string_view>

#include "bigmeans/random.hpp"

namespace bigmeans {

IngestError::IngestError(const std::string& message, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

bool ends_with_gz(const std::string& path) {
    return path.size() >= 3 && path.compare(path.size() - 3, 3, ".gz") == 0;
}

std::string read_plain(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IngestError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_gzip(const std::string& path) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (f == nullptr) {
        throw IngestError("cannot open " + path);
    }
    std::string out;
    char chunk[1 << 16];
    int got = 0;
    while ((got = gzread(f, chunk, sizeof chunk)) > 0) {
        out.append(chunk, static_cast<std::size_t>(got));
    }
    const bool failed = got < 0;
    gzclose(f);
    if (failed) {
        throw IngestError("gzip decompression failed for " + path);
    }
    return out;
}

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

void split(std::string_view line, char delim, std::vector<std::string_view>& out) {
    out.clear();
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delim, start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            return;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
}

}  // namespace

DataMatrix parse_delimited(const std::string& text, const IngestSpec& spec) {
    std::vector<double> values;
    std::vector<std::string_view> fields;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::size_t line_no = 0;
    bool header_pending = spec.skip_header;

    std::string_view rest(text);
    while (!rest.empty()) {
        const std::size_t nl = rest.find('\n');
        const std::string_view raw = rest.substr(0, nl);
        rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (header_pending) {
            header_pending = false;
            continue;
        }
        split(line, spec.delimiter, fields);
        if (rows == 0) {
            if (!spec.columns.empty()) {
                for (const auto c : spec.columns) {
                    if (c >= fields.size()) {
                        throw IngestError("column " + std::to_string(c) + " does not exist (row has " +
                                              std::to_string(fields.size()) + " fields)",
                                          line_no);
                    }
                }
                cols = spec.columns.size();
            } else {
                cols = fields.size();
            }
        }
        auto take = [&](std::size_t src_col) {
            if (src_col >= fields.size()) {
                throw IngestError("row has " + std::to_string(fields.size()) + " fields, column " +
                                      std::to_string(src_col) + " missing",
                                  line_no);
            }
            const std::string_view f = fields[src_col];
            // from_chars rejects an explicit leading '+'
            const std::string_view digits = f.starts_with('+') ? f.substr(1) : f;
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
            const bool sign_ok = digits.starts_with('-') == f.starts_with('-');
            if (digits.empty() || !sign_ok || ec != std::errc{} || ptr != digits.data() + digits.size()) {
                throw IngestError("column " + std::to_string(src_col) + ": cannot parse '" + std::string(f) +
                                      "' as a number",
                                  line_no);
            }
            if (!std::isfinite(v)) {
                throw IngestError("column " + std::to_string(src_col) + ": non-finite value '" + std::string(f) +
                                      "'",
                                  line_no);
            }
            values.push_back(v);
        };
        if (spec.columns.empty()) {
            if (fields.size() != cols) {
                throw IngestError("expected " + std::to_string(cols) + " fields, found " +
                                      std::to_string(fields.size()),
                                  line_no);
            }
            for (std::size_t c = 0; c < cols; ++c) take(c);
        } else {
            for (const auto c : spec.columns) take(c);
        }
        ++rows;
    }
    if (rows == 0) {
        throw IngestError("no data rows in " + (spec.path.empty() ? std::string("input") : spec.path));
    }
    DataMatrix out(rows, cols, std::move(values));
    if (spec.normalization == Normalization::min_max) {
        normalize_min_max(out);
    }
    return out;
}

DataMatrix load(const IngestSpec& spec) {
    const std::string text = ends_with_gz(spec.path) ? read_gzip(spec.path) : read_plain(spec.path);
    return parse_delimited(text, spec);
}

void normalize_min_max(DataMatrix& data) {
    for (std::size_t d = 0; d < data.cols(); ++d) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::size_t i = 0; i < data.rows(); ++i) {
            lo = std::min(lo, data(i, d));
            hi = std::max(hi, data(i, d));
        }
        const double range = hi - lo;
        for (std::size_t i = 0; i < data.rows(); ++i) {
            data(i, d) = range > 0.0 ? std::clamp((data(i, d) - lo) / range, 0.0, 1.0) : 0.0;
        }
    }
}

SyntheticBlobs synth_blobs(std::size_t m, std::size_t n, std::size_t k, double spread, std::uint64_t seed) {
    if (k == 0 || n == 0 || m < k) {
        throw ContractError("synth_blobs: need k >= 1, n >= 1 and m >= k");
    }
    if (!(spread >= 0.0) || !std::isfinite(spread)) {
        throw ContractError("synth_blobs: spread must be finite and nonnegative");
    }
    Rng rng(seed);
    std::uniform_real_distribution<double> box(-10.0, 10.0);
    DataMatrix centers(k, n);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t d = 0; d < n; ++d) {
            centers(j, d) = box(rng);
        }
    }
    SyntheticBlobs out;
    out.points = DataMatrix(m, n);
    out.truth.resize(m);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = i % k;
        out.truth[i] = static_cast<std::uint32_t>(j);
        for (std::size_t d = 0; d < n; ++d) {
            out.points(i, d) = centers(j, d) + spread * noise(rng);
        }
    }
    out.centers = CentroidSet(std::move(centers));
    return out;
}

void write_csv(const DataMatrix& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IngestError("cannot write " + path);
    }
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (std::size_t i = 0; i < data.rows(); ++i) {
        for (std::size_t d = 0; d < data.cols(); ++d) {
            if (d) out << ',';
            out << data(i, d);
        }
        out << '\n';
    }
    if (!out) {
        throw IngestError("write failed for " + path);
    }
}

}  // namespace bigmeans
