#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigmeans/core.hpp"

namespace bigmeans {

enum class Normalization { none, min_max };

struct IngestSpec {
    std::string path;
    char delimiter = ',';
    bool skip_header = false;
    /// Zero-based columns to keep, in output order; empty keeps all.
    std::vector<std::size_t> columns;
    Normalization normalization = Normalization::none;
};

/// Load failure. `line()` is the 1-based physical line, 0 when not tied to one.
class IngestError : public std::runtime_error {
  public:
    IngestError(const std::string& message, std::size_t line = 0);
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/**
 * Parse a delimited text file into a DataMatrix. Files ending in ".gz" are
 * decompressed on the fly. Blank lines are skipped; every kept row must
 * have the same number of fields and every selected field must be a finite
 * number.
 */
DataMatrix load(const IngestSpec& spec);

/// Same parser over an in-memory buffer.
DataMatrix parse_delimited(const std::string& text, const IngestSpec& spec);

/// Rescale each column to [0, 1]; constant columns become 0.
void normalize_min_max(DataMatrix& data);

struct SyntheticBlobs {
    DataMatrix points;
    CentroidSet centers;
    /// Generating blob of each point.
    std::vector<std::uint32_t> truth;
};

/**
 * k isotropic Gaussian blobs with standard deviation `spread`. Centers are
 * uniform in [-10, 10]^n; point i belongs to blob i mod k, so blob sizes
 * differ by at most one.
 */
SyntheticBlobs synth_blobs(std::size_t m, std::size_t n, std::size_t k, double spread, std::uint64_t seed);

/// Write `data` as comma-separated text, full round-trip precision.
void write_csv(const DataMatrix& data, const std::string& path);

}  // namespace bigmeans
