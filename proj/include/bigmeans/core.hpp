#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bigmeans {

/// Thrown when a caller breaks a documented precondition (dimension
/// mismatch, empty input, out-of-range sizes).
class ContractError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Dense row-major m x n point set. Used both for a full dataset and for a
 * sample drawn from it.
 */
class DataMatrix {
  public:
    DataMatrix() = default;
    DataMatrix(std::size_t rows, std::size_t cols);
    DataMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

    /// Build from nested rows; every row must have the same length.
    static DataMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    std::span<const double> row(std::size_t i) const noexcept {
        return {values_.data() + i * cols_, cols_};
    }
    std::span<double> row(std::size_t i) noexcept {
        return {values_.data() + i * cols_, cols_};
    }

    double operator()(std::size_t i, std::size_t d) const noexcept { return values_[i * cols_ + d]; }
    double& operator()(std::size_t i, std::size_t d) noexcept { return values_[i * cols_ + d]; }

    const std::vector<double>& values() const noexcept { return values_; }

    /// Throws ContractError if any entry is NaN or infinite.
    void check_finite() const;

    friend bool operator==(const DataMatrix&, const DataMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

/**
 * k centroid coordinates plus a degeneracy flag per centroid. A degenerate
 * centroid keeps its last coordinates and stays eligible for assignment;
 * the flag only marks it for reseeding.
 */
class CentroidSet {
  public:
    CentroidSet() = default;
    /// k centers at the origin, all flagged degenerate (uninitialized).
    CentroidSet(std::size_t k, std::size_t dims);
    explicit CentroidSet(DataMatrix centers);

    static CentroidSet from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return centers_.rows(); }
    std::size_t dims() const noexcept { return centers_.cols(); }

    std::span<const double> center(std::size_t j) const noexcept { return centers_.row(j); }
    std::span<double> center(std::size_t j) noexcept { return centers_.row(j); }
    void set_center(std::size_t j, std::span<const double> coords);

    bool is_degenerate(std::size_t j) const noexcept { return degenerate_[j] != 0; }
    void set_degenerate(std::size_t j, bool flag) noexcept { degenerate_[j] = flag ? 1 : 0; }
    void clear_degenerate() noexcept;
    std::size_t degenerate_count() const noexcept;

    const DataMatrix& matrix() const noexcept { return centers_; }

    friend bool operator==(const CentroidSet&, const CentroidSet&) = default;

  private:
    DataMatrix centers_;
    std::vector<std::uint8_t> degenerate_;
};

/// Cluster index per point.
struct Assignment {
    std::vector<std::uint32_t> labels;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct Nearest {
    std::size_t index = 0;
    double sqdist = 0.0;
};

double squared_euclidean(std::span<const double> x, std::span<const double> y);

/// Ties resolve to the lowest centroid index.
Nearest nearest_centroid(std::span<const double> x, const CentroidSet& centroids);

/**
 * Sum over all points of the squared distance to the nearest centroid.
 * Accumulated in long double; the summation order is fixed (row order) but
 * cross-build comparisons should still use a relative tolerance of 1e-9.
 */
double evaluate_objective(const CentroidSet& centroids, const DataMatrix& data);

Assignment assign_all(const DataMatrix& data, const CentroidSet& centroids);

}  // namespace bigmeans
