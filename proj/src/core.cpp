#include "bigmeans/core.hpp"

#include <algorithm>
#include <cmath>

namespace bigmeans {

DataMatrix::DataMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

DataMatrix::DataMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (values_.size() != rows_ * cols_) {
        throw ContractError("DataMatrix: value count " + std::to_string(values_.size()) +
                            " does not match " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

DataMatrix DataMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) {
        return {};
    }
    const std::size_t cols = rows.front().size();
    std::vector<double> values;
    values.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw ContractError("DataMatrix::from_rows: ragged rows");
        }
        values.insert(values.end(), r.begin(), r.end());
    }
    return {rows.size(), cols, std::move(values)};
}

void DataMatrix::check_finite() const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw ContractError("non-finite value at row " + std::to_string(i / cols_) + ", column " +
                                std::to_string(i % cols_));
        }
    }
}

CentroidSet::CentroidSet(std::size_t k, std::size_t dims) : centers_(k, dims), degenerate_(k, 1) {}

CentroidSet::CentroidSet(DataMatrix centers)
    : centers_(std::move(centers)), degenerate_(centers_.rows(), 0) {}

CentroidSet CentroidSet::from_rows(const std::vector<std::vector<double>>& rows) {
    return CentroidSet(DataMatrix::from_rows(rows));
}

void CentroidSet::set_center(std::size_t j, std::span<const double> coords) {
    if (coords.size() != dims()) {
        throw ContractError("CentroidSet::set_center: dimension mismatch");
    }
    std::copy(coords.begin(), coords.end(), centers_.row(j).begin());
}

void CentroidSet::clear_degenerate() noexcept { std::fill(degenerate_.begin(), degenerate_.end(), 0); }

std::size_t CentroidSet::degenerate_count() const noexcept {
    return static_cast<std::size_t>(std::count(degenerate_.begin(), degenerate_.end(), 1));
}

double squared_euclidean(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw ContractError("squared_euclidean: dimension mismatch (" + std::to_string(x.size()) + " vs " +
                            std::to_string(y.size()) + ")");
    }
    double sum = 0.0;
    for (std::size_t d = 0; d < x.size(); ++d) {
        const double diff = x[d] - y[d];
        sum += diff * diff;
    }
    return sum;
}

namespace {

void check_dims(const DataMatrix& data, const CentroidSet& centroids, const char* where) {
    if (centroids.size() == 0) {
        throw ContractError(std::string(where) + ": empty centroid set");
    }
    if (data.cols() != centroids.dims()) {
        throw ContractError(std::string(where) + ": data has " + std::to_string(data.cols()) +
                            " features but centroids have " + std::to_string(centroids.dims()));
    }
}

// Hot loop shared by assignment and objective; dimensions already checked.
inline Nearest nearest_unchecked(std::span<const double> x, const CentroidSet& centroids) noexcept {
    const std::size_t k = centroids.size();
    const std::size_t n = x.size();
    Nearest best{0, 0.0};
    for (std::size_t j = 0; j < k; ++j) {
        const auto c = centroids.center(j);
        double sum = 0.0;
        for (std::size_t d = 0; d < n; ++d) {
            const double diff = x[d] - c[d];
            sum += diff * diff;
        }
        if (j == 0 || sum < best.sqdist) {
            best = {j, sum};
        }
    }
    return best;
}

}  // namespace

Nearest nearest_centroid(std::span<const double> x, const CentroidSet& centroids) {
    if (centroids.size() == 0) {
        throw ContractError("nearest_centroid: empty centroid set");
    }
    if (x.size() != centroids.dims()) {
        throw ContractError("nearest_centroid: dimension mismatch");
    }
    return nearest_unchecked(x, centroids);
}

double evaluate_objective(const CentroidSet& centroids, const DataMatrix& data) {
    if (data.empty()) {
        throw ContractError("evaluate_objective: empty data");
    }
    check_dims(data, centroids, "evaluate_objective");
    long double total = 0.0L;
    for (std::size_t i = 0; i < data.rows(); ++i) {
        total += nearest_unchecked(data.row(i), centroids).sqdist;
    }
    return static_cast<double>(total);
}

Assignment assign_all(const DataMatrix& data, const CentroidSet& centroids) {
    check_dims(data, centroids, "assign_all");
    Assignment out;
    out.labels.resize(data.rows());
    for (std::size_t i = 0; i < data.rows(); ++i) {
        out.labels[i] = static_cast<std::uint32_t>(nearest_unchecked(data.row(i), centroids).index);
    }
    return out;
}

}  // namespace bigmeans
