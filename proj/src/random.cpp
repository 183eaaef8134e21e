#include "bigmeans/random.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace bigmeans {

std::vector<std::size_t> sample_indices(std::size_t population, std::size_t count, Rng& rng) {
    if (count > population) {
        throw ContractError("sample_indices: sample size " + std::to_string(count) + " exceeds population " +
                            std::to_string(population));
    }
    std::vector<std::size_t> out;
    out.reserve(count);
    if (count == population) {
        out.resize(count);
        std::iota(out.begin(), out.end(), std::size_t{0});
        return out;
    }
    std::unordered_set<std::size_t> taken;
    taken.reserve(count * 2);
    // Floyd: for j in [population - count, population), draw t in [0, j]
    for (std::size_t j = population - count; j < population; ++j) {
        const std::size_t t = std::uniform_int_distribution<std::size_t>(0, j)(rng);
        if (taken.insert(t).second) {
            out.push_back(t);
        } else {
            taken.insert(j);
            out.push_back(j);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

DataMatrix gather_rows(const DataMatrix& data, const std::vector<std::size_t>& indices) {
    DataMatrix out(indices.size(), data.cols());
    for (std::size_t r = 0; r < indices.size(); ++r) {
        const auto src = data.row(indices[r]);
        std::copy(src.begin(), src.end(), out.row(r).begin());
    }
    return out;
}

DataMatrix draw_sample(const DataMatrix& data, std::size_t count, Rng& rng) {
    if (count == 0) {
        throw ContractError("draw_sample: sample size must be at least 1");
    }
    if (count == data.rows()) {
        return data;
    }
    return gather_rows(data, sample_indices(data.rows(), count, rng));
}

}  // namespace bigmeans
