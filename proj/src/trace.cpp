#include "bigmeans/trace.hpp"

#include <cmath>
#include <limits>

namespace bigmeans {

void RunTrace::record(double elapsed_seconds, double objective, std::size_t segment) {
    if (!events.empty() && elapsed_seconds <= events.back().elapsed_seconds) {
        elapsed_seconds = std::nextafter(events.back().elapsed_seconds, std::numeric_limits<double>::infinity());
    }
    events.push_back({elapsed_seconds, objective, segment});
}

double RunTrace::final_sample_objective() const noexcept {
    return events.empty() ? std::numeric_limits<double>::infinity() : events.back().best_sample_objective;
}

}  // namespace bigmeans
