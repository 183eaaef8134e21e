#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

namespace bigmeans {

struct TraceEvent {
    double elapsed_seconds = 0.0;
    double best_sample_objective = 0.0;
    /// Run segment the event belongs to; the objective is non-increasing
    /// inside one segment. Competitive workers open a segment per epoch.
    std::size_t segment = 0;

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Timestamped best-sample-objective trajectory of one run (or one worker).
struct RunTrace {
    std::vector<TraceEvent> events;
    std::optional<double> final_full_objective;

    /// Appends an event, nudging the timestamp forward if the clock did not
    /// advance so that elapsed times stay strictly increasing.
    void record(double elapsed_seconds, double objective, std::size_t segment = 0);

    /// Objective of the last event; +inf when empty.
    double final_sample_objective() const noexcept;
};

/// Monotonic wall clock measuring seconds since construction.
class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace bigmeans
