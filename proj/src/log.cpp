#include "bigmeans/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace bigmeans {

namespace {
std::atomic<bool> g_enabled{true};
std::mutex g_mutex;
}  // namespace

void set_warnings_enabled(bool enabled) noexcept { g_enabled.store(enabled, std::memory_order_relaxed); }

bool warnings_enabled() noexcept { return g_enabled.load(std::memory_order_relaxed); }

void warn(std::string_view message) {
    if (!warnings_enabled()) {
        return;
    }
    std::lock_guard lock(g_mutex);
    std::clog << "bigmeans: warning: " << message << '\n';
}

void info(std::string_view message) {
    std::lock_guard lock(g_mutex);
    std::clog << "bigmeans: " << message << '\n';
}

}  // namespace bigmeans
