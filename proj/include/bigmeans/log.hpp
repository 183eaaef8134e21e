#pragma once

#include <string_view>

namespace bigmeans {

/// Warnings go to std::clog unless disabled (tests and --quiet turn them off).
void set_warnings_enabled(bool enabled) noexcept;
bool warnings_enabled() noexcept;
void warn(std::string_view message);

/// Unconditional progress line on std::clog.
void info(std::string_view message);

}  // namespace bigmeans
