#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Runtime invariant and measure checks. Expensive checks (measures, cover
// invariants) only run when enabled, via TW_DEBUG_ASSERT=1 or set_enabled.
// Violations are counted, never fatal, so a test run can report them all.
namespace tw::debug {

bool enabled();
void set_enabled(bool on);

void violation(const std::string& what);
inline void check(bool ok, const char* what) {
    if (!ok) violation(what);
}

std::size_t violation_count();
std::vector<std::string> violation_log();  // first few messages
void reset();

// Number of measure comparisons actually evaluated.
void count_check();
std::size_t checks_run();

}  // namespace tw::debug
