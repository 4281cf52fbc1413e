#include "tw/debug.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>

namespace tw::debug {

namespace {

std::atomic<int> mode{-1};  // -1: not read from the environment yet
std::atomic<std::size_t> violations{0};
std::atomic<std::size_t> checks{0};
std::mutex log_mutex;
std::vector<std::string> messages;

}  // namespace

bool enabled() {
    int m = mode.load();
    if (m < 0) {
        const char* env = std::getenv("TW_DEBUG_ASSERT");
        m = env && std::string(env) == "1" ? 1 : 0;
        mode = m;
    }
    return m == 1;
}

void set_enabled(bool on) { mode = on ? 1 : 0; }

void violation(const std::string& what) {
    ++violations;
    std::lock_guard<std::mutex> lock(log_mutex);
    if (messages.size() < 32) messages.push_back(what);
    if (enabled()) std::cerr << "tw: invariant violated: " << what << '\n';
}

std::size_t violation_count() { return violations.load(); }

std::vector<std::string> violation_log() {
    std::lock_guard<std::mutex> lock(log_mutex);
    return messages;
}

void reset() {
    violations = 0;
    checks = 0;
    std::lock_guard<std::mutex> lock(log_mutex);
    messages.clear();
}

void count_check() { ++checks; }
std::size_t checks_run() { return checks.load(); }

}  // namespace tw::debug
