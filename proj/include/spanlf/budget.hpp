#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

namespace spanlf {

struct BudgetLimits {
    std::uint64_t nodes = 100'000'000;
    double seconds = 60.0;
};

/// Shared node/time budget. Nodes are charged in batches; the wall clock is
/// only read every 2^16 nodes. Safe to charge from several threads.
class Budget {
public:
    static constexpr std::uint64_t kCheckInterval = std::uint64_t{1} << 16;

    explicit Budget(BudgetLimits limits = {})
        : limits_(limits), start_(std::chrono::steady_clock::now()) {}

    /// Charges nodes; returns false once the budget is exhausted.
    bool charge(std::uint64_t nodes = 1) {
        if (exhausted_.load(std::memory_order_relaxed)) return false;
        const std::uint64_t before = used_.fetch_add(nodes, std::memory_order_relaxed);
        const std::uint64_t after = before + nodes;
        if (after > limits_.nodes) {
            exhausted_.store(true, std::memory_order_relaxed);
            return false;
        }
        if (before / kCheckInterval != after / kCheckInterval && elapsed_seconds() > limits_.seconds) {
            exhausted_.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }

    bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
    std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
    const BudgetLimits& limits() const { return limits_; }

    double elapsed_seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    BudgetLimits limits_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::uint64_t> used_{0};
    std::atomic<bool> exhausted_{false};
};

}  // namespace spanlf
