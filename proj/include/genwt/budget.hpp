#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace genwt {

/// Thrown when an exhaustive scan would exceed the configured visit budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(std::uint64_t requested, std::uint64_t limit)
        : std::runtime_error("enumeration budget exceeded: " + std::to_string(requested) +
                             " visits requested, limit " + std::to_string(limit)),
          requested(requested), limit(limit) {}
    std::uint64_t requested;
    std::uint64_t limit;
};

// One global knob governs every exhaustive scan. Exceeding it throws;
// there is no sampling fallback. The default can be overridden with the
// GENWT_MAX_VISITS environment variable or budget_set_limit().
namespace detail {
inline std::uint64_t initial_budget() {
    if (const char* env = std::getenv("GENWT_MAX_VISITS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100'000'000ULL;
}

inline std::atomic<std::uint64_t>& budget_limit_ref() {
    static std::atomic<std::uint64_t> limit{initial_budget()};
    return limit;
}

inline std::atomic<std::uint64_t>& budget_used_ref() {
    static std::atomic<std::uint64_t> used{0};
    return used;
}
}  // namespace detail

inline void budget_set_limit(std::uint64_t limit) { detail::budget_limit_ref().store(limit); }
inline std::uint64_t budget_limit() { return detail::budget_limit_ref().load(); }
inline std::uint64_t budget_used() { return detail::budget_used_ref().load(); }
inline void budget_reset() { detail::budget_used_ref().store(0); }

/// Record n canonical-form visits; throws BudgetExceeded past the limit.
inline void budget_charge(std::uint64_t n = 1) {
    std::uint64_t total = detail::budget_used_ref().fetch_add(n, std::memory_order_relaxed) + n;
    if (total > detail::budget_limit_ref().load(std::memory_order_relaxed))
        throw BudgetExceeded(total, detail::budget_limit_ref().load());
}

/// RAII guard that swaps the budget limit and restores it on scope exit.
class BudgetScope {
  public:
    explicit BudgetScope(std::uint64_t limit) : saved_(budget_limit()) { budget_set_limit(limit); }
    ~BudgetScope() { budget_set_limit(saved_); }
    BudgetScope(const BudgetScope&) = delete;
    BudgetScope& operator=(const BudgetScope&) = delete;

  private:
    std::uint64_t saved_;
};

}  // namespace genwt
