#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "ltt/errors.hpp"

namespace ltt {

// Caps for the exhaustive searches (trade enumeration, cover enumeration,
// smallest-critical-set search). Defaults are generous for the orders these
// searches are meant for (n <= 6 or so); they exist so a hostile input fails
// loudly instead of hanging.
struct SearchBudget {
    std::uint64_t node_limit = 200'000'000;  // search-tree nodes
    std::uint64_t time_limit_ms = 600'000;   // wall clock
    int cell_cap = 64;                       // max host cells for exhaustive subset searches

    static SearchBudget unlimited() {
        SearchBudget b;
        b.node_limit = UINT64_MAX;
        b.time_limit_ms = UINT64_MAX;
        b.cell_cap = 1 << 20;
        return b;
    }
};

// Shared countdown used inside the search loops. Checks the clock only every
// few thousand nodes to keep the hot path cheap.
class BudgetMeter {
public:
    explicit BudgetMeter(const SearchBudget& budget, std::string what)
        : budget_(budget), what_(std::move(what)),
          start_(std::chrono::steady_clock::now()) {}

    void tick() {
        if (++nodes_ > budget_.node_limit)
            throw BudgetExceededError(what_ + ": node limit " + std::to_string(budget_.node_limit) + " hit");
        if ((nodes_ & 0xFFF) == 0 && budget_.time_limit_ms != UINT64_MAX) {
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start_)
                               .count();
            if (static_cast<std::uint64_t>(elapsed) > budget_.time_limit_ms)
                throw BudgetExceededError(what_ + ": time limit " + std::to_string(budget_.time_limit_ms) + " ms hit");
        }
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    SearchBudget budget_;
    std::string what_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

} // namespace ltt
