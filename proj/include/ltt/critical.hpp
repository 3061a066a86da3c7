#pragma once

#include <optional>
#include <vector>

#include "ltt/budget.hpp"
#include "ltt/complex.hpp"
#include "ltt/latin.hpp"
#include "ltt/trades.hpp"

namespace ltt {

// Number of completions of P to a full latin square, counting up to `limit`
// and stopping there (so limit=2 distinguishes 0 / 1 / "several" cheaply).
// Backtracking over the most constrained empty cell first. Orders above 64
// are refused via BudgetExceededError; exhaustive completion counting is not
// meaningful at that size.
long long count_completions(const PartialLatinSquare& P, long long limit = 2);

// True when C is contained in L, determines L uniquely, and loses uniqueness
// on removal of any single entry. Single-entry minimality is equivalent to
// full minimality because completion counts never drop when entries are
// removed. Throws NotContainedError when C is not a subset of L.
bool is_critical_set(const PartialLatinSquare& C, const LatinSquare& L);

struct CriticalSet {
    PartialLatinSquare entries;
    LatinSquare target;
};

// Lexicographically least smallest critical set of L: sizes are tried in
// increasing order and subsets in lexicographic order over the row-major
// cell list, so the first uniquely-completing subset found is returned.
// Every trade of L must contain a clue (otherwise swapping the trade gives a
// second completion), so the search enumerates the trades once and prunes
// subsets that miss one.
CriticalSet smallest_critical_set(const LatinSquare& L, const SearchBudget& budget = {});

struct TradeCoverage {
    bool all_hit = true;
    // Index into the trade list of the first trade disjoint from the entry
    // set, when one exists.
    std::optional<int> witness;
};

// Checks the necessary condition above: does every trade in `trades` share
// at least one entry with C? Witness is the first miss in list order.
TradeCoverage check_trade_coverage(const PartialLatinSquare& C, const std::vector<Trade>& trades);

// From a critical set to a vertex cover of the trade nerve: entry c_i of C
// gives the set S_i of trades through c_i; a system of distinct
// representatives chosen from the S_i that meets every facet is a cover of
// the same size. Searches assignments lexicographically (entries row-major,
// candidate trades ascending) and returns the first covering SDR. Throws
// NoSdrError when some S_i is empty, NoCoveringSdrError when SDRs exist but
// none covers. K must be the nerve of `trades`.
VertexCover critical_to_cover(const PartialLatinSquare& C,
                              const SimplicialComplex& K,
                              const std::vector<Trade>& trades);

// From a minimal vertex cover back to a critical set: for each trade in the
// cover pick one generating entry of a facet through it, all entries
// distinct, such that the resulting partial square is a critical set of L.
// Backtracks lexicographically and verifies with is_critical_set. Throws
// NotMinimalCoverError when `cover` is not a minimal cover of K,
// NoValidChoiceError when no assignment works.
PartialLatinSquare cover_to_critical(const VertexCover& cover,
                                     const SimplicialComplex& K,
                                     const std::vector<Trade>& trades,
                                     const LatinSquare& L);

} // namespace ltt
