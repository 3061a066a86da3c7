#pragma once

#include <optional>
#include <vector>

#include "ltt/budget.hpp"
#include "ltt/latin.hpp"

namespace ltt {

// An ordered pair of partial squares forming a latin bitrade: same filled
// cells, disagreeing on every shared cell, with equal symbol sets in every
// row and every column. `checked` validates; the raw constructor does not.
struct Bitrade {
    PartialLatinSquare first;
    PartialLatinSquare second;

    static Bitrade checked(PartialLatinSquare a, PartialLatinSquare b);
};

// A trade inside some host square: the body together with one disjoint mate
// witnessing the bitrade property.
struct Trade {
    PartialLatinSquare body;
    PartialLatinSquare mate;

    int size() const { return body.size(); }
};

// Bitrade test following the cell/row/column symbol-set characterization:
// nonempty, identical cell sets, cellwise disagreement, and per-row/per-col
// symbol multiset equality. Throws OrderMismatchError if the orders differ.
bool is_bitrade(const PartialLatinSquare& a, const PartialLatinSquare& b);

// Independent bitrade test via coordinate-pair partners: the two triple sets
// are disjoint, and each triple of one has exactly one partner in the other
// agreeing on each of the three coordinate pairs (row+col handled by the
// shared-cell rule, row+sym and col+sym by unique-partner counts). Slower;
// kept as a cross-check.
bool is_bitrade_pairwise(const PartialLatinSquare& a, const PartialLatinSquare& b);

// Smallest disjoint mate in lexicographic order: cells are processed
// row-major and symbols ascending, so the returned mate is the least one
// under that ordering. std::nullopt when no mate exists.
std::optional<PartialLatinSquare> find_disjoint_mate(const PartialLatinSquare& body);

// All intercalates of L: 2x2 latin subsquares that are proper subsets of L,
// each paired with its symbol-swap mate. Sorted by triple list. For order 2
// the lone subsquare is L itself and is excluded.
std::vector<Trade> enumerate_intercalates(const LatinSquare& L);

// Every trade of L with at most max_size entries (no bound when
// max_size == nullopt): proper subsets admitting a disjoint mate. Sorted by
// (size, triple list). Exhaustive subset search with row/col/symbol count
// pruning; the budget caps nodes, wall clock, and host cell count.
std::vector<Trade> enumerate_trades(const LatinSquare& L,
                                    std::optional<int> max_size = std::nullopt,
                                    const SearchBudget& budget = {});

// L with bt.first swapped out for bt.second. Throws TradeNotContainedError
// if bt.first is not contained in L, ResultNotLatinError if the overlay
// breaks the latin property.
LatinSquare apply_trade(const LatinSquare& L, const Bitrade& bt);

} // namespace ltt
