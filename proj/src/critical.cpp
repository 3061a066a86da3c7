#include "ltt/critical.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace ltt {

namespace {

struct CompletionCounter {
    int n;
    std::uint64_t full;
    long long limit;
    std::vector<std::uint64_t> row_used, col_used;
    std::vector<std::pair<int, int>> cells;  // empty cells
    std::vector<char> done;
    long long count = 0;

    void dfs(int remaining) {
        if (remaining == 0) {
            ++count;
            return;
        }
        // most constrained empty cell first
        int best = -1, best_cands = 0;
        std::uint64_t best_mask = 0;
        for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
            if (done[i]) continue;
            auto [r, c] = cells[i];
            std::uint64_t mask = full & ~row_used[r] & ~col_used[c];
            int k = std::popcount(mask);
            if (k == 0) return;  // dead branch
            if (best < 0 || k < best_cands) {
                best = i;
                best_cands = k;
                best_mask = mask;
                if (k == 1) break;
            }
        }
        auto [r, c] = cells[best];
        done[best] = 1;
        std::uint64_t mask = best_mask;
        while (mask) {
            int s = std::countr_zero(mask);
            mask &= mask - 1;
            std::uint64_t bit = std::uint64_t(1) << s;
            row_used[r] |= bit;
            col_used[c] |= bit;
            dfs(remaining - 1);
            row_used[r] &= ~bit;
            col_used[c] &= ~bit;
            if (count >= limit) break;
        }
        done[best] = 0;
    }
};

} // namespace

long long count_completions(const PartialLatinSquare& P, long long limit) {
    if (limit <= 0) return 0;
    int n = P.order();
    if (n > 64)
        throw BudgetExceededError("completion counting supports orders up to 64, got " +
                                  std::to_string(n));

    CompletionCounter cc;
    cc.n = n;
    cc.full = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    cc.limit = limit;
    cc.row_used.assign(n, 0);
    cc.col_used.assign(n, 0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            int s = P.raw(r, c);
            if (s >= 0) {
                cc.row_used[r] |= std::uint64_t(1) << s;
                cc.col_used[c] |= std::uint64_t(1) << s;
            } else {
                cc.cells.emplace_back(r, c);
            }
        }
    cc.done.assign(cc.cells.size(), 0);
    cc.dfs(static_cast<int>(cc.cells.size()));
    return std::min(cc.count, limit);
}

bool is_critical_set(const PartialLatinSquare& C, const LatinSquare& L) {
    if (C.order() != L.order()) throw OrderMismatchError(C.order(), L.order());
    for (const Triple& t : C.triples())
        if (L.at(t.row, t.col) != t.sym) throw NotContainedError(t.row, t.col);

    if (count_completions(C, 2) != 1) return false;
    // removing entries never shrinks the completion count, so single-entry
    // minimality is full minimality
    for (const Triple& t : C.triples())
        if (count_completions(C.without(t), 2) < 2) return false;
    return true;
}

TradeCoverage check_trade_coverage(const PartialLatinSquare& C, const std::vector<Trade>& trades) {
    for (int i = 0; i < static_cast<int>(trades.size()); ++i) {
        bool hit = false;
        for (const Triple& t : trades[i].body.triples())
            if (C.contains(t)) {
                hit = true;
                break;
            }
        if (!hit) return {false, i};
    }
    return {true, std::nullopt};
}

namespace {

struct SmallestSearch {
    int n = 0;
    std::vector<Triple> cells;
    std::vector<std::uint64_t> trade_masks;  // cell-index bitmask per trade
    std::vector<int> trade_max_cell;
    BudgetMeter* meter = nullptr;
    int target = 0;
    std::vector<int> chosen;
    std::uint64_t chosen_mask = 0;

    std::optional<PartialLatinSquare> dfs(int start) {
        meter->tick();
        if (static_cast<int>(chosen.size()) == target) {
            std::vector<Triple> ts;
            ts.reserve(chosen.size());
            for (int i : chosen) ts.push_back(cells[i]);
            auto pls = PartialLatinSquare::from_triples(n, ts);
            if (count_completions(pls, 2) == 1) return pls;
            return std::nullopt;
        }
        // every trade needs a clue; a trade with no cell at or past `start`
        // and no clue yet can never be hit
        for (std::size_t t = 0; t < trade_masks.size(); ++t)
            if (!(trade_masks[t] & chosen_mask) && trade_max_cell[t] < start) return std::nullopt;

        int room = target - static_cast<int>(chosen.size());
        for (int i = start; i <= static_cast<int>(cells.size()) - room; ++i) {
            chosen.push_back(i);
            chosen_mask |= std::uint64_t(1) << i;
            if (auto hit = dfs(i + 1)) return hit;
            chosen.pop_back();
            chosen_mask &= ~(std::uint64_t(1) << i);
        }
        return std::nullopt;
    }
};

} // namespace

CriticalSet smallest_critical_set(const LatinSquare& L, const SearchBudget& budget) {
    int n = L.order();
    if (n * n > 64 || n * n > budget.cell_cap)
        throw BudgetExceededError("smallest critical set: exhaustive search supports up to " +
                                  std::to_string(std::min(64, budget.cell_cap)) + " cells");

    auto trades = enumerate_trades(L, std::nullopt, budget);

    BudgetMeter meter(budget, "smallest critical set");
    SmallestSearch s;
    s.n = n;
    s.cells = L.triples();
    s.meter = &meter;
    for (const Trade& t : trades) {
        std::uint64_t mask = 0;
        int max_cell = -1;
        for (const Triple& x : t.body.triples()) {
            int idx = x.row * n + x.col;
            mask |= std::uint64_t(1) << idx;
            max_cell = std::max(max_cell, idx);
        }
        s.trade_masks.push_back(mask);
        s.trade_max_cell.push_back(max_cell);
    }

    for (int size = 0; size <= n * n; ++size) {
        s.target = size;
        s.chosen.clear();
        s.chosen_mask = 0;
        if (auto found = s.dfs(0)) {
            // uniqueness at smallest size forces minimality: no smaller set
            // completes uniquely, so neither does any proper subset
            return {std::move(*found), L};
        }
    }
    throw Error("Internal", "the full square always determines itself");
}

VertexCover critical_to_cover(const PartialLatinSquare& C, const SimplicialComplex& K,
                              const std::vector<Trade>& trades) {
    if (K.vertex_count() != static_cast<int>(trades.size()))
        throw InvalidComplexError("complex does not match the trade list");
    if (K.facets().empty()) return {{}, true};

    std::vector<Triple> entries = C.triples();
    std::vector<std::vector<int>> choices(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (int t = 0; t < static_cast<int>(trades.size()); ++t)
            if (trades[t].body.contains(entries[i])) choices[i].push_back(t);
        if (choices[i].empty()) throw NoSdrError(static_cast<int>(i));
    }

    // lexicographically first system of distinct representatives that also
    // covers every facet
    std::set<int> used;
    bool any_sdr = false;
    std::optional<std::vector<int>> answer;

    auto dfs = [&](auto&& self, std::size_t i) -> bool {
        if (i == entries.size()) {
            any_sdr = true;
            std::vector<int> cover(used.begin(), used.end());
            if (is_vertex_cover(K, cover)) {
                answer = std::move(cover);
                return true;
            }
            return false;
        }
        for (int t : choices[i]) {
            if (used.count(t)) continue;
            used.insert(t);
            if (self(self, i + 1)) return true;
            used.erase(t);
        }
        return false;
    };
    dfs(dfs, 0);

    if (!answer) {
        if (any_sdr) throw NoCoveringSdrError();
        throw NoSdrError();
    }
    return {*answer, is_minimal_vertex_cover(K, *answer)};
}

PartialLatinSquare cover_to_critical(const VertexCover& cover, const SimplicialComplex& K,
                                     const std::vector<Trade>& trades, const LatinSquare& L) {
    if (K.vertex_count() != static_cast<int>(trades.size()))
        throw InvalidComplexError("complex does not match the trade list");

    if (K.facets().empty()) {
        if (!cover.vertices.empty())
            throw NotMinimalCoverError("the empty complex admits only the empty cover");
        auto empty_set = PartialLatinSquare::empty(L.order());
        if (is_critical_set(empty_set, L)) return empty_set;
        throw NoValidChoiceError();
    }
    if (!is_vertex_cover(K, cover.vertices))
        throw NotMinimalCoverError("the set misses a facet");
    if (!is_minimal_vertex_cover(K, cover.vertices))
        throw NotMinimalCoverError("a proper subset is already a cover");
    if (K.generators().empty())
        throw InvalidComplexError("complex lacks facet entry metadata");

    // candidate entries for each chosen trade: the generating entries of the
    // facets through it
    std::vector<int> vertices = cover.vertices;
    std::sort(vertices.begin(), vertices.end());
    std::vector<std::vector<Triple>> choices(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        std::set<Triple> cand;
        for (std::size_t j = 0; j < K.facets().size(); ++j) {
            const auto& f = K.facets()[j];
            if (std::binary_search(f.begin(), f.end(), vertices[i]))
                cand.insert(K.generators()[j].begin(), K.generators()[j].end());
        }
        choices[i].assign(cand.begin(), cand.end());
    }

    std::vector<Triple> picked;
    std::set<Triple> used;
    std::optional<PartialLatinSquare> answer;

    auto dfs = [&](auto&& self, std::size_t i) -> bool {
        if (i == vertices.size()) {
            auto candidate = PartialLatinSquare::from_triples(L.order(), picked);
            if (is_critical_set(candidate, L)) {
                answer = std::move(candidate);
                return true;
            }
            return false;
        }
        for (const Triple& t : choices[i]) {
            if (used.count(t)) continue;
            used.insert(t);
            picked.push_back(t);
            if (self(self, i + 1)) return true;
            picked.pop_back();
            used.erase(t);
        }
        return false;
    };
    dfs(dfs, 0);

    if (!answer) throw NoValidChoiceError();
    return *answer;
}

} // namespace ltt
