#include "ltt/trades.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <map>
#include <set>
#include <tuple>

namespace ltt {

namespace {

using SymSet = std::bitset<kOrderCap>;

struct LineSets {
    std::vector<SymSet> row, col;
};

LineSets line_symbol_sets(const PartialLatinSquare& p) {
    LineSets s{std::vector<SymSet>(p.order()), std::vector<SymSet>(p.order())};
    for (const Triple& t : p.triples()) {
        s.row[t.row].set(t.sym);
        s.col[t.col].set(t.sym);
    }
    return s;
}

} // namespace

bool is_bitrade(const PartialLatinSquare& a, const PartialLatinSquare& b) {
    if (a.order() != b.order()) throw OrderMismatchError(a.order(), b.order());
    if (a.size() == 0 || b.size() == 0) return false;
    if (a.size() != b.size()) return false;

    // Both triple lists are sorted row-major, so equal cell sets means they
    // line up pointwise.
    const auto& ta = a.triples();
    const auto& tb = b.triples();
    for (std::size_t i = 0; i < ta.size(); ++i) {
        if (ta[i].row != tb[i].row || ta[i].col != tb[i].col) return false;
        if (ta[i].sym == tb[i].sym) return false;  // must disagree cellwise
    }

    int n = a.order();
    LineSets sa = line_symbol_sets(a), sb = line_symbol_sets(b);
    for (int i = 0; i < n; ++i)
        if (sa.row[i] != sb.row[i] || sa.col[i] != sb.col[i]) return false;
    return true;
}

bool is_bitrade_pairwise(const PartialLatinSquare& a, const PartialLatinSquare& b) {
    if (a.order() != b.order()) throw OrderMismatchError(a.order(), b.order());
    if (a.size() == 0 || b.size() == 0) return false;

    // In a partial latin square each (row,col), (row,sym), (col,sym) pair
    // pins at most one triple, so "exactly one partner agreeing on the pair"
    // reduces to membership plus triple-disjointness.
    auto pair_sets = [](const PartialLatinSquare& p) {
        std::set<std::pair<int, int>> rc, rs, cs;
        for (const Triple& t : p.triples()) {
            rc.emplace(t.row, t.col);
            rs.emplace(t.row, t.sym);
            cs.emplace(t.col, t.sym);
        }
        return std::array{rc, rs, cs};
    };
    auto [arc, ars, acs] = pair_sets(a);
    auto [brc, brs, bcs] = pair_sets(b);

    auto one_direction = [](const PartialLatinSquare& from, const PartialLatinSquare& to,
                            const std::set<std::pair<int, int>>& rc,
                            const std::set<std::pair<int, int>>& rs,
                            const std::set<std::pair<int, int>>& cs) {
        for (const Triple& t : from.triples()) {
            if (to.contains(t)) return false;  // shared triple
            if (!rc.count({t.row, t.col})) return false;
            if (!rs.count({t.row, t.sym})) return false;
            if (!cs.count({t.col, t.sym})) return false;
        }
        return true;
    };
    return one_direction(a, b, brc, brs, bcs) && one_direction(b, a, arc, ars, acs);
}

Bitrade Bitrade::checked(PartialLatinSquare a, PartialLatinSquare b) {
    if (!is_bitrade(a, b))
        throw InvalidBitradeError("the pair fails the bitrade conditions");
    return Bitrade{std::move(a), std::move(b)};
}

namespace {

struct MateSearch {
    int n;
    std::vector<Triple> cells;            // body triples, row-major
    std::vector<SymSet> row_allowed;      // body symbols per row
    std::vector<SymSet> col_allowed;      // body symbols per column
    std::vector<SymSet> row_used, col_used;
    std::vector<int> assignment;

    bool dfs(std::size_t i) {
        if (i == cells.size()) return true;
        const Triple& t = cells[i];
        SymSet candidates = row_allowed[t.row] & col_allowed[t.col] &
                            ~row_used[t.row] & ~col_used[t.col];
        candidates.reset(t.sym);
        for (int s = 0; s < n; ++s) {
            if (!candidates.test(s)) continue;
            row_used[t.row].set(s);
            col_used[t.col].set(s);
            assignment[i] = s;
            if (dfs(i + 1)) return true;
            row_used[t.row].reset(s);
            col_used[t.col].reset(s);
        }
        return false;
    }
};

} // namespace

std::optional<PartialLatinSquare> find_disjoint_mate(const PartialLatinSquare& body) {
    if (body.size() == 0) return std::nullopt;
    int n = body.order();

    // A mate forces each used row, column and symbol to appear at least
    // twice in the body; bail out early otherwise.
    std::vector<int> row_cnt(n, 0), col_cnt(n, 0), sym_cnt(n, 0);
    for (const Triple& t : body.triples()) {
        ++row_cnt[t.row];
        ++col_cnt[t.col];
        ++sym_cnt[t.sym];
    }
    for (int i = 0; i < n; ++i)
        if (row_cnt[i] == 1 || col_cnt[i] == 1 || sym_cnt[i] == 1) return std::nullopt;

    MateSearch s;
    s.n = n;
    s.cells = body.triples();
    auto sets = line_symbol_sets(body);
    s.row_allowed = std::move(sets.row);
    s.col_allowed = std::move(sets.col);
    s.row_used.assign(n, {});
    s.col_used.assign(n, {});
    s.assignment.assign(s.cells.size(), -1);
    if (!s.dfs(0)) return std::nullopt;

    std::vector<Triple> mate;
    mate.reserve(s.cells.size());
    for (std::size_t i = 0; i < s.cells.size(); ++i)
        mate.push_back({s.cells[i].row, s.cells[i].col, s.assignment[i]});
    return PartialLatinSquare::from_triples(n, mate);
}

std::vector<Trade> enumerate_intercalates(const LatinSquare& L) {
    int n = L.order();
    std::vector<Trade> out;
    if (n < 2) return out;

    std::vector<int> grid(static_cast<std::size_t>(n) * n);
    for (const Triple& t : L.triples()) grid[static_cast<std::size_t>(t.row) * n + t.col] = t.sym;
    std::vector<std::vector<int>> col_of(n, std::vector<int>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) col_of[r][grid[static_cast<std::size_t>(r) * n + c]] = c;

    // (r1, c1, e11, c2, e21, r2) sorts records the same way the bodies sort,
    // and no two records agree on the first five fields.
    struct Rec {
        int r1, c1, e11, c2, e21, r2;
    };
    std::vector<Rec> recs;
    for (int r1 = 0; r1 < n; ++r1)
        for (int r2 = r1 + 1; r2 < n; ++r2)
            for (int c1 = 0; c1 < n; ++c1) {
                int e11 = grid[static_cast<std::size_t>(r1) * n + c1];
                int e21 = grid[static_cast<std::size_t>(r2) * n + c1];
                int c2 = col_of[r2][e11];
                if (c2 <= c1) continue;
                if (grid[static_cast<std::size_t>(r1) * n + c2] != e21) continue;
                if (4 == n * n) continue;  // the subsquare is L itself
                recs.push_back({r1, c1, e11, c2, e21, r2});
            }

    std::sort(recs.begin(), recs.end(), [](const Rec& a, const Rec& b) {
        return std::tie(a.r1, a.c1, a.e11, a.c2, a.e21, a.r2) <
               std::tie(b.r1, b.c1, b.e11, b.c2, b.e21, b.r2);
    });

    out.reserve(recs.size());
    for (const Rec& x : recs) {
        std::vector<Triple> body = {{x.r1, x.c1, x.e11}, {x.r1, x.c2, x.e21},
                                    {x.r2, x.c1, x.e21}, {x.r2, x.c2, x.e11}};
        std::vector<Triple> mate = {{x.r1, x.c1, x.e21}, {x.r1, x.c2, x.e11},
                                    {x.r2, x.c1, x.e11}, {x.r2, x.c2, x.e21}};
        out.push_back({PartialLatinSquare::from_triples(n, body),
                       PartialLatinSquare::from_triples(n, mate)});
    }
    return out;
}

namespace {

struct TradeSearch {
    int n = 0;
    std::vector<Triple> cells;  // row-major cells of L
    std::optional<int> max_size;
    BudgetMeter* meter = nullptr;
    std::vector<int> row_cnt, col_cnt, sym_cnt;
    std::vector<int> last_sym_cell;  // last row-major index holding each symbol
    std::vector<int> chosen;
    std::vector<Trade>* out = nullptr;

    bool counts_ok_at(int idx) const {
        const Triple& t = cells[idx];
        if (t.col == n - 1 && row_cnt[t.row] == 1) return false;
        if (t.row == n - 1 && col_cnt[t.col] == 1) return false;
        if (last_sym_cell[t.sym] == idx && sym_cnt[t.sym] == 1) return false;
        return true;
    }

    void dfs(int idx) {
        meter->tick();
        if (idx == static_cast<int>(cells.size())) {
            int size = static_cast<int>(chosen.size());
            if (size < 4 || size == n * n) return;  // proper nonempty subsets only
            std::vector<Triple> body;
            body.reserve(chosen.size());
            for (int i : chosen) body.push_back(cells[i]);
            auto pls = PartialLatinSquare::from_triples(n, body);
            if (auto mate = find_disjoint_mate(pls))
                out->push_back({std::move(pls), std::move(*mate)});
            return;
        }
        const Triple& t = cells[idx];

        // include
        if (!max_size || static_cast<int>(chosen.size()) < *max_size) {
            ++row_cnt[t.row];
            ++col_cnt[t.col];
            ++sym_cnt[t.sym];
            chosen.push_back(idx);
            if (counts_ok_at(idx)) dfs(idx + 1);
            chosen.pop_back();
            --row_cnt[t.row];
            --col_cnt[t.col];
            --sym_cnt[t.sym];
        }
        // exclude
        if (counts_ok_at(idx)) dfs(idx + 1);
    }
};

} // namespace

std::vector<Trade> enumerate_trades(const LatinSquare& L, std::optional<int> max_size,
                                    const SearchBudget& budget) {
    int n = L.order();
    if (n * n > budget.cell_cap)
        throw BudgetExceededError("trade enumeration: " + std::to_string(n * n) +
                                  " cells exceed the cell cap " + std::to_string(budget.cell_cap));

    BudgetMeter meter(budget, "trade enumeration");
    TradeSearch s;
    s.n = n;
    s.cells = L.triples();
    s.max_size = max_size;
    s.meter = &meter;
    s.row_cnt.assign(n, 0);
    s.col_cnt.assign(n, 0);
    s.sym_cnt.assign(n, 0);
    s.last_sym_cell.assign(n, -1);
    for (int i = 0; i < static_cast<int>(s.cells.size()); ++i)
        s.last_sym_cell[s.cells[i].sym] = i;

    std::vector<Trade> out;
    s.out = &out;
    s.dfs(0);

    std::sort(out.begin(), out.end(), [](const Trade& a, const Trade& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.body.triples() < b.body.triples();
    });
    return out;
}

LatinSquare apply_trade(const LatinSquare& L, const Bitrade& bt) {
    if (bt.first.order() != L.order()) throw OrderMismatchError(L.order(), bt.first.order());
    if (bt.second.order() != L.order()) throw OrderMismatchError(L.order(), bt.second.order());
    for (const Triple& t : bt.first.triples())
        if (L.at(t.row, t.col) != t.sym) throw TradeNotContainedError(t.row, t.col);

    int n = L.order();
    std::vector<std::vector<int>> grid(n, std::vector<int>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) grid[r][c] = L.at(r, c);
    for (const Triple& t : bt.second.triples()) grid[t.row][t.col] = t.sym;

    try {
        return LatinSquare::from_grid(grid);
    } catch (const Error& e) {
        throw ResultNotLatinError(e.what());
    }
}

} // namespace ltt
