#include "oracles.hpp"

#include <algorithm>
#include <bitset>
#include <functional>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

using ltt::Triple;

using SymSet = std::bitset<ltt::kOrderCap>;

struct MateSearch {
    int order;
    std::vector<Triple> cells;  // row-major body triples
    std::vector<SymSet> row_allowed, col_allowed;
    std::vector<SymSet> row_used, col_used;
    std::vector<int> chosen;

    bool dfs(size_t i) {
        if (i == cells.size()) return sets_match();
        const Triple& t = cells[i];
        for (int s = 0; s < order; ++s) {
            if (s == t.sym) continue;
            if (!row_allowed[t.row][s] || !col_allowed[t.col][s]) continue;
            if (row_used[t.row][s] || col_used[t.col][s]) continue;
            row_used[t.row][s] = col_used[t.col][s] = true;
            chosen[i] = s;
            if (dfs(i + 1)) return true;
            row_used[t.row][s] = col_used[t.col][s] = false;
        }
        return false;
    }

    // The allowed masks already force this, but an oracle should state its
    // whole contract.
    bool sets_match() const {
        std::vector<SymSet> body_row(order), body_col(order), mate_row(order), mate_col(order);
        for (size_t i = 0; i < cells.size(); ++i) {
            body_row[cells[i].row][cells[i].sym] = true;
            body_col[cells[i].col][cells[i].sym] = true;
            mate_row[cells[i].row][chosen[i]] = true;
            mate_col[cells[i].col][chosen[i]] = true;
        }
        return body_row == mate_row && body_col == mate_col;
    }
};

mpz_class det(const std::vector<std::vector<mpz_class>>& a) {
    size_t k = a.size();
    if (k == 0) return 1;
    if (k == 1) return a[0][0];
    mpz_class sum = 0;
    std::vector<std::vector<mpz_class>> minor(k - 1, std::vector<mpz_class>(k - 1));
    for (size_t j = 0; j < k; ++j) {
        for (size_t r = 1; r < k; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < k; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = a[r][c];
            }
        }
        mpz_class term = a[0][j] * det(minor);
        if (j % 2 == 0) sum += term;
        else sum -= term;
    }
    return sum;
}

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

long long count_intercalates(const ltt::LatinSquare& L) {
    int n = L.order();
    long long count = 0;
    for (int r1 = 0; r1 < n; ++r1)
        for (int r2 = r1 + 1; r2 < n; ++r2)
            for (int c1 = 0; c1 < n; ++c1)
                for (int c2 = c1 + 1; c2 < n; ++c2) {
                    int a = L.at(r1, c1), b = L.at(r1, c2);
                    if (a != b && L.at(r2, c1) == b && L.at(r2, c2) == a) ++count;
                }
    return count;
}

std::optional<std::vector<Triple>> lex_least_mate(const std::vector<Triple>& body, int order) {
    if (body.empty()) return std::nullopt;
    MateSearch ms;
    ms.order = order;
    ms.cells = body;
    std::sort(ms.cells.begin(), ms.cells.end());
    ms.row_allowed.assign(order, {});
    ms.col_allowed.assign(order, {});
    ms.row_used.assign(order, {});
    ms.col_used.assign(order, {});
    ms.chosen.assign(ms.cells.size(), -1);
    for (const Triple& t : ms.cells) {
        ms.row_allowed[t.row][t.sym] = true;
        ms.col_allowed[t.col][t.sym] = true;
    }
    if (!ms.dfs(0)) return std::nullopt;
    std::vector<Triple> mate;
    for (size_t i = 0; i < ms.cells.size(); ++i)
        mate.push_back({ms.cells[i].row, ms.cells[i].col, ms.chosen[i]});
    return mate;
}

std::vector<std::vector<int>> minimal_covers(int vertex_count,
                                             const std::vector<std::vector<int>>& facets) {
    if (vertex_count > 20) throw std::invalid_argument("minimal_covers: too many vertices");
    auto covers_all = [&](unsigned mask) {
        for (const auto& f : facets) {
            bool hit = false;
            for (int v : f) hit = hit || ((mask >> v) & 1);
            if (!hit) return false;
        }
        return true;
    };
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << vertex_count); ++mask) {
        if (!covers_all(mask)) continue;
        bool minimal = true;
        for (int v = 0; v < vertex_count && minimal; ++v)
            if ((mask >> v) & 1) minimal = !covers_all(mask & ~(1u << v));
        if (!minimal) continue;
        std::vector<int> cover;
        for (int v = 0; v < vertex_count; ++v)
            if ((mask >> v) & 1) cover.push_back(v);
        out.push_back(std::move(cover));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<mpz_class> invariant_factors_minor_gcd(const ltt::SparseIntMatrix& M) {
    if (M.rows > 6 || M.cols > 6)
        throw std::invalid_argument("invariant_factors_minor_gcd: matrix too large");
    std::vector<std::vector<mpz_class>> a(M.rows, std::vector<mpz_class>(M.cols, 0));
    for (const auto& e : M.entries) a[e.row][e.col] += static_cast<long>(e.value);
    int kmax = std::min(M.rows, M.cols);
    std::vector<mpz_class> divisors;  // d_1, d_2, ...
    for (int k = 1; k <= kmax; ++k) {
        mpz_class g = 0;
        combinations(M.rows, k, [&](const std::vector<int>& ri) {
            combinations(M.cols, k, [&](const std::vector<int>& ci) {
                std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub[i][j] = a[ri[i]][ci[j]];
                g = gcd(g, det(sub));
            });
        });
        if (g == 0) break;
        divisors.push_back(g);
    }
    std::vector<mpz_class> factors;
    mpz_class prev = 1;
    for (const mpz_class& d : divisors) {
        factors.push_back(d / prev);
        prev = d;
    }
    return factors;
}

long long count_completions_plain(const ltt::PartialLatinSquare& P, long long limit) {
    int n = P.order();
    if (n > 32) throw std::invalid_argument("count_completions_plain: order too large");
    std::vector<unsigned long long> row_used(n, 0), col_used(n, 0);
    std::vector<std::pair<int, int>> holes;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            int s = P.raw(r, c);
            if (s < 0) {
                holes.push_back({r, c});
            } else {
                row_used[r] |= 1ull << s;
                col_used[c] |= 1ull << s;
            }
        }
    long long count = 0;
    auto dfs = [&](auto&& self, size_t i) -> void {
        if (count >= limit) return;
        if (i == holes.size()) {
            ++count;
            return;
        }
        auto [r, c] = holes[i];
        for (int s = 0; s < n; ++s) {
            unsigned long long bit = 1ull << s;
            if ((row_used[r] & bit) || (col_used[c] & bit)) continue;
            row_used[r] |= bit;
            col_used[c] |= bit;
            self(self, i + 1);
            row_used[r] &= ~bit;
            col_used[c] &= ~bit;
            if (count >= limit) return;
        }
    };
    dfs(dfs, 0);
    return count;
}

}  // namespace oracle
