#include "ltt/latin.hpp"

#include <algorithm>
#include <bitset>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace ltt {

namespace {

void check_order(long long order) {
    if (order < 1 || order > kOrderCap) throw OrderTooLargeError(order, kOrderCap);
}

// Row-major scan over a sorted triple list with unique cells; at each cell:
// row duplicate, then column duplicate, so the first offender wins.
void validate_sorted(int order, const std::vector<Triple>& triples) {
    std::bitset<kOrderCap> row_seen;
    std::vector<std::bitset<kOrderCap>> col_seen(order);
    int cur_row = -1;
    for (const Triple& t : triples) {
        if (t.row != cur_row) {
            row_seen.reset();
            cur_row = t.row;
        }
        if (row_seen[t.sym]) throw RowDuplicateError(t.row, t.sym, t.col);
        row_seen.set(t.sym);
        if (col_seen[t.col][t.sym]) throw ColDuplicateError(t.col, t.sym, t.row);
        col_seen[t.col].set(t.sym);
    }
}

} // namespace

PartialLatinSquare PartialLatinSquare::empty(int order) {
    check_order(order);
    return PartialLatinSquare(order, {});
}

PartialLatinSquare PartialLatinSquare::from_grid(const std::vector<std::vector<std::optional<int>>>& grid) {
    long long order = static_cast<long long>(grid.size());
    check_order(order);
    int n = static_cast<int>(order);
    std::vector<Triple> ts;
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(grid[r].size()) != n)
            throw ShapeError("row " + std::to_string(r) + " has " + std::to_string(grid[r].size()) +
                             " cells, expected " + std::to_string(n));
        for (int c = 0; c < n; ++c) {
            if (grid[r][c].has_value()) {
                long long v = *grid[r][c];
                if (v < 0 || v >= n) throw SymbolRangeError(r, c, v, n);
                ts.push_back({r, c, static_cast<int>(v)});
            }
        }
    }
    validate_sorted(n, ts);  // grid order is already row-major
    return PartialLatinSquare(n, std::move(ts));
}

PartialLatinSquare PartialLatinSquare::from_triples(int order, const std::vector<Triple>& triples) {
    check_order(order);
    std::vector<Triple> ts;
    ts.reserve(triples.size());
    std::unordered_set<long long> cells;
    for (const Triple& t : triples) {
        if (t.row < 0 || t.row >= order || t.col < 0 || t.col >= order)
            throw ShapeError("cell (" + std::to_string(t.row) + "," + std::to_string(t.col) +
                             ") outside an order-" + std::to_string(order) + " square");
        if (t.sym < 0 || t.sym >= order) throw SymbolRangeError(t.row, t.col, t.sym, order);
        if (!cells.insert(static_cast<long long>(t.row) * order + t.col).second) {
            auto dup = std::find_if(ts.begin(), ts.end(), [&](const Triple& u) {
                return u.row == t.row && u.col == t.col;
            });
            if (dup->sym == t.sym) continue;  // harmless duplicate triple
            throw ShapeError("cell (" + std::to_string(t.row) + "," + std::to_string(t.col) +
                             ") assigned twice");
        }
        ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end());
    validate_sorted(order, ts);
    return PartialLatinSquare(order, std::move(ts));
}

bool PartialLatinSquare::contains(const PartialLatinSquare& other) const {
    if (other.order_ != order_) return false;
    return std::includes(triples_.begin(), triples_.end(),
                         other.triples_.begin(), other.triples_.end());
}

PartialLatinSquare PartialLatinSquare::without(const Triple& t) const {
    if (!contains(t))
        throw ShapeError("triple (" + std::to_string(t.row) + "," + std::to_string(t.col) + "," +
                         std::to_string(t.sym) + ") not present");
    std::vector<Triple> ts = triples_;
    ts.erase(std::lower_bound(ts.begin(), ts.end(), t));
    return PartialLatinSquare(order_, std::move(ts));
}

PartialLatinSquare PartialLatinSquare::with(const Triple& t) const {
    std::vector<Triple> ts = triples_;
    ts.push_back(t);
    return from_triples(order_, ts);
}

LatinSquare LatinSquare::from_partial(const PartialLatinSquare& p) {
    if (!p.is_complete()) {
        // first gap in the row-major cell walk
        int expect = 0;
        for (const Triple& t : p.triples()) {
            if (t.row * p.order() + t.col != expect) break;
            ++expect;
        }
        throw IncompleteSquareError(expect / p.order(), expect % p.order());
    }
    return LatinSquare(p);
}

LatinSquare LatinSquare::from_grid(const std::vector<std::vector<int>>& grid) {
    std::vector<std::vector<std::optional<int>>> g(grid.size());
    for (std::size_t r = 0; r < grid.size(); ++r)
        for (int v : grid[r]) g[r].emplace_back(v);
    return from_partial(PartialLatinSquare::from_grid(g));
}

int validate_partial(const std::vector<std::vector<std::optional<int>>>& grid) {
    return PartialLatinSquare::from_grid(grid).size();
}

LatinSquare gen_back_circulant(int n) {
    check_order(n);
    std::vector<std::vector<int>> grid(n, std::vector<int>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) grid[r][c] = (r + c) % n;
    return LatinSquare::from_grid(grid);
}

LatinSquare gen_elementary_abelian(int s) {
    if (s < 1 || s > 8) throw OrderTooLargeError(s <= 0 ? 0 : (1LL << s), kOrderCap);

    // Start from the order-2 table and double: each pass sends (r,c,e) to the
    // four shifted copies (r,c,e), (r,c+n,e+n), (r+n,c,e+n), (r+n,c+n,e).
    std::vector<std::vector<int>> grid = {{0, 1}, {1, 0}};
    for (int step = 1; step < s; ++step) {
        int n = static_cast<int>(grid.size());
        std::vector<std::vector<int>> next(2 * n, std::vector<int>(2 * n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                int e = grid[r][c];
                next[r][c] = e;
                next[r][c + n] = e + n;
                next[r + n][c] = e + n;
                next[r + n][c + n] = e;
            }
        grid = std::move(next);
    }
    return LatinSquare::from_grid(grid);
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

int parse_symbol(const std::string& tok, int line_no, int tok_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line_no, tok_no, "expected a symbol or '.', got \"" + tok + "\"");
    return value;
}

} // namespace

PartialLatinSquare parse_square(const std::string& text) {
    if (text.empty() || text.back() != '\n')
        throw ParseError(static_cast<int>(1 + std::count(text.begin(), text.end(), '\n')), 1,
                         "missing trailing newline");

    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }

    std::size_t first = 0;
    long long declared = -1;
    if (!lines.empty()) {
        auto head = tokenize(lines[0]);
        if (!head.empty() && head[0] == "order") {
            if (head.size() != 2) throw ParseError(1, 2, "order line must be \"order N\"");
            declared = parse_symbol(head[1], 1, 2);
            if (declared < 1 || declared > kOrderCap) throw OrderTooLargeError(declared, kOrderCap);
            first = 1;
        }
    }

    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = first; i < lines.size(); ++i) {
        auto tokens = tokenize(lines[i]);
        if (tokens.empty()) {
            if (declared >= 0 && static_cast<long long>(rows.size()) == declared) continue;  // padding
            throw ParseError(static_cast<int>(i + 1), 1, "blank row");
        }
        rows.push_back(std::move(tokens));
    }

    if (rows.empty()) throw ParseError(1, 1, "no rows");
    long long n = declared >= 0 ? declared : static_cast<long long>(rows[0].size());
    if (n < 1 || n > kOrderCap) throw OrderTooLargeError(n, kOrderCap);
    if (static_cast<long long>(rows.size()) != n)
        throw ParseError(static_cast<int>(lines.size()), 1,
                         "expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));

    std::vector<std::vector<std::optional<int>>> grid(static_cast<std::size_t>(n));
    for (long long r = 0; r < n; ++r) {
        int line_no = static_cast<int>(first + r + 1);
        if (static_cast<long long>(rows[r].size()) != n)
            throw ParseError(line_no, static_cast<int>(rows[r].size()),
                             "expected " + std::to_string(n) + " tokens, got " + std::to_string(rows[r].size()));
        for (long long c = 0; c < n; ++c) {
            const std::string& tok = rows[r][c];
            if (tok == ".")
                grid[r].emplace_back(std::nullopt);
            else
                grid[r].emplace_back(parse_symbol(tok, line_no, static_cast<int>(c + 1)));
        }
    }
    return PartialLatinSquare::from_grid(grid);
}

std::string render_square(const PartialLatinSquare& square) {
    std::ostringstream out;
    int n = square.order();
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (c) out << ' ';
            int s = square.raw(r, c);
            if (s < 0)
                out << '.';
            else
                out << s;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace ltt
