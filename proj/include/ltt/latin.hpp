#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ltt/errors.hpp"

namespace ltt {

// Hard cap on supported orders. Protects the enumeration stages from
// accidentally huge inputs; every constructor and parser enforces it.
inline constexpr int kOrderCap = 256;

// One filled cell: row r holds symbol sym in column col. All coordinates are
// 0-based. Ordering is lexicographic (row, col, sym).
struct Triple {
    int row = 0;
    int col = 0;
    int sym = 0;

    friend auto operator<=>(const Triple&, const Triple&) = default;
};

// A partial latin square of a fixed order: a set of triples with no two in
// the same cell, no symbol repeated in a row or column. Immutable after
// construction; every factory validates.
class PartialLatinSquare {
public:
    // Empty square of the given order.
    static PartialLatinSquare empty(int order);

    // From a full grid; std::nullopt marks an empty cell. Throws ShapeError,
    // SymbolRangeError, RowDuplicateError, ColDuplicateError,
    // OrderTooLargeError. Duplicate checks report the first offending cell in
    // row-major order.
    static PartialLatinSquare from_grid(const std::vector<std::vector<std::optional<int>>>& grid);

    // From an explicit triple list. Throws ShapeError on two triples in one
    // cell, plus the same validation errors as from_grid.
    static PartialLatinSquare from_triples(int order, const std::vector<Triple>& triples);

    int order() const { return order_; }
    int size() const { return static_cast<int>(triples_.size()); }  // filled cells
    bool is_complete() const { return size() == order_ * order_; }

    bool filled(int r, int c) const { return raw(r, c) >= 0; }
    std::optional<int> at(int r, int c) const {
        int v = raw(r, c);
        return v >= 0 ? std::optional<int>(v) : std::nullopt;
    }
    // Unchecked accessor: -1 for an empty cell. Binary search on the sorted
    // triple list, so sparse squares stay cheap whatever the order.
    int raw(int r, int c) const {
        auto it = std::lower_bound(triples_.begin(), triples_.end(), std::pair{r, c},
                                   [](const Triple& t, const std::pair<int, int>& p) {
                                       return t.row != p.first ? t.row < p.first : t.col < p.second;
                                   });
        return (it != triples_.end() && it->row == r && it->col == c) ? it->sym : -1;
    }

    bool contains(const Triple& t) const {
        return std::binary_search(triples_.begin(), triples_.end(), t);
    }
    // Subsquare order: true when every triple of `other` is a triple of this.
    bool contains(const PartialLatinSquare& other) const;

    // All triples in row-major order.
    const std::vector<Triple>& triples() const { return triples_; }

    // This square with one cell removed / added. Both validate.
    PartialLatinSquare without(const Triple& t) const;
    PartialLatinSquare with(const Triple& t) const;

    friend bool operator==(const PartialLatinSquare&, const PartialLatinSquare&) = default;

private:
    PartialLatinSquare(int order, std::vector<Triple> sorted)
        : order_(order), triples_(std::move(sorted)) {}

    int order_ = 0;
    std::vector<Triple> triples_;  // sorted, one per cell
};

// A complete latin square. Thin wrapper that guarantees completeness.
class LatinSquare {
public:
    // Throws IncompleteSquareError (first empty cell, row-major) if any cell
    // is empty; validation errors as for PartialLatinSquare.
    static LatinSquare from_partial(const PartialLatinSquare& p);
    static LatinSquare from_grid(const std::vector<std::vector<int>>& grid);

    int order() const { return square_.order(); }
    int at(int r, int c) const { return square_.raw(r, c); }
    const PartialLatinSquare& partial() const { return square_; }
    const std::vector<Triple>& triples() const { return square_.triples(); }

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
    explicit LatinSquare(PartialLatinSquare p) : square_(std::move(p)) {}
    PartialLatinSquare square_;
};

// Validates a grid the way from_grid does and returns the filled-cell count.
int validate_partial(const std::vector<std::vector<std::optional<int>>>& grid);

// Back-circulant square of order n: cell (r,c) holds (r+c) mod n.
LatinSquare gen_back_circulant(int n);

// Cayley table of (Z/2)^s, order 2^s: cell (r,c) holds r XOR c. Built by the
// doubling construction (each step quadruples the triple set into the four
// quadrants); the XOR form is what the recursion closes to.
LatinSquare gen_elementary_abelian(int s);

// Text format shared by .lsq and .plsq files: optional "order N" first line,
// then N rows of N whitespace-separated tokens, each a base-10 symbol or "."
// for an empty cell. A trailing newline is required.
PartialLatinSquare parse_square(const std::string& text);
std::string render_square(const PartialLatinSquare& square);

} // namespace ltt
