#pragma once

#include <stdexcept>
#include <string>

namespace ltt {

// Base class for every error thrown by this library. `code()` is a stable
// machine-readable tag; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// ---- square validation ----

struct RowDuplicateError : Error {
    RowDuplicateError(int row, int sym, int col)
        : Error("RowDuplicate",
                "symbol " + std::to_string(sym) + " repeated in row " + std::to_string(row) +
                " (second occurrence at column " + std::to_string(col) + ")"),
          row(row), sym(sym), col(col) {}
    int row, sym, col;
};

struct ColDuplicateError : Error {
    ColDuplicateError(int col, int sym, int row)
        : Error("ColDuplicate",
                "symbol " + std::to_string(sym) + " repeated in column " + std::to_string(col) +
                " (second occurrence at row " + std::to_string(row) + ")"),
          col(col), sym(sym), row(row) {}
    int col, sym, row;
};

struct SymbolRangeError : Error {
    SymbolRangeError(int row, int col, long long sym, int order)
        : Error("SymbolRange",
                "cell (" + std::to_string(row) + "," + std::to_string(col) + ") holds " +
                std::to_string(sym) + ", outside 0.." + std::to_string(order - 1)),
          row(row), col(col), sym(sym), order(order) {}
    int row, col;
    long long sym;
    int order;
};

struct ShapeError : Error {
    explicit ShapeError(const std::string& message) : Error("Shape", message) {}
};

struct OrderTooLargeError : Error {
    OrderTooLargeError(long long order, int cap)
        : Error("OrderTooLarge",
                "order " + std::to_string(order) + " exceeds the supported cap " + std::to_string(cap)),
          order(order), cap(cap) {}
    long long order;
    int cap;
};

struct IncompleteSquareError : Error {
    IncompleteSquareError(int row, int col)
        : Error("IncompleteSquare",
                "cell (" + std::to_string(row) + "," + std::to_string(col) + ") is empty"),
          row(row), col(col) {}
    int row, col;
};

// ---- text formats ----

struct ParseError : Error {
    ParseError(int line, int column, const std::string& reason)
        : Error("Parse",
                "line " + std::to_string(line) + ", token " + std::to_string(column) + ": " + reason),
          line(line), column(column) {}
    int line, column;
};

// ---- trades ----

struct OrderMismatchError : Error {
    OrderMismatchError(int a, int b)
        : Error("OrderMismatch",
                "orders differ: " + std::to_string(a) + " vs " + std::to_string(b)),
          first(a), second(b) {}
    int first, second;
};

struct InvalidBitradeError : Error {
    explicit InvalidBitradeError(const std::string& reason) : Error("InvalidBitrade", reason) {}
};

struct TradeNotContainedError : Error {
    TradeNotContainedError(int row, int col)
        : Error("TradeNotContained",
                "trade entry at (" + std::to_string(row) + "," + std::to_string(col) +
                ") does not lie in the host square"),
          row(row), col(col) {}
    int row, col;
};

struct ResultNotLatinError : Error {
    explicit ResultNotLatinError(const std::string& reason) : Error("ResultNotLatin", reason) {}
};

// ---- complexes ----

struct InvalidComplexError : Error {
    explicit InvalidComplexError(const std::string& reason) : Error("InvalidComplex", reason) {}
};

struct DimensionOutOfRangeError : Error {
    DimensionOutOfRangeError(int k, int dim)
        : Error("DimensionOutOfRange",
                "dimension " + std::to_string(k) + " outside valid range for a complex of dimension " +
                std::to_string(dim)),
          k(k), dim(dim) {}
    int k, dim;
};

// ---- critical sets / covers ----

struct NotContainedError : Error {
    NotContainedError(int row, int col)
        : Error("NotContained",
                "entry at (" + std::to_string(row) + "," + std::to_string(col) +
                ") disagrees with the target square"),
          row(row), col(col) {}
    int row, col;
};

struct NoSdrError : Error {
    explicit NoSdrError(int entry_index = -1)
        : Error("NoSDR",
                entry_index >= 0
                    ? "entry #" + std::to_string(entry_index) +
                          " lies in no trade; no system of distinct representatives exists"
                    : "no system of distinct representatives exists"),
          entry_index(entry_index) {}
    int entry_index;
};

struct NoCoveringSdrError : Error {
    NoCoveringSdrError()
        : Error("NoCoveringSDR",
                "systems of distinct representatives exist but none covers every facet") {}
};

struct NotMinimalCoverError : Error {
    explicit NotMinimalCoverError(const std::string& reason) : Error("NotMinimalCover", reason) {}
};

struct NoValidChoiceError : Error {
    NoValidChoiceError()
        : Error("NoValidChoice",
                "no assignment of distinct entries to the cover yields a critical set") {}
};

// ---- budgets ----

struct BudgetExceededError : Error {
    explicit BudgetExceededError(const std::string& reason) : Error("BudgetExceeded", reason) {}
};

} // namespace ltt
