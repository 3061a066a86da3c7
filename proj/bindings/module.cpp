// Python bindings. Squares cross the boundary as list-of-list grids, partial
// squares and trades as lists of (row, col, symbol) triples, complexes as
// {"vertex_count", "facets", "labels"} dicts.

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ltt/complex.hpp"
#include "ltt/critical.hpp"
#include "ltt/errors.hpp"
#include "ltt/homology.hpp"
#include "ltt/latin.hpp"
#include "ltt/trades.hpp"

namespace py = pybind11;
using namespace ltt;

namespace {

using PyTriples = std::vector<std::tuple<int, int, int>>;
using PyTradeList = std::vector<std::pair<PyTriples, PyTriples>>;

PartialLatinSquare to_partial(int order, const PyTriples& triples) {
    std::vector<Triple> out;
    out.reserve(triples.size());
    for (const auto& [r, c, e] : triples) out.push_back({r, c, e});
    return PartialLatinSquare::from_triples(order, out);
}

PyTriples to_tuples(const PartialLatinSquare& p) {
    PyTriples out;
    out.reserve(p.triples().size());
    for (const Triple& t : p.triples()) out.emplace_back(t.row, t.col, t.sym);
    return out;
}

std::vector<std::vector<int>> to_grid(const LatinSquare& L) {
    std::vector<std::vector<int>> g(L.order(), std::vector<int>(L.order()));
    for (const Triple& t : L.triples()) g[t.row][t.col] = t.sym;
    return g;
}

PyTradeList to_trade_list(const std::vector<Trade>& trades) {
    PyTradeList out;
    out.reserve(trades.size());
    for (const Trade& t : trades) out.emplace_back(to_tuples(t.body), to_tuples(t.mate));
    return out;
}

std::vector<Trade> from_trade_list(int order, const PyTradeList& trades) {
    std::vector<Trade> out;
    out.reserve(trades.size());
    for (const auto& [body, mate] : trades)
        out.push_back({to_partial(order, body), to_partial(order, mate)});
    return out;
}

py::dict complex_dict(const SimplicialComplex& K) {
    py::dict d;
    d["vertex_count"] = K.vertex_count();
    d["facets"] = K.facets();
    d["labels"] = K.labels();
    return d;
}

HomologyOptions parse_options(const std::string& method, std::uint64_t prime, bool reduce) {
    HomologyOptions opt;
    if (method == "exact")
        opt.method = HomologyMethod::ExactSnf;
    else if (method == "mod-p")
        opt.method = HomologyMethod::RankModP;
    else if (method == "rational")
        opt.method = HomologyMethod::RationalRank;
    else
        throw py::value_error("method must be 'exact', 'mod-p' or 'rational'");
    opt.prime = prime;
    opt.reduce = reduce;
    return opt;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Latin trades, trade-space complexes, homology and critical sets";

    py::register_exception<Error>(m, "LatinError");

    m.def(
        "back_circulant", [](int n) { return to_grid(gen_back_circulant(n)); }, py::arg("n"),
        "Order-n square with (r + c) mod n in cell (r, c).");

    m.def(
        "elementary_abelian", [](int s) { return to_grid(gen_elementary_abelian(s)); },
        py::arg("s"), "Table of bitwise XOR on 0..2^s-1.");

    m.def(
        "is_bitrade",
        [](int order, const PyTriples& a, const PyTriples& b) {
            return is_bitrade(to_partial(order, a), to_partial(order, b));
        },
        py::arg("order"), py::arg("a"), py::arg("b"),
        "Whether two triple lists form a latin bitrade (symbol-set test).");

    m.def(
        "is_bitrade_pairwise",
        [](int order, const PyTriples& a, const PyTriples& b) {
            return is_bitrade_pairwise(to_partial(order, a), to_partial(order, b));
        },
        py::arg("order"), py::arg("a"), py::arg("b"),
        "Independent bitrade test via unique coordinate-pair partners.");

    m.def(
        "find_disjoint_mate",
        [](int order, const PyTriples& body) -> std::optional<PyTriples> {
            auto mate = find_disjoint_mate(to_partial(order, body));
            if (!mate) return std::nullopt;
            return to_tuples(*mate);
        },
        py::arg("order"), py::arg("body"),
        "Lexicographically least disjoint mate of the body, or None.");

    m.def(
        "intercalates",
        [](const std::vector<std::vector<int>>& grid) {
            return to_trade_list(enumerate_intercalates(LatinSquare::from_grid(grid)));
        },
        py::arg("grid"), "All 2x2 subsquare trades of the square, as (body, mate) pairs.");

    m.def(
        "trades",
        [](const std::vector<std::vector<int>>& grid, std::optional<int> max_size) {
            return to_trade_list(enumerate_trades(LatinSquare::from_grid(grid), max_size));
        },
        py::arg("grid"), py::arg("max_size") = py::none(),
        "All trades of the square up to max_size entries, as (body, mate) pairs.");

    m.def(
        "apply_trade",
        [](const std::vector<std::vector<int>>& grid, const PyTriples& body,
           const PyTriples& mate) {
            LatinSquare L = LatinSquare::from_grid(grid);
            Bitrade bt{to_partial(L.order(), body), to_partial(L.order(), mate)};
            return to_grid(apply_trade(L, bt));
        },
        py::arg("grid"), py::arg("body"), py::arg("mate"),
        "The square with the body entries replaced by the mate entries.");

    m.def(
        "nerve",
        [](const std::vector<std::vector<int>>& grid, const PyTradeList& trades) {
            LatinSquare L = LatinSquare::from_grid(grid);
            return complex_dict(nerve_from_trades(from_trade_list(L.order(), trades), L));
        },
        py::arg("grid"), py::arg("trades"),
        "Nerve of the trade family over the square's entries, as a dict with "
        "'vertex_count', 'facets' and 'labels'.");

    m.def(
        "homology",
        [](int vertex_count, const std::vector<std::vector<int>>& facets,
           const std::string& method, std::uint64_t prime, bool reduce) {
            SimplicialComplex K = SimplicialComplex::from_facets(vertex_count, facets);
            HomologyResult h = reduced_homology(K, parse_options(method, prime, reduce));
            py::dict d;
            d["betti"] = h.betti;
            std::vector<std::vector<std::string>> torsion;
            for (const auto& layer : h.torsion) {
                std::vector<std::string> out;
                for (const mpz_class& v : layer) out.push_back(v.get_str());
                torsion.push_back(std::move(out));
            }
            d["torsion"] = torsion;
            d["method"] = h.method;
            d["empty"] = h.empty_complex;
            d["reduction"] = h.reduction;
            d["f_vector"] = h.f_vector;
            d["euler"] = h.euler;
            return d;
        },
        py::arg("vertex_count"), py::arg("facets"), py::arg("method") = "exact",
        py::arg("prime") = 2, py::arg("reduce") = true,
        "Reduced simplicial homology of the complex given by its facets. "
        "method is 'exact' (Smith normal form, with torsion), 'mod-p' or "
        "'rational' (Betti numbers only).");

    m.def(
        "minimal_covers",
        [](int vertex_count, const std::vector<std::vector<int>>& facets) {
            std::vector<std::vector<int>> out;
            for (const VertexCover& c :
                 minimal_vertex_covers(SimplicialComplex::from_facets(vertex_count, facets)))
                out.push_back(c.vertices);
            return out;
        },
        py::arg("vertex_count"), py::arg("facets"),
        "All inclusion-minimal vertex covers of the facet hypergraph, sorted "
        "by size then lexicographically.");

    m.def(
        "count_completions",
        [](int order, const PyTriples& triples, long long limit) {
            return count_completions(to_partial(order, triples), limit);
        },
        py::arg("order"), py::arg("triples"), py::arg("limit") = 2,
        "Number of completions of the partial square, counted up to limit.");

    m.def(
        "is_critical_set",
        [](int order, const PyTriples& triples, const std::vector<std::vector<int>>& grid) {
            return is_critical_set(to_partial(order, triples), LatinSquare::from_grid(grid));
        },
        py::arg("order"), py::arg("triples"), py::arg("grid"),
        "Whether the entries force the square uniquely and no entry is redundant.");

    m.def(
        "smallest_critical_set",
        [](const std::vector<std::vector<int>>& grid) {
            return to_tuples(smallest_critical_set(LatinSquare::from_grid(grid)).entries);
        },
        py::arg("grid"),
        "Lexicographically least critical set of minimum size for the square.");
}
