#include <doctest.h>

#include <algorithm>
#include <set>

#include "ltt/complex.hpp"
#include "ltt/critical.hpp"
#include "ltt/errors.hpp"
#include "ltt/latin.hpp"
#include "ltt/trades.hpp"
#include "oracles.hpp"

using namespace ltt;

namespace {

// 37 entries of an order-8 partial square with a unique completion.
PartialLatinSquare p3_fixture() {
    const int N = -1;
    std::vector<std::vector<int>> rows = {
        {0, 1, 2, 3, 4, 5, 6, N}, {1, 0, 3, 2, 5, 4, N, N}, {2, 3, 0, 1, 6, N, 4, N},
        {3, 2, 1, 0, N, N, N, N}, {4, 5, 6, N, 0, 1, 2, N}, {5, 4, N, N, 1, 0, N, N},
        {6, N, 4, N, 2, N, 0, N}, {N, N, N, N, N, N, N, N}};
    std::vector<Triple> ts;
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            if (rows[r][c] >= 0) ts.push_back({r, c, rows[r][c]});
    return PartialLatinSquare::from_triples(8, ts);
}

}  // namespace

TEST_CASE("completion counting") {
    CHECK(count_completions(PartialLatinSquare::empty(1)) == 1);
    CHECK(count_completions(PartialLatinSquare::empty(2), 10) == 2);
    CHECK(count_completions(PartialLatinSquare::empty(3), 100) == 12);
    CHECK(count_completions(PartialLatinSquare::empty(3), 5) == 5);
    CHECK(count_completions(PartialLatinSquare::empty(3)) == 2);  // default limit 2
    CHECK(count_completions(gen_back_circulant(4).partial()) == 1);

    // Against the plain backtracking oracle.
    for (int n = 2; n <= 4; ++n) {
        PartialLatinSquare p = PartialLatinSquare::empty(n);
        CHECK(count_completions(p, 1000) == oracle::count_completions_plain(p, 1000));
        PartialLatinSquare q = p.with({0, 0, 0});
        CHECK(count_completions(q, 1000) == oracle::count_completions_plain(q, 1000));
    }

    // An unfillable cell kills every completion.
    PartialLatinSquare stuck = PartialLatinSquare::from_triples(
        3, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    // Cell (0,2) needs 2 and cell (1,2) needs 2 as well: same column.
    CHECK(count_completions(stuck, 10) == 0);
    CHECK(oracle::count_completions_plain(stuck, 10) == 0);

    CHECK_THROWS_AS(count_completions(PartialLatinSquare::empty(65)), BudgetExceededError);
}

TEST_CASE("critical set predicate") {
    LatinSquare z2 = gen_elementary_abelian(1);
    CHECK(is_critical_set(PartialLatinSquare::from_triples(2, {{1, 1, 0}}), z2));
    CHECK_FALSE(is_critical_set(PartialLatinSquare::empty(2), z2));

    LatinSquare b3 = gen_back_circulant(3);
    CHECK(is_critical_set(PartialLatinSquare::from_triples(3, {{0, 0, 0}, {1, 1, 2}}), b3));
    // Unique completion can still fail minimality: the full square.
    CHECK_FALSE(is_critical_set(b3.partial(), b3));
    // Not uniquely completing.
    CHECK_FALSE(is_critical_set(PartialLatinSquare::from_triples(3, {{0, 0, 0}, {1, 0, 1}}), b3));

    CHECK_THROWS_AS(is_critical_set(PartialLatinSquare::from_triples(3, {{0, 0, 1}}), b3),
                    NotContainedError);
    CHECK_THROWS_AS(is_critical_set(PartialLatinSquare::empty(4), b3), OrderMismatchError);

    // Order 1: the empty set pins the unique square.
    CHECK(is_critical_set(PartialLatinSquare::empty(1), gen_back_circulant(1)));
}

TEST_CASE("order-8 fixture is critical") {
    LatinSquare l3 = gen_elementary_abelian(3);
    PartialLatinSquare p3 = p3_fixture();
    REQUIRE(p3.size() == 37);
    REQUIRE(l3.partial().contains(p3));
    CHECK(is_critical_set(p3, l3));
}

TEST_CASE("smallest critical sets of small squares") {
    CriticalSet c1 = smallest_critical_set(gen_back_circulant(1));
    CHECK(c1.entries.size() == 0);

    CriticalSet c2 = smallest_critical_set(gen_back_circulant(2));
    CHECK(c2.entries.triples() == std::vector<Triple>{{0, 0, 0}});

    CriticalSet c3 = smallest_critical_set(gen_back_circulant(3));
    CHECK(c3.entries.triples() == std::vector<Triple>{{0, 0, 0}, {1, 1, 2}});
    CHECK(c3.target == gen_back_circulant(3));

    CriticalSet c4 = smallest_critical_set(gen_back_circulant(4));
    CHECK(c4.entries.triples() ==
          std::vector<Triple>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {3, 3, 2}});

    // Results are critical sets by construction.
    CHECK(is_critical_set(c2.entries, gen_back_circulant(2)));
    CHECK(is_critical_set(c3.entries, gen_back_circulant(3)));
    CHECK(is_critical_set(c4.entries, gen_back_circulant(4)));

    CHECK_THROWS_AS(smallest_critical_set(gen_back_circulant(9)), BudgetExceededError);
}

TEST_CASE("trade coverage") {
    LatinSquare b3 = gen_back_circulant(3);
    std::vector<Trade> trades = enumerate_trades(b3);

    TradeCoverage good = check_trade_coverage(
        PartialLatinSquare::from_triples(3, {{0, 0, 0}, {1, 1, 2}}), trades);
    CHECK(good.all_hit);
    CHECK_FALSE(good.witness.has_value());

    TradeCoverage bad =
        check_trade_coverage(PartialLatinSquare::from_triples(3, {{0, 0, 0}}), trades);
    CHECK_FALSE(bad.all_hit);
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == 6);  // first trade missed: the {1,2} symbol pair
    CHECK_FALSE(trades[6].body.contains(Triple{0, 0, 0}));
    for (const Triple& t : trades[6].body.triples()) CHECK((t.sym == 1 || t.sym == 2));

    TradeCoverage empty = check_trade_coverage(PartialLatinSquare::empty(3), trades);
    CHECK_FALSE(empty.all_hit);
    CHECK(*empty.witness == 0);
}

TEST_CASE("critical set to vertex cover") {
    LatinSquare b3 = gen_back_circulant(3);
    std::vector<Trade> trades = enumerate_trades(b3);
    SimplicialComplex K = nerve_from_trades(trades, b3);

    PartialLatinSquare C = PartialLatinSquare::from_triples(3, {{0, 0, 0}, {1, 1, 2}});
    VertexCover cover = critical_to_cover(C, K, trades);
    CHECK(cover.vertices == std::vector<int>{0, 8});
    CHECK(cover.minimal);
    CHECK(is_minimal_vertex_cover(K, cover.vertices));

    // The empty candidate admits only the empty system, which covers nothing.
    CHECK_THROWS_AS(critical_to_cover(PartialLatinSquare::empty(3), K, trades),
                    NoCoveringSdrError);

    // An entry lying in no listed trade has an empty candidate set.
    std::vector<Trade> one = {trades[0]};
    SimplicialComplex K1 = nerve_from_trades(one, b3);
    try {
        critical_to_cover(PartialLatinSquare::from_triples(3, {{2, 2, 1}}), K1, one);
        FAIL("expected NoSdrError");
    } catch (const NoSdrError& e) {
        CHECK(e.entry_index == 0);
    }

    // No trades at all: the empty cover, trivially minimal.
    SimplicialComplex K0 = nerve_from_trades({}, b3);
    VertexCover empty_cover = critical_to_cover(C, K0, {});
    CHECK(empty_cover.vertices.empty());
    CHECK(empty_cover.minimal);
}

TEST_CASE("vertex cover to critical set") {
    LatinSquare b3 = gen_back_circulant(3);
    std::vector<Trade> trades = enumerate_trades(b3);
    SimplicialComplex K = nerve_from_trades(trades, b3);

    VertexCover cover;
    cover.vertices = {0, 8};
    cover.minimal = true;
    PartialLatinSquare C = cover_to_critical(cover, K, trades, b3);
    CHECK(C.triples() == std::vector<Triple>{{0, 0, 0}, {1, 1, 2}});
    CHECK(is_critical_set(C, b3));

    VertexCover fat;
    fat.vertices = {0, 1, 8};
    fat.minimal = false;
    CHECK_THROWS_AS(cover_to_critical(fat, K, trades, b3), NotMinimalCoverError);

    VertexCover thin;
    thin.vertices = {0};
    thin.minimal = false;
    CHECK_THROWS_AS(cover_to_critical(thin, K, trades, b3), NotMinimalCoverError);
}

TEST_CASE("order-3 correspondence is exhaustive") {
    LatinSquare b3 = gen_back_circulant(3);
    std::vector<Trade> trades = enumerate_trades(b3);
    SimplicialComplex K = nerve_from_trades(trades, b3);
    std::vector<Triple> all = b3.triples();

    // All critical sets of B3 by subset scan.
    std::vector<PartialLatinSquare> criticals;
    for (unsigned mask = 0; mask < 512u; ++mask) {
        std::vector<Triple> sub;
        for (int i = 0; i < 9; ++i)
            if ((mask >> i) & 1) sub.push_back(all[i]);
        PartialLatinSquare C = PartialLatinSquare::from_triples(3, sub);
        if (is_critical_set(C, b3)) criticals.push_back(C);
    }
    CHECK(criticals.size() == 27);

    std::vector<VertexCover> covers = minimal_vertex_covers(K);
    CHECK(covers.size() == 27);

    std::multiset<size_t> crit_sizes, cover_sizes;
    for (const auto& C : criticals) crit_sizes.insert(C.triples().size());
    for (const auto& S : covers) cover_sizes.insert(S.vertices.size());
    CHECK(crit_sizes == cover_sizes);

    // Both directions succeed with size preservation on every instance.
    for (const auto& C : criticals) {
        CHECK(check_trade_coverage(C, trades).all_hit);
        VertexCover S = critical_to_cover(C, K, trades);
        CHECK(S.vertices.size() == C.triples().size());
        CHECK(is_vertex_cover(K, S.vertices));
    }
    for (const auto& S : covers) {
        PartialLatinSquare C = cover_to_critical(S, K, trades, b3);
        CHECK(C.size() == static_cast<int>(S.vertices.size()));
        CHECK(is_critical_set(C, b3));
    }
}
