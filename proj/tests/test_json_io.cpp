#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "ltt/complex.hpp"
#include "ltt/errors.hpp"
#include "ltt/homology.hpp"
#include "ltt/json_io.hpp"
#include "ltt/latin.hpp"
#include "ltt/trades.hpp"

using namespace ltt;

TEST_CASE("trades round trip with mates") {
    LatinSquare b3 = gen_back_circulant(3);
    std::vector<Trade> trades = enumerate_trades(b3);
    REQUIRE(trades.size() == 9);

    std::string text = trades_to_json(3, trades);
    TradesFile file = trades_from_json(text);
    CHECK(file.order == 3);
    REQUIRE(file.trades.size() == trades.size());
    for (std::size_t i = 0; i < trades.size(); ++i) {
        CHECK(file.trades[i].body == trades[i].body);
        CHECK(file.trades[i].mate == trades[i].mate);
    }

    // Serialization is deterministic, and a reparse serializes identically.
    CHECK(trades_to_json(3, trades) == text);
    CHECK(trades_to_json(file.order, file.trades) == text);

    // Empty list round trips too.
    TradesFile none = trades_from_json(trades_to_json(5, {}));
    CHECK(none.order == 5);
    CHECK(none.trades.empty());
}

TEST_CASE("trades without mates recompute them") {
    LatinSquare b3 = gen_back_circulant(3);
    std::vector<Trade> trades = enumerate_trades(b3);

    std::string text = trades_to_json(3, trades, false);
    auto parsed = nlohmann::json::parse(text);
    CHECK_FALSE(parsed.contains("mates"));

    TradesFile file = trades_from_json(text);
    REQUIRE(file.trades.size() == trades.size());
    for (std::size_t i = 0; i < trades.size(); ++i) {
        CHECK(file.trades[i].body == trades[i].body);
        // recomputed mate is the lexicographically least disjoint mate
        CHECK(file.trades[i].mate == *find_disjoint_mate(trades[i].body));
    }
}

TEST_CASE("trades file validation") {
    CHECK_THROWS_AS(trades_from_json("{"), ParseError);
    CHECK_THROWS_AS(trades_from_json("[]\n"), ParseError);
    CHECK_THROWS_AS(trades_from_json("{\"order\": 3}\n"), ParseError);
    CHECK_THROWS_AS(trades_from_json("{\"order\": 0, \"trades\": []}\n"), OrderTooLargeError);
    CHECK_THROWS_AS(trades_from_json("{\"order\": 3, \"trades\": [[[0,0]]]}\n"), ParseError);
    CHECK_THROWS_AS(
        trades_from_json("{\"order\": 3, \"trades\": [[[0,0,0]]], \"mates\": []}\n"),
        ParseError);
    // a single entry admits no disjoint mate
    CHECK_THROWS_AS(trades_from_json("{\"order\": 3, \"trades\": [[[0,0,0]]]}\n"),
                    InvalidBitradeError);
    // a declared mate that is not one
    CHECK_THROWS_AS(
        trades_from_json(
            "{\"order\": 3, \"trades\": [[[0,0,0]]], \"mates\": [[[0,0,1]]]}\n"),
        InvalidBitradeError);
    // bodies themselves are validated as partial squares
    CHECK_THROWS_AS(trades_from_json("{\"order\": 3, \"trades\": [[[0,0,0],[0,1,0]]]}\n"),
                    RowDuplicateError);
}

TEST_CASE("complex round trip") {
    SimplicialComplex tri = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}},
                                                           {"a", "b", "c"});
    std::string text = complex_to_json(tri);
    SimplicialComplex back = complex_from_json(text);
    CHECK(back == tri);
    CHECK(back.labels() == tri.labels());
    CHECK(complex_to_json(back) == text);

    auto parsed = nlohmann::json::parse(text);
    CHECK(parsed["vertices"] == 3);
    CHECK_FALSE(parsed.contains("facet_entries"));

    // default labels survive the trip
    SimplicialComplex plain = SimplicialComplex::from_facets(2, {{0, 1}});
    SimplicialComplex plain_back = complex_from_json(complex_to_json(plain));
    CHECK(plain_back.labels() == std::vector<std::string>{"v0", "v1"});
}

TEST_CASE("nerve complexes serialize facet entries") {
    LatinSquare b3 = gen_back_circulant(3);
    std::vector<Trade> trades = enumerate_trades(b3);
    SimplicialComplex K = nerve_from_trades(trades, b3);

    std::string text = complex_to_json(K);
    auto parsed = nlohmann::json::parse(text);
    REQUIRE(parsed.contains("facet_entries"));
    REQUIRE(parsed["facet_entries"].size() == K.facets().size());
    for (std::size_t i = 0; i < K.facets().size(); ++i) {
        const Triple& least = K.generators()[i].front();
        CHECK(parsed["facet_entries"][i] ==
              nlohmann::json({least.row, least.col, least.sym}));
    }

    // the facet structure survives; the entry metadata is one-way
    SimplicialComplex back = complex_from_json(text);
    CHECK(back == K);
    CHECK(back.labels() == K.labels());
    CHECK(back.generators().empty());
}

TEST_CASE("complex file validation") {
    CHECK_THROWS_AS(complex_from_json("not json"), ParseError);
    CHECK_THROWS_AS(complex_from_json("{\"vertices\": 2}\n"), ParseError);
    CHECK_THROWS_AS(complex_from_json("{\"vertices\": 2, \"facets\": [0]}\n"), ParseError);
    CHECK_THROWS_AS(complex_from_json("{\"vertices\": 2, \"facets\": [[0, 5]]}\n"),
                    InvalidComplexError);
}

TEST_CASE("homology report fields") {
    // triangulated projective plane: the torsion coefficient exercises the
    // string encoding of invariant factors
    SimplicialComplex rp2 = SimplicialComplex::from_facets(
        6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
            {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
    HomologyResult h = reduced_homology(rp2);
    auto parsed = nlohmann::json::parse(homology_to_json(h));

    CHECK(parsed["betti"] == nlohmann::json({0, 0, 0}));
    CHECK(parsed["torsion"].size() == 3);
    CHECK(parsed["torsion"][0].empty());
    CHECK(parsed["torsion"][1] == nlohmann::json({"2"}));
    CHECK(parsed["method"] == "exact-SNF");
    CHECK(parsed["euler"] == 1);
    CHECK(parsed["reduction"].is_string());
    REQUIRE(parsed["f_vector"].is_array());
    long long euler = 0, sign = 1;
    for (const auto& f : parsed["f_vector"]) {
        euler += sign * f.get<long long>();
        sign = -sign;
    }
    CHECK(euler == parsed["euler"].get<long long>());

    CHECK(homology_to_json(h) == homology_to_json(h));
}

TEST_CASE("cover report shape") {
    std::string text =
        cover_report_to_json({0, 8}, {{0, 0, 0}, {1, 1, 2}}, true);
    auto parsed = nlohmann::json::parse(text);
    CHECK(parsed["cover"] == nlohmann::json({0, 8}));
    CHECK(parsed["critical"] == nlohmann::json({{0, 0, 0}, {1, 1, 2}}));
    CHECK(parsed["sizes_match"] == true);
    CHECK(text.back() == '\n');
    CHECK(cover_report_to_json({0, 8}, {{0, 0, 0}, {1, 1, 2}}, true) == text);
}
