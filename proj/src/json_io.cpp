#include "ltt/json_io.hpp"

#include <json.hpp>

namespace ltt {

namespace {

using nlohmann::json;

json triples_to_json(const std::vector<Triple>& ts) {
    json out = json::array();
    for (const Triple& t : ts) out.push_back({t.row, t.col, t.sym});
    return out;
}

std::vector<Triple> triples_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(0, 0, std::string(what) + " must be an array");
    std::vector<Triple> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
            !e[1].is_number_integer() || !e[2].is_number_integer())
            throw ParseError(0, 0, std::string(what) + " entries must be [row, col, sym]");
        out.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(0, 0, e.what());
    }
}

} // namespace

std::string trades_to_json(int order, const std::vector<Trade>& trades, bool include_mates) {
    json out;
    out["order"] = order;
    json list = json::array();
    for (const Trade& t : trades) list.push_back(triples_to_json(t.body.triples()));
    out["trades"] = std::move(list);
    if (include_mates) {
        json mates = json::array();
        for (const Trade& t : trades) mates.push_back(triples_to_json(t.mate.triples()));
        out["mates"] = std::move(mates);
    }
    return dump(out);
}

TradesFile trades_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("order") || !j.contains("trades"))
        throw ParseError(0, 0, "expected an object with \"order\" and \"trades\"");
    TradesFile out;
    out.order = j["order"].get<int>();
    if (out.order < 1 || out.order > kOrderCap) throw OrderTooLargeError(out.order, kOrderCap);

    const json& bodies = j["trades"];
    if (!bodies.is_array()) throw ParseError(0, 0, "\"trades\" must be an array");
    const json* mates = j.contains("mates") ? &j["mates"] : nullptr;
    if (mates && (!mates->is_array() || mates->size() != bodies.size()))
        throw ParseError(0, 0, "\"mates\" must parallel \"trades\"");

    for (std::size_t i = 0; i < bodies.size(); ++i) {
        auto body = PartialLatinSquare::from_triples(out.order, triples_from_json(bodies[i], "trade"));
        PartialLatinSquare mate = PartialLatinSquare::empty(out.order);
        if (mates) {
            mate = PartialLatinSquare::from_triples(out.order, triples_from_json((*mates)[i], "mate"));
            if (!is_bitrade(body, mate))
                throw InvalidBitradeError("trade " + std::to_string(i) + " and its mate are not a bitrade");
        } else {
            auto found = find_disjoint_mate(body);
            if (!found)
                throw InvalidBitradeError("trade " + std::to_string(i) + " admits no disjoint mate");
            mate = std::move(*found);
        }
        out.trades.push_back({std::move(body), std::move(mate)});
    }
    return out;
}

std::string complex_to_json(const SimplicialComplex& K) {
    json out;
    out["vertices"] = K.vertex_count();
    out["labels"] = K.labels();
    json facets = json::array();
    for (const auto& f : K.facets()) facets.push_back(f);
    out["facets"] = std::move(facets);
    if (!K.generators().empty()) {
        json entries = json::array();
        for (const auto& gens : K.generators()) {
            const Triple& t = gens.front();  // lexicographically least generator
            entries.push_back({t.row, t.col, t.sym});
        }
        out["facet_entries"] = std::move(entries);
    }
    return dump(out);
}

SimplicialComplex complex_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw ParseError(0, 0, "expected an object with \"vertices\" and \"facets\"");
    int vertices = j["vertices"].get<int>();
    std::vector<std::vector<int>> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw ParseError(0, 0, "facets must be arrays of vertex ids");
        facets.push_back(f.get<std::vector<int>>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return SimplicialComplex::from_facets(vertices, std::move(facets), std::move(labels));
}

std::string homology_to_json(const HomologyResult& result) {
    json out;
    out["betti"] = result.betti;
    json torsion = json::array();
    for (const auto& dim : result.torsion) {
        json factors = json::array();
        for (const auto& d : dim) factors.push_back(d.get_str());
        torsion.push_back(std::move(factors));
    }
    out["torsion"] = std::move(torsion);
    out["method"] = result.method;
    out["euler"] = result.euler;
    out["f_vector"] = result.f_vector;
    out["reduction"] = result.reduction;
    return dump(out);
}

std::string cover_report_to_json(const std::vector<int>& cover,
                                 const std::vector<Triple>& critical, bool sizes_match) {
    json out;
    out["cover"] = cover;
    out["critical"] = triples_to_json(critical);
    out["sizes_match"] = sizes_match;
    return dump(out);
}

} // namespace ltt
