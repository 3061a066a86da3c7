#pragma once

#include <string>
#include <vector>

#include "ltt/complex.hpp"
#include "ltt/homology.hpp"
#include "ltt/latin.hpp"
#include "ltt/trades.hpp"

namespace ltt {

// JSON codecs for the on-disk formats. All serializers emit two-space
// indented JSON with sorted keys and a trailing newline, so identical inputs
// produce identical bytes.

// {"order": n, "trades": [[[r,c,e],...],...], "mates": [...]}
std::string trades_to_json(int order, const std::vector<Trade>& trades, bool include_mates = true);

// Accepts files with or without "mates"; when absent, mates are recomputed
// with find_disjoint_mate (deterministic). Validates every pair.
struct TradesFile {
    int order = 0;
    std::vector<Trade> trades;
};
TradesFile trades_from_json(const std::string& text);

// {"vertices": m, "labels": [...], "facets": [[...],...],
//  "facet_entries": [[r,c,e],...]} with one representative generating entry
// per facet (the lexicographically least; the in-memory complex keeps all).
// facet_entries is omitted for complexes without generator metadata.
std::string complex_to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const std::string& text);

// {"betti": [...], "torsion": [[...],...], "method": "...", "euler": x,
//  "f_vector": [...], "reduction": "..."}
std::string homology_to_json(const HomologyResult& result);

// {"cover": [...], "critical": [[r,c,e],...], "sizes_match": bool}
std::string cover_report_to_json(const std::vector<int>& cover,
                                 const std::vector<Triple>& critical,
                                 bool sizes_match);

} // namespace ltt
