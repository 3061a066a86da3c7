#pragma once

#include <string>
#include <vector>

#include "ltt/budget.hpp"
#include "ltt/latin.hpp"
#include "ltt/trades.hpp"

namespace ltt {

// Finite abstract simplicial complex, stored by its facets (inclusion-maximal
// faces). Vertices are 0..vertex_count-1; every vertex lies in at least one
// facet. Facets hold sorted vertex ids and the list is kept as a sorted
// antichain, so equal complexes compare equal. Instances are immutable.
class SimplicialComplex {
public:
    // Normalizes: sorts each facet, drops duplicates and faces contained in
    // another facet. Throws InvalidComplexError on an out-of-range id, an
    // empty facet, or a vertex in no facet.
    static SimplicialComplex from_facets(int vertex_count,
                                         std::vector<std::vector<int>> facets,
                                         std::vector<std::string> labels = {});

    static SimplicialComplex empty_complex() { return SimplicialComplex(); }

    int vertex_count() const { return vertex_count_; }
    int dim() const { return dim_; }  // -1 for the empty complex
    bool is_empty() const { return vertex_count_ == 0; }

    const std::vector<std::vector<int>>& facets() const { return facets_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // For a complex built by nerve_from_trades: the entries of the host
    // square generating each facet (facet i = set of trades through any of
    // generators()[i]). Empty for complexes built any other way.
    const std::vector<std::vector<Triple>>& generators() const { return generators_; }

    // All k-faces in lexicographic order. Built per layer from the facets.
    // Throws DimensionOutOfRangeError unless 0 <= k <= dim().
    std::vector<std::vector<int>> faces(int k) const;

    // (f_0, ..., f_dim); empty for the empty complex.
    std::vector<long long> f_vector() const;
    long long euler_characteristic() const;

    // Upper bound on the total face count: sum over facets of 2^|F|-1,
    // saturating. Cheap feasibility probe for the enumeration above.
    double face_count_estimate() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertex_count_ == b.vertex_count_ && a.facets_ == b.facets_;
    }

private:
    SimplicialComplex() = default;

    int vertex_count_ = 0;
    int dim_ = -1;
    std::vector<std::vector<int>> facets_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Triple>> generators_;

    friend SimplicialComplex nerve_from_trades(const std::vector<Trade>&, const LatinSquare&);
};

// Nerve of the trade family over the entries of L: one vertex per trade, and
// for each entry x of L the candidate face {trades containing x}; facets are
// the inclusion-maximal candidates. Labels are "T0", "T1", ... in input
// order. Throws TradeNotContainedError if some trade is not a subset of L.
SimplicialComplex nerve_from_trades(const std::vector<Trade>& trades, const LatinSquare& L);

// A set of vertices meeting every facet.
struct VertexCover {
    std::vector<int> vertices;  // sorted
    bool minimal = false;       // no proper subset is itself a cover
};

// All inclusion-minimal vertex covers (minimal transversals of the facet
// hypergraph), sorted by size then lexicographically. For a complex with no
// facets the empty cover is the unique answer. Branch-and-bound on the
// smallest uncovered facet; the budget caps the search.
std::vector<VertexCover> minimal_vertex_covers(const SimplicialComplex& K,
                                               const SearchBudget& budget = {});

bool is_vertex_cover(const SimplicialComplex& K, const std::vector<int>& vertices);
bool is_minimal_vertex_cover(const SimplicialComplex& K, const std::vector<int>& vertices);

// Homotopy-preserving reductions used by the homology engine; exposed for
// testing and for direct use on large complexes.

// Repeatedly deletes dominated vertices (v is dominated when some other
// vertex u lies in every facet containing v). Preserves homotopy type.
SimplicialComplex strong_collapse(const SimplicialComplex& K);

// Nerve of the facet cover: one vertex per facet of K, one facet per
// inclusion-maximal vertex star {facets through v}. Facet intersections in K
// are faces, hence contractible when nonempty, so the nerve is homotopy
// equivalent to K. Swaps the roles of "many vertices" and "few facets".
SimplicialComplex facet_nerve(const SimplicialComplex& K);

} // namespace ltt
