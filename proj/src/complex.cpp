#include "ltt/complex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace ltt {

namespace {

// Sorts, dedupes, and drops every face contained in another; the result is
// a sorted antichain. Only strictly larger faces can contain a face, so the
// domination scan walks a size-descending order and stops early.
std::vector<std::vector<int>> maximalize(std::vector<std::vector<int>> faces) {
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    std::vector<const std::vector<int>*> by_size;
    by_size.reserve(faces.size());
    for (const auto& f : faces) by_size.push_back(&f);
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](const auto* a, const auto* b) { return a->size() > b->size(); });

    std::vector<std::vector<int>> keep;
    for (const auto& f : faces) {
        bool dominated = false;
        for (const auto* other : by_size) {
            if (other->size() <= f.size()) break;
            if (std::includes(other->begin(), other->end(), f.begin(), f.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) keep.push_back(f);
    }
    return keep;
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(int vertex_count,
                                                 std::vector<std::vector<int>> facets,
                                                 std::vector<std::string> labels) {
    if (vertex_count < 0) throw InvalidComplexError("negative vertex count");
    for (const auto& f : facets) {
        if (f.empty()) throw InvalidComplexError("empty facet");
        for (int v : f)
            if (v < 0 || v >= vertex_count)
                throw InvalidComplexError("vertex id " + std::to_string(v) + " outside 0.." +
                                          std::to_string(vertex_count - 1));
    }

    SimplicialComplex K;
    K.vertex_count_ = vertex_count;
    K.facets_ = maximalize(std::move(facets));

    std::vector<char> seen(vertex_count, 0);
    for (const auto& f : K.facets_)
        for (int v : f) seen[v] = 1;
    for (int v = 0; v < vertex_count; ++v)
        if (!seen[v])
            throw InvalidComplexError("vertex " + std::to_string(v) + " lies in no facet");

    K.dim_ = -1;
    for (const auto& f : K.facets_)
        K.dim_ = std::max(K.dim_, static_cast<int>(f.size()) - 1);

    if (labels.empty()) {
        K.labels_.reserve(vertex_count);
        for (int v = 0; v < vertex_count; ++v) K.labels_.push_back("v" + std::to_string(v));
    } else {
        if (static_cast<int>(labels.size()) != vertex_count)
            throw InvalidComplexError("label count does not match vertex count");
        K.labels_ = std::move(labels);
    }
    return K;
}

std::vector<std::vector<int>> SimplicialComplex::faces(int k) const {
    if (k < 0 || k > dim_) throw DimensionOutOfRangeError(k, dim_);
    std::size_t want = static_cast<std::size_t>(k) + 1;

    std::vector<std::vector<int>> out;
    std::vector<int> pick(want);
    for (const auto& f : facets_) {
        if (f.size() < want) continue;
        // standard index-combination walk over the sorted facet
        std::vector<std::size_t> idx(want);
        for (std::size_t i = 0; i < want; ++i) idx[i] = i;
        while (true) {
            for (std::size_t i = 0; i < want; ++i) pick[i] = f[idx[i]];
            out.push_back(pick);
            std::size_t i = want;
            while (i > 0 && idx[i - 1] == f.size() - want + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < want; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f;
    for (int k = 0; k <= dim_; ++k) f.push_back(static_cast<long long>(faces(k).size()));
    return f;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    int sign = 1;
    for (long long fk : f_vector()) {
        chi += sign * fk;
        sign = -sign;
    }
    return chi;
}

double SimplicialComplex::face_count_estimate() const {
    double total = 0;
    for (const auto& f : facets_) total += std::ldexp(1.0, static_cast<int>(f.size())) - 1.0;
    return total;
}

SimplicialComplex nerve_from_trades(const std::vector<Trade>& trades, const LatinSquare& L) {
    int n = L.order();
    for (const Trade& t : trades)
        for (const Triple& x : t.body.triples())
            if (L.at(x.row, x.col) != x.sym) throw TradeNotContainedError(x.row, x.col);

    // candidate face per entry of L: the trades through that entry
    std::vector<std::vector<int>> through(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < static_cast<int>(trades.size()); ++i)
        for (const Triple& x : trades[i].body.triples())
            through[static_cast<std::size_t>(x.row) * n + x.col].push_back(i);

    // group entries generating the same candidate
    std::map<std::vector<int>, std::vector<Triple>> candidates;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            auto& list = through[static_cast<std::size_t>(r) * n + c];
            if (!list.empty()) candidates[list].push_back({r, c, L.at(r, c)});
        }

    // keep the inclusion-maximal candidates; only strictly larger ones can
    // dominate, so bucket by size
    std::vector<const std::vector<int>*> by_size;
    for (const auto& entry : candidates) by_size.push_back(&entry.first);
    std::sort(by_size.begin(), by_size.end(),
              [](const auto* a, const auto* b) { return a->size() > b->size(); });

    std::vector<std::pair<std::vector<int>, std::vector<Triple>>> maximal;
    for (const auto& [face, gens] : candidates) {
        bool dominated = false;
        for (const auto* other : by_size) {
            if (other->size() <= face.size()) break;
            if (std::includes(other->begin(), other->end(), face.begin(), face.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.emplace_back(face, gens);
    }
    std::sort(maximal.begin(), maximal.end());

    std::vector<std::vector<int>> facets;
    std::vector<std::vector<Triple>> generators;
    for (auto& [face, gens] : maximal) {
        std::sort(gens.begin(), gens.end());
        facets.push_back(std::move(face));
        generators.push_back(std::move(gens));
    }

    std::vector<std::string> labels;
    labels.reserve(trades.size());
    for (std::size_t i = 0; i < trades.size(); ++i) labels.push_back("T" + std::to_string(i));

    auto K = SimplicialComplex::from_facets(static_cast<int>(trades.size()), facets, std::move(labels));
    K.generators_ = std::move(generators);
    return K;
}

bool is_vertex_cover(const SimplicialComplex& K, const std::vector<int>& vertices) {
    std::set<int> s(vertices.begin(), vertices.end());
    for (const auto& f : K.facets()) {
        bool hit = false;
        for (int v : f)
            if (s.count(v)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

bool is_minimal_vertex_cover(const SimplicialComplex& K, const std::vector<int>& vertices) {
    std::set<int> s(vertices.begin(), vertices.end());
    if (!is_vertex_cover(K, vertices)) return false;
    // every chosen vertex must be the only chosen one in some facet
    for (int v : s) {
        bool needed = false;
        for (const auto& f : K.facets()) {
            int chosen_in_f = 0;
            bool v_in_f = false;
            for (int u : f) {
                if (s.count(u)) ++chosen_in_f;
                if (u == v) v_in_f = true;
            }
            if (v_in_f && chosen_in_f == 1) {
                needed = true;
                break;
            }
        }
        if (!needed) return false;
    }
    return true;
}

namespace {

struct CoverSearch {
    const std::vector<std::vector<int>>* facets;
    BudgetMeter* meter;
    std::set<int> chosen;
    std::set<std::vector<int>> found;

    void dfs() {
        meter->tick();
        const std::vector<int>* open = nullptr;
        for (const auto& f : *facets) {
            bool hit = false;
            for (int v : f)
                if (chosen.count(v)) {
                    hit = true;
                    break;
                }
            if (!hit && (!open || f.size() < open->size())) open = &f;
        }
        if (!open) {
            found.emplace(chosen.begin(), chosen.end());
            return;
        }
        for (int v : *open) {
            chosen.insert(v);
            dfs();
            chosen.erase(v);
        }
    }
};

} // namespace

std::vector<VertexCover> minimal_vertex_covers(const SimplicialComplex& K, const SearchBudget& budget) {
    if (K.facets().empty()) return {VertexCover{{}, true}};

    BudgetMeter meter(budget, "vertex cover enumeration");
    CoverSearch s{&K.facets(), &meter, {}, {}};
    s.dfs();

    std::vector<VertexCover> out;
    for (const auto& cover : s.found)
        if (is_minimal_vertex_cover(K, cover)) out.push_back({cover, true});
    std::sort(out.begin(), out.end(), [](const VertexCover& a, const VertexCover& b) {
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });
    return out;
}

namespace {

using Mask = std::vector<std::uint64_t>;

bool mask_subset(const Mask& a, const Mask& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

} // namespace

SimplicialComplex strong_collapse(const SimplicialComplex& K) {
    if (K.is_empty()) return K;

    int n = K.vertex_count();
    std::vector<std::vector<int>> facets = K.facets();
    std::vector<char> alive(n, 1);

    while (true) {
        std::size_t words = (facets.size() + 63) / 64;
        std::vector<Mask> mask(n, Mask(words, 0));
        std::vector<int> home(n, -1);  // some facet through each vertex
        for (std::size_t j = 0; j < facets.size(); ++j)
            for (int v : facets[j]) {
                mask[v][j / 64] |= std::uint64_t(1) << (j % 64);
                home[v] = static_cast<int>(j);
            }

        // v goes when some other live vertex u sits in every facet through v;
        // any such u shares v's home facet, so only that facet is scanned.
        // For equal stars the smaller id survives.
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || home[v] < 0) continue;
            for (int u : facets[home[v]]) {
                if (u == v || !alive[u]) continue;
                if (!mask_subset(mask[v], mask[u])) continue;
                if (mask[v] == mask[u] && u > v) continue;
                alive[v] = 0;
                changed = true;
                break;
            }
        }
        if (!changed) break;

        std::vector<std::vector<int>> projected;
        for (const auto& f : facets) {
            std::vector<int> g;
            for (int v : f)
                if (alive[v]) g.push_back(v);
            if (!g.empty()) projected.push_back(std::move(g));
        }
        facets = maximalize(std::move(projected));
    }

    std::vector<int> new_id(n, -1);
    std::vector<std::string> labels;
    int m = 0;
    for (int v = 0; v < n; ++v)
        if (alive[v]) {
            new_id[v] = m++;
            labels.push_back(K.labels()[v]);
        }
    for (auto& f : facets)
        for (int& v : f) v = new_id[v];
    return SimplicialComplex::from_facets(m, std::move(facets), std::move(labels));
}

SimplicialComplex facet_nerve(const SimplicialComplex& K) {
    if (K.is_empty()) return K;

    int m = static_cast<int>(K.facets().size());
    // star of each vertex, as a set of facet ids
    std::vector<std::vector<int>> stars(K.vertex_count());
    for (int j = 0; j < m; ++j)
        for (int v : K.facets()[j]) stars[v].push_back(j);

    std::vector<std::string> labels;
    labels.reserve(m);
    for (int j = 0; j < m; ++j) labels.push_back("F" + std::to_string(j));
    return SimplicialComplex::from_facets(m, maximalize(std::move(stars)), std::move(labels));
}

} // namespace ltt
