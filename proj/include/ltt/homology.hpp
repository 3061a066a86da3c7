#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ltt/complex.hpp"
#include "ltt/errors.hpp"

namespace ltt {

// Sparse integer matrix in coordinate form. Entries carry no duplicates and
// no explicit zeros.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    struct Entry {
        int row;
        int col;
        long long value;
    };
    std::vector<Entry> entries;
};

// Boundary matrix of K in degree k (1 <= k <= dim): rows indexed by the
// (k-1)-faces, columns by the k-faces, both in lexicographic order; column
// of a face lists (-1)^i against the face with its i-th vertex dropped.
SparseIntMatrix boundary_matrix(const SimplicialComplex& K, int k);

struct SnfOptions {
    // Abort once any intermediate entry needs more bits than this.
    unsigned max_entry_bits = 65536;
};

// Invariant factors d_1 | d_2 | ... | d_r of M (positive, divisibility
// chain; r = rank). Exact over the integers; arbitrary-precision throughout.
// Throws BudgetExceededError when entries outgrow options.max_entry_bits.
std::vector<mpz_class> smith_normal_form(const SparseIntMatrix& M, const SnfOptions& options = {});

// Rank of M over GF(p). p must be an odd prime or 2; deterministic sparse
// elimination (dense bit-packed path for p = 2 when it fits in memory).
int rank_mod_p(const SparseIntMatrix& M, std::uint64_t p);

// Rank of M over the rationals (exact, GMP rationals).
int rank_rational(const SparseIntMatrix& M);

enum class HomologyMethod {
    ExactSnf,      // integer Smith normal form: Betti numbers and torsion
    RankModP,      // ranks over GF(p): Betti numbers valid absent p-torsion
    RationalRank,  // ranks over Q: Betti numbers, no torsion information
};

struct HomologyOptions {
    HomologyMethod method = HomologyMethod::ExactSnf;
    std::uint64_t prime = 2;  // for RankModP

    // Reduction pipeline: strong collapse always; when the face-count
    // estimate still exceeds reduce_trigger, pass to the facet nerve (and
    // collapse again) while that shrinks the estimate.
    bool reduce = true;
    double reduce_trigger = 5000.0;
    // Refuse to enumerate faces beyond this bound.
    double face_hard_limit = 50'000'000.0;

    SnfOptions snf;
};

struct HomologyResult {
    // Reduced Betti numbers, indexed 0..dim of the input complex. Empty for
    // the empty complex (whose only reduced homology lives in degree -1).
    std::vector<long long> betti;
    // torsion[k] lists the invariant factors > 1 of the degree-k reduced
    // homology group. Filled only by ExactSnf; empty lists otherwise.
    std::vector<std::vector<mpz_class>> torsion;
    std::string method;  // "exact-SNF", "rank-mod-p(p)", "rational-rank"
    bool empty_complex = false;

    // The complex the matrices were actually assembled from, after any
    // reductions; homotopy equivalent to the input.
    std::string reduction;  // "none", "collapse", "nerve+collapse", ...
    std::vector<long long> f_vector;
    long long euler = 0;
};

// Reduced simplicial homology of K. Betti numbers satisfy the alternating
// sum identity against the Euler characteristic by construction; this is
// asserted internally. Throws BudgetExceededError when the complex stays
// too large to enumerate after reduction.
HomologyResult reduced_homology(const SimplicialComplex& K, const HomologyOptions& options = {});

} // namespace ltt
