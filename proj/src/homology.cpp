#include "ltt/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <utility>

namespace ltt {

SparseIntMatrix boundary_matrix(const SimplicialComplex& K, int k) {
    if (k < 1 || k > K.dim()) throw DimensionOutOfRangeError(k, K.dim());
    auto lower = K.faces(k - 1);
    auto upper = K.faces(k);

    SparseIntMatrix M;
    M.rows = static_cast<int>(lower.size());
    M.cols = static_cast<int>(upper.size());
    M.entries.reserve(upper.size() * (k + 1));

    std::vector<int> sub;
    sub.reserve(k);
    for (int j = 0; j < static_cast<int>(upper.size()); ++j) {
        const auto& face = upper[j];
        int sign = 1;
        for (int drop = 0; drop <= k; ++drop) {
            sub.clear();
            for (int i = 0; i <= k; ++i)
                if (i != drop) sub.push_back(face[i]);
            auto it = std::lower_bound(lower.begin(), lower.end(), sub);
            M.entries.push_back({static_cast<int>(it - lower.begin()), j, static_cast<long long>(sign)});
            sign = -sign;
        }
    }
    return M;
}

namespace {

[[noreturn]] void engine_fault(const std::string& msg) { throw Error("Internal", msg); }

// ---- exact Smith normal form ----

struct SnfWorker {
    int nrows, ncols;
    unsigned max_bits;
    std::vector<std::map<int, mpz_class>> rows;
    std::vector<std::set<int>> col_rows;

    SnfWorker(const SparseIntMatrix& M, unsigned max_bits)
        : nrows(M.rows), ncols(M.cols), max_bits(max_bits), rows(M.rows), col_rows(M.cols) {
        for (const auto& e : M.entries) {
            if (e.value == 0) continue;
            mpz_class v(static_cast<long>(e.value));
            if (mpz_sizeinbase(v.get_mpz_t(), 2) > max_bits)
                throw BudgetExceededError("Smith normal form: entry exceeded " +
                                          std::to_string(max_bits) + " bits");
            auto [it, fresh] = rows[e.row].try_emplace(e.col, std::move(v));
            if (!fresh) engine_fault("duplicate sparse entry");
            col_rows[e.col].insert(e.row);
        }
    }

    const mpz_class* get(int r, int c) const {
        auto it = rows[r].find(c);
        return it == rows[r].end() ? nullptr : &it->second;
    }

    void set_entry(int r, int c, mpz_class v) {
        if (v == 0) {
            rows[r].erase(c);
            col_rows[c].erase(r);
        } else {
            if (mpz_sizeinbase(v.get_mpz_t(), 2) > max_bits)
                throw BudgetExceededError("Smith normal form: entry exceeded " +
                                          std::to_string(max_bits) + " bits");
            rows[r][c] = std::move(v);
            col_rows[c].insert(r);
        }
    }

    // row r -= q * row p  (r != p)
    void row_axpy(int r, int p, const mpz_class& q) {
        if (q == 0) return;
        for (const auto& [c, v] : rows[p]) {
            const mpz_class* cur = get(r, c);
            set_entry(r, c, (cur ? *cur : mpz_class(0)) - q * v);
        }
    }

    std::vector<mpz_class> run() {
        std::vector<mpz_class> divisors;
        while (true) {
            // pivot: smallest |value|, then least fill, then position
            int pr = -1, pc = -1;
            mpz_class best_abs;
            long long best_fill = 0;
            for (int r = 0; r < nrows; ++r) {
                for (const auto& [c, v] : rows[r]) {
                    mpz_class a = abs(v);
                    long long fill = (static_cast<long long>(rows[r].size()) - 1) *
                                     (static_cast<long long>(col_rows[c].size()) - 1);
                    if (pr < 0 || a < best_abs || (a == best_abs && fill < best_fill)) {
                        pr = r;
                        pc = c;
                        best_abs = a;
                        best_fill = fill;
                    }
                }
            }
            if (pr < 0) break;

            // clear the pivot column and row, migrating the pivot to any
            // nonzero remainder (its magnitude strictly shrinks)
            while (true) {
                bool column_restart = false;
                do {
                    column_restart = false;
                    std::vector<int> in_col(col_rows[pc].begin(), col_rows[pc].end());
                    for (int r : in_col) {
                        if (r == pr) continue;
                        const mpz_class* pv = get(pr, pc);
                        const mpz_class* rv = get(r, pc);
                        if (!rv) continue;
                        mpz_class q = *rv / *pv;  // truncated; remainder below |pivot|
                        row_axpy(r, pr, q);
                        if (get(r, pc)) {
                            pr = r;
                            column_restart = true;
                            break;
                        }
                    }
                } while (column_restart);

                // the column holds only the pivot now, so eliminating the
                // pivot row by column operations touches row pr alone
                bool row_clean = true;
                std::vector<int> in_row;
                for (const auto& [c, v] : rows[pr])
                    if (c != pc) in_row.push_back(c);
                for (int c : in_row) {
                    const mpz_class pivot = *get(pr, pc);
                    const mpz_class v = *get(pr, c);
                    mpz_class q = v / pivot;
                    set_entry(pr, c, v - q * pivot);
                    if (get(pr, c)) {
                        pc = c;  // remainder becomes the new, smaller pivot
                        row_clean = false;
                        break;
                    }
                }
                if (!row_clean) continue;

                const mpz_class pivot = *get(pr, pc);
                if (pivot == 1 || pivot == -1) break;

                // divisibility: the pivot must divide every remaining entry
                int bad = -1;
                for (int r = 0; r < nrows && bad < 0; ++r) {
                    if (r == pr) continue;
                    for (const auto& [c, v] : rows[r])
                        if (!mpz_divisible_p(v.get_mpz_t(), pivot.get_mpz_t())) {
                            bad = r;
                            break;
                        }
                }
                if (bad < 0) break;
                row_axpy(pr, bad, mpz_class(-1));  // pull the offending row in
            }

            divisors.push_back(abs(*get(pr, pc)));
            set_entry(pr, pc, 0);
        }

        for (std::size_t i = 0; i + 1 < divisors.size(); ++i)
            if (!mpz_divisible_p(divisors[i + 1].get_mpz_t(), divisors[i].get_mpz_t()))
                engine_fault("invariant factors fail the divisibility chain");
        return divisors;
    }
};

} // namespace

std::vector<mpz_class> smith_normal_form(const SparseIntMatrix& M, const SnfOptions& options) {
    return SnfWorker(M, options.max_entry_bits).run();
}

namespace {

SparseIntMatrix transpose(const SparseIntMatrix& M) {
    SparseIntMatrix T;
    T.rows = M.cols;
    T.cols = M.rows;
    T.entries.reserve(M.entries.size());
    for (const auto& e : M.entries) T.entries.push_back({e.col, e.row, e.value});
    return T;
}

std::vector<std::vector<std::pair<int, long long>>> rows_mod_p(const SparseIntMatrix& M,
                                                               std::uint64_t p) {
    std::vector<std::vector<std::pair<int, long long>>> rows(M.rows);
    for (const auto& e : M.entries) {
        long long v = e.value % static_cast<long long>(p);
        if (v < 0) v += static_cast<long long>(p);
        if (v) rows[e.row].emplace_back(e.col, v);
    }
    for (auto& r : rows) std::sort(r.begin(), r.end());
    return rows;
}

long long inverse_mod_p(long long a, long long p) {
    long long t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) engine_fault("modulus is not prime to the pivot");
    return t < 0 ? t + p : t;
}

int dense_rank_gf2(const SparseIntMatrix& M) {
    int rows = M.rows, cols = M.cols;
    std::size_t words = (static_cast<std::size_t>(cols) + 63) / 64;

    std::vector<std::vector<int>> row_cols(rows);
    for (const auto& e : M.entries)
        if (e.value & 1) row_cols[e.row].push_back(e.col);

    std::vector<int> pivot_of_col(cols, -1);
    std::vector<std::vector<std::uint64_t>> pivots;
    std::vector<std::uint64_t> work(words);

    int rank = 0;
    for (int r = 0; r < rows; ++r) {
        if (row_cols[r].empty()) continue;
        std::fill(work.begin(), work.end(), 0);
        for (int c : row_cols[r]) work[c / 64] ^= std::uint64_t(1) << (c % 64);

        while (true) {
            int lead = -1;
            for (std::size_t w = 0; w < words; ++w)
                if (work[w]) {
                    lead = static_cast<int>(w * 64 + std::countr_zero(work[w]));
                    break;
                }
            if (lead < 0) break;
            int pivot = pivot_of_col[lead];
            if (pivot < 0) {
                pivot_of_col[lead] = static_cast<int>(pivots.size());
                pivots.push_back(work);
                ++rank;
                break;
            }
            const auto& pv = pivots[pivot];
            for (std::size_t w = lead / 64; w < words; ++w) work[w] ^= pv[w];
        }
    }
    return rank;
}

int sparse_rank_mod_p(const SparseIntMatrix& M, std::uint64_t p) {
    auto rows = rows_mod_p(M, p);
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });

    std::unordered_map<int, int> pivot_of_col;
    std::vector<std::vector<std::pair<int, long long>>> pivots;
    const long long pp = static_cast<long long>(p);

    // total merge work cap; boundary matrices can fill in badly and this
    // fails loudly instead of spinning
    std::uint64_t ops = 0;
    const std::uint64_t ops_cap = 20'000'000'000ull;

    int rank = 0;
    std::vector<std::pair<int, long long>> merged;
    for (auto& row : rows) {
        auto cur = std::move(row);
        while (!cur.empty()) {
            auto [lead_col, lead_val] = cur.front();
            auto it = pivot_of_col.find(lead_col);
            if (it == pivot_of_col.end()) {
                long long inv = inverse_mod_p(lead_val, pp);
                for (auto& [c, v] : cur) v = v * inv % pp;
                pivot_of_col.emplace(lead_col, static_cast<int>(pivots.size()));
                pivots.push_back(std::move(cur));
                ++rank;
                break;
            }
            const auto& pv = pivots[it->second];
            long long factor = pp - lead_val;  // pivot lead is 1
            merged.clear();
            std::size_t i = 0, j = 0;
            while (i < cur.size() || j < pv.size()) {
                if (j == pv.size() || (i < cur.size() && cur[i].first < pv[j].first)) {
                    merged.push_back(cur[i++]);
                } else if (i == cur.size() || pv[j].first < cur[i].first) {
                    merged.emplace_back(pv[j].first, factor * pv[j].second % pp);
                    ++j;
                } else {
                    long long v = (cur[i].second + factor * pv[j].second) % pp;
                    if (v) merged.emplace_back(cur[i].first, v);
                    ++i;
                    ++j;
                }
            }
            ops += cur.size() + pv.size();
            if (ops > ops_cap)
                throw BudgetExceededError("rank mod p: elimination work cap hit");
            std::swap(cur, merged);
        }
    }
    return rank;
}

} // namespace

int rank_mod_p(const SparseIntMatrix& M, std::uint64_t p) {
    if (p < 2 || p > (1u << 30)) throw Error("BadPrime", "prime out of range");
    if (M.rows == 0 || M.cols == 0 || M.entries.empty()) return 0;

    const SparseIntMatrix* work = &M;
    SparseIntMatrix t;
    if (M.cols > M.rows) {  // fewer columns = cheaper rows; rank is symmetric
        t = transpose(M);
        work = &t;
    }
    if (p == 2) {
        double bits = static_cast<double>(std::min(work->rows, work->cols) + 1) *
                      (static_cast<double>(work->cols + 63) / 64) * 64.0;
        if (bits <= 2.2e9) return dense_rank_gf2(*work);
    }
    return sparse_rank_mod_p(*work, p);
}

namespace {

int sparse_rank_rational(const SparseIntMatrix& M) {
    std::vector<std::vector<std::pair<int, mpq_class>>> rows(M.rows);
    for (const auto& e : M.entries)
        if (e.value) rows[e.row].emplace_back(e.col, mpq_class(static_cast<long>(e.value)));
    for (auto& r : rows) std::sort(r.begin(), r.end());
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });

    std::unordered_map<int, int> pivot_of_col;
    std::vector<std::vector<std::pair<int, mpq_class>>> pivots;

    std::uint64_t ops = 0;
    const std::uint64_t ops_cap = 4'000'000'000ull;

    int rank = 0;
    std::vector<std::pair<int, mpq_class>> merged;
    for (auto& row : rows) {
        auto cur = std::move(row);
        while (!cur.empty()) {
            auto& lead = cur.front();
            auto it = pivot_of_col.find(lead.first);
            if (it == pivot_of_col.end()) {
                mpq_class inv = 1 / lead.second;
                for (auto& [c, v] : cur) v *= inv;
                pivot_of_col.emplace(lead.first, static_cast<int>(pivots.size()));
                pivots.push_back(std::move(cur));
                ++rank;
                break;
            }
            const auto& pv = pivots[it->second];
            mpq_class factor = -lead.second;
            merged.clear();
            std::size_t i = 0, j = 0;
            while (i < cur.size() || j < pv.size()) {
                if (j == pv.size() || (i < cur.size() && cur[i].first < pv[j].first)) {
                    merged.push_back(std::move(cur[i++]));
                } else if (i == cur.size() || pv[j].first < cur[i].first) {
                    merged.emplace_back(pv[j].first, factor * pv[j].second);
                    ++j;
                } else {
                    mpq_class v = cur[i].second + factor * pv[j].second;
                    if (v != 0) merged.emplace_back(cur[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            ops += cur.size() + pv.size();
            if (ops > ops_cap)
                throw BudgetExceededError("rational rank: elimination work cap hit");
            std::swap(cur, merged);
        }
    }
    return rank;
}

} // namespace

int rank_rational(const SparseIntMatrix& M) {
    if (M.rows == 0 || M.cols == 0 || M.entries.empty()) return 0;
    if (M.cols > M.rows) return sparse_rank_rational(transpose(M));
    return sparse_rank_rational(M);
}

namespace {

SparseIntMatrix assemble_boundary(const std::vector<std::vector<int>>& lower,
                                  const std::vector<std::vector<int>>& upper) {
    SparseIntMatrix M;
    M.rows = static_cast<int>(lower.size());
    M.cols = static_cast<int>(upper.size());
    int k = upper.empty() ? 0 : static_cast<int>(upper[0].size()) - 1;
    M.entries.reserve(upper.size() * (k + 1));
    std::vector<int> sub;
    for (int j = 0; j < static_cast<int>(upper.size()); ++j) {
        const auto& face = upper[j];
        int sign = 1;
        for (int drop = 0; drop <= k; ++drop) {
            sub.clear();
            for (int i = 0; i <= k; ++i)
                if (i != drop) sub.push_back(face[i]);
            auto it = std::lower_bound(lower.begin(), lower.end(), sub);
            if (it == lower.end() || *it != sub) engine_fault("boundary face missing from layer");
            M.entries.push_back({static_cast<int>(it - lower.begin()), j, static_cast<long long>(sign)});
            sign = -sign;
        }
    }
    return M;
}

} // namespace

HomologyResult reduced_homology(const SimplicialComplex& K, const HomologyOptions& options) {
    HomologyResult result;
    switch (options.method) {
        case HomologyMethod::ExactSnf: result.method = "exact-SNF"; break;
        case HomologyMethod::RankModP:
            result.method = "rank-mod-p(" + std::to_string(options.prime) + ")";
            break;
        case HomologyMethod::RationalRank: result.method = "rational-rank"; break;
    }

    if (K.is_empty()) {
        result.empty_complex = true;
        result.reduction = "none";
        return result;
    }

    // reduce while the face count stays out of reach
    SimplicialComplex A = K;
    std::vector<std::string> steps;
    if (options.reduce) {
        SimplicialComplex collapsed = strong_collapse(A);
        if (collapsed.vertex_count() != A.vertex_count()) {
            A = std::move(collapsed);
            steps.push_back("collapse");
        }
        for (int round = 0; round < 8 && A.face_count_estimate() > options.reduce_trigger; ++round) {
            SimplicialComplex dual = strong_collapse(facet_nerve(A));
            if (dual.face_count_estimate() >= A.face_count_estimate()) break;
            A = std::move(dual);
            steps.push_back("nerve");
        }
    }
    if (A.face_count_estimate() > options.face_hard_limit)
        throw BudgetExceededError("homology: complex too large to enumerate (estimate " +
                                  std::to_string(A.face_count_estimate()) + " faces)");
    result.reduction = steps.empty() ? "none" : std::accumulate(
        std::next(steps.begin()), steps.end(), steps[0],
        [](std::string acc, const std::string& s) { return std::move(acc) + "+" + s; });

    int dim = A.dim();
    std::vector<long long> f(dim + 1);
    std::vector<int> ranks(dim + 2, 0);  // ranks[k] = rank of boundary_k; ranks[0] = 1
    ranks[0] = 1;
    std::vector<std::vector<mpz_class>> torsion_internal(dim + 1);

    auto lower = A.faces(0);
    f[0] = static_cast<long long>(lower.size());
    for (int k = 1; k <= dim; ++k) {
        auto upper = A.faces(k);
        f[k] = static_cast<long long>(upper.size());
        SparseIntMatrix B = assemble_boundary(lower, upper);
        switch (options.method) {
            case HomologyMethod::ExactSnf: {
                auto divisors = smith_normal_form(B, options.snf);
                ranks[k] = static_cast<int>(divisors.size());
                for (const auto& d : divisors)
                    if (d > 1) torsion_internal[k - 1].push_back(d);
                break;
            }
            case HomologyMethod::RankModP:
                ranks[k] = rank_mod_p(B, options.prime);
                break;
            case HomologyMethod::RationalRank:
                ranks[k] = rank_rational(B);
                break;
        }
        lower = std::move(upper);
    }

    std::vector<long long> betti(dim + 1);
    for (int k = 0; k <= dim; ++k) {
        betti[k] = f[k] - ranks[k] - ranks[k + 1];
        if (betti[k] < 0) engine_fault("negative Betti number");
    }

    // alternating sums must agree (reduced Euler relation)
    long long chi = 0, alt = 0;
    for (int k = 0; k <= dim; ++k) {
        long long s = (k % 2 == 0) ? 1 : -1;
        chi += s * f[k];
        alt += s * betti[k];
    }
    if (alt != chi - 1) engine_fault("Euler relation violated");

    // shape the answer to the input complex's dimension; reductions may
    // change the dimension but not the homology
    int target = K.dim() + 1;
    std::vector<long long> shaped(target, 0);
    std::vector<std::vector<mpz_class>> torsion(target);
    for (int k = 0; k <= dim; ++k) {
        if (k < target) {
            shaped[k] = betti[k];
            torsion[k] = std::move(torsion_internal[k]);
        } else if (betti[k] != 0 || !torsion_internal[k].empty()) {
            engine_fault("homology persists beyond the input dimension");
        }
    }

    result.betti = std::move(shaped);
    result.torsion = std::move(torsion);
    result.f_vector = std::move(f);
    result.euler = chi;
    return result;
}

} // namespace ltt
