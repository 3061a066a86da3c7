#include "ltt/tables.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ltt/homology.hpp"
#include "ltt/json_io.hpp"
#include "ltt/sha256.hpp"
#include "ltt/trades.hpp"
#include "ltt/version.hpp"

#include "reference_tables_data.hpp"

namespace ltt {

namespace {

using nlohmann::json;

ReferenceTables load_reference_tables() {
    json j = json::parse(detail::kReferenceTablesJson);
    ReferenceTables t;
    t.version = j["version"].get<int>();
    for (const char* name : {"B3", "B4", "L2"})
        t.trade_rows.emplace_back(name, j["trade_homology"][name].get<std::vector<long long>>());
    for (const char* name : {"L1", "L2", "L3", "L4", "L5", "L6"})
        t.intercalate_rows.emplace_back(name,
                                        j["intercalate_homology"][name].get<std::vector<long long>>());
    const json& sweep = j["component_counts_even_n"];
    t.sweep_start = sweep["start"].get<int>();
    t.sweep_step = sweep["step"].get<int>();
    t.sweep_values = sweep["values"].get<std::vector<long long>>();
    return t;
}

} // namespace

const ReferenceTables& reference_tables() {
    static const ReferenceTables tables = load_reference_tables();
    return tables;
}

namespace {

// Shapes `betti` like `expected` and compares: the visible prefix must match
// and everything past it must vanish.
TableCheck compare_row(std::string name, const HomologyResult& h,
                       const std::vector<long long>& expected) {
    TableCheck check;
    check.name = std::move(name);
    check.expected = expected;
    check.note = h.method;

    check.computed.assign(expected.size(), 0);
    bool pass = true;
    for (std::size_t i = 0; i < h.betti.size(); ++i) {
        if (i < expected.size())
            check.computed[i] = h.betti[i];
        else if (h.betti[i] != 0)
            pass = false;
    }
    if (check.computed != expected) pass = false;
    for (const auto& factors : h.torsion)
        if (!factors.empty()) {
            pass = false;
            check.note += " unexpected torsion";
            break;
        }
    check.pass = pass;
    return check;
}

HomologyOptions method_options(HomologyMethod method) {
    HomologyOptions opt;
    opt.method = method;
    opt.prime = 2;
    return opt;
}

TableCheck trade_row_check(const std::string& name, const LatinSquare& L, HomologyMethod method,
                           const std::vector<long long>& expected) {
    auto trades = enumerate_trades(L);
    auto K = nerve_from_trades(trades, L);
    return compare_row(name, reduced_homology(K, method_options(method)), expected);
}

TableCheck intercalate_row_check(const std::string& name, const LatinSquare& L,
                                 HomologyMethod method, const std::vector<long long>& expected) {
    auto intercalates = enumerate_intercalates(L);
    auto K = nerve_from_trades(intercalates, L);
    return compare_row(name, reduced_homology(K, method_options(method)), expected);
}

TableCheck sweep_check(int n, long long expected_value) {
    auto L = gen_back_circulant(n);
    auto intercalates = enumerate_intercalates(L);
    auto K = nerve_from_trades(intercalates, L);
    auto h = reduced_homology(K, method_options(HomologyMethod::ExactSnf));

    TableCheck check;
    check.name = "H0-B" + std::to_string(n);
    check.expected = {expected_value};
    check.note = h.method;
    long long b0 = h.betti.empty() ? 0 : h.betti[0];
    check.computed = {b0};
    // a 0-dimensional complex has nothing above degree 0
    bool higher_zero = true;
    for (std::size_t i = 1; i < h.betti.size(); ++i)
        if (h.betti[i] != 0) higher_zero = false;
    check.pass = (b0 == expected_value) && higher_zero &&
                 (b0 == static_cast<long long>(n) * n / 4 - 1);
    return check;
}

json check_to_json(const TableCheck& c) {
    json j;
    j["name"] = c.name;
    j["computed"] = c.computed;
    j["expected"] = c.expected;
    j["pass"] = c.pass;
    j["note"] = c.note;
    return j;
}

TableCheck check_from_json(const json& j) {
    TableCheck c;
    c.name = j["name"].get<std::string>();
    c.computed = j["computed"].get<std::vector<long long>>();
    c.expected = j["expected"].get<std::vector<long long>>();
    c.pass = j["pass"].get<bool>();
    c.note = j["note"].get<std::string>();
    return c;
}

class CheckCache {
public:
    explicit CheckCache(std::string dir) : dir_(std::move(dir)) {
        if (!dir_.empty()) std::filesystem::create_directories(dir_);
    }

    std::optional<TableCheck> load(const std::string& key) const {
        if (dir_.empty()) return std::nullopt;
        std::ifstream in(path(key));
        if (!in) return std::nullopt;
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            return check_from_json(json::parse(buf.str()));
        } catch (...) {
            return std::nullopt;  // stale or foreign file; recompute
        }
    }

    void store(const std::string& key, const TableCheck& check) const {
        if (dir_.empty()) return;
        std::ofstream out(path(key));
        out << check_to_json(check).dump(2) << "\n";
    }

private:
    std::filesystem::path path(const std::string& key) const {
        return std::filesystem::path(dir_) / (key + ".json");
    }

    std::string dir_;
};

} // namespace

std::vector<TableCheck> run_reference_tables(const TableRunOptions& options) {
    const ReferenceTables& ref = reference_tables();
    CheckCache cache(options.cache_dir);

    struct Cell {
        std::string key;   // cache identity
        std::string name;  // display name for error paths
        std::function<TableCheck()> run;
    };
    std::vector<Cell> cells;
    auto add = [&](const std::string& id, std::string name, std::function<TableCheck()> run) {
        std::string key = sha256_hex(std::string(kVersion) + "|" + std::to_string(ref.version) +
                                     "|" + id);
        cells.push_back({std::move(key), std::move(name), std::move(run)});
    };

    for (const auto& [name, expected] : ref.trade_rows) {
        if (name == "B3") {
            add("trade|B3", "B3", [expected = expected]() {
                return trade_row_check("B3", gen_back_circulant(3), HomologyMethod::ExactSnf, expected);
            });
        } else if (name == "B4" && options.extended) {
            add("trade|B4", "B4", [expected = expected]() {
                return trade_row_check("B4", gen_back_circulant(4), HomologyMethod::RankModP, expected);
            });
        } else if (name == "L2") {
            add("trade|L2", "L2", [expected = expected]() {
                return trade_row_check("L2", gen_elementary_abelian(2), HomologyMethod::RankModP, expected);
            });
        }
    }

    int max_s = std::min(options.max_s, options.extended ? 6 : 4);
    for (int s = 1; s <= max_s; ++s) {
        const auto& [name, expected] = ref.intercalate_rows[s - 1];
        HomologyMethod method = s <= 3 ? HomologyMethod::ExactSnf : HomologyMethod::RankModP;
        add("intercalate|" + name, name + "-intercalate", [s, method, name = name, expected = expected]() {
            return intercalate_row_check(name + "-intercalate", gen_elementary_abelian(s), method,
                                         expected);
        });
    }

    for (std::size_t i = 0; i < ref.sweep_values.size(); ++i) {
        int n = ref.sweep_start + static_cast<int>(i) * ref.sweep_step;
        if (n > options.max_n) break;
        add("sweep|" + std::to_string(n), "H0-B" + std::to_string(n),
            [n, v = ref.sweep_values[i]]() { return sweep_check(n, v); });
    }

    std::vector<TableCheck> results(cells.size());
    auto run_cell = [&](std::size_t i) {
        if (auto cached = cache.load(cells[i].key)) {
            results[i] = std::move(*cached);
            return;
        }
        TableCheck check;
        try {
            check = cells[i].run();
        } catch (const Error& e) {
            check.name = cells[i].name;
            check.pass = false;
            check.note = std::string("error: ") + e.what();
        }
        results[i] = check;
        cache.store(cells[i].key, check);
    };

    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (int t = 0; t < jobs; ++t)
            workers.emplace_back([&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= cells.size()) break;
                    run_cell(i);
                }
            });
        for (auto& w : workers) w.join();
    }
    return results;
}

std::string format_table_checks(const std::vector<TableCheck>& checks) {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto& c : checks) {
        out << c.name << " [";
        for (std::size_t i = 0; i < c.computed.size(); ++i) {
            if (i) out << ',';
            out << c.computed[i];
        }
        out << "] " << (c.pass ? "PASS" : "FAIL");
        if (!c.pass && !c.note.empty()) out << " (" << c.note << ")";
        out << "\n";
        if (c.pass) ++passed;
    }
    out << "result: " << checks.size() << " checks, " << passed << " passed\n";
    return out.str();
}

std::string table_checks_to_json(const std::vector<TableCheck>& checks) {
    json out;
    json list = json::array();
    bool all = true;
    for (const auto& c : checks) {
        list.push_back(check_to_json(c));
        all = all && c.pass;
    }
    out["checks"] = std::move(list);
    out["all_pass"] = all;
    return out.dump(2) + "\n";
}

} // namespace ltt
