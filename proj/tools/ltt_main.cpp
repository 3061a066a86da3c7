// ltt: latin squares, trades, trade-space complexes, homology, critical sets.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ltt/complex.hpp"
#include "ltt/critical.hpp"
#include "ltt/errors.hpp"
#include "ltt/homology.hpp"
#include "ltt/json_io.hpp"
#include "ltt/latin.hpp"
#include "ltt/tables.hpp"
#include "ltt/trades.hpp"
#include "ltt/version.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ltt::Error("Io", "cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ltt::Error("Io", "cannot write " + path);
    out << text;
}

ltt::PartialLatinSquare load_partial(const std::string& path) {
    return ltt::parse_square(read_file(path));
}

ltt::LatinSquare load_square(const std::string& path) {
    return ltt::LatinSquare::from_partial(load_partial(path));
}

std::string format_betti(const std::vector<long long>& betti) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < betti.size(); ++i) {
        if (i) out << ", ";
        out << betti[i];
    }
    out << "]";
    return out.str();
}

std::string format_triples(const std::vector<ltt::Triple>& ts) {
    std::ostringstream out;
    for (size_t i = 0; i < ts.size(); ++i) {
        if (i) out << " ";
        out << "(" << ts[i].row << "," << ts[i].col << "," << ts[i].sym << ")";
    }
    return out.str();
}

void emit(const std::optional<std::string>& path, const std::string& text) {
    if (path) {
        write_file(*path, text);
        std::cout << "wrote " << *path << "\n";
    } else {
        std::cout << text;
    }
}

struct GenArgs {
    std::string family;
    int n = 0;
    int s = 0;
    std::string path;
    std::optional<std::string> output;
};

struct EnumArgs {
    std::string input;
    bool all = false;
    bool intercalates = false;
    int max_size = 0;
    long long node_limit = 0;
    std::optional<std::string> output;
};

struct BuildArgs {
    std::string input;
    std::string trades;
    std::optional<std::string> output;
};

struct HomologyArgs {
    std::string complex_path;
    std::string method = "snf";
    int prime = 2;
    bool no_reduce = false;
    std::optional<std::string> output;
};

struct SearchArgs {
    std::string input;
    bool smallest = false;
    long long node_limit = 0;
    std::optional<std::string> output;
};

struct CheckArgs {
    std::string input;
    std::string candidate;
};

struct CoverageArgs {
    std::string input;
    std::string candidate;
    std::string trades;
};

struct FromCriticalArgs {
    std::string input;
    std::string candidate;
    std::string trades;
    std::optional<std::string> output;
};

struct ToCriticalArgs {
    std::string input;
    std::string trades;
    std::vector<int> vertices;
    std::optional<std::string> output;
};

struct TablesArgs {
    bool extended = false;
    int max_n = 198;
    int max_s = 4;
    int jobs = 1;
    std::string cache_dir;
    std::string format = "text";
};

ltt::LatinSquare make_square(const GenArgs& a) {
    if (a.family == "back-circulant") {
        if (a.n <= 0) throw ltt::Error("Usage", "--family back-circulant needs --n");
        return ltt::gen_back_circulant(a.n);
    }
    if (a.family == "ea2" || a.family == "elementary-abelian") {
        if (a.s <= 0) throw ltt::Error("Usage", "--family ea2 needs --s");
        return ltt::gen_elementary_abelian(a.s);
    }
    if (a.family == "file") {
        if (a.path.empty()) throw ltt::Error("Usage", "--family file needs --path");
        return load_square(a.path);
    }
    throw ltt::Error("Usage", "unknown family " + a.family);
}

int cmd_gen(const GenArgs& a) {
    ltt::LatinSquare L = make_square(a);
    emit(a.output, ltt::render_square(L.partial()));
    return 0;
}

int cmd_trades_enumerate(const EnumArgs& a) {
    ltt::LatinSquare L = load_square(a.input);
    int modes = (a.all ? 1 : 0) + (a.intercalates ? 1 : 0) + (a.max_size > 0 ? 1 : 0);
    if (modes != 1) {
        throw ltt::Error("Usage", "pick exactly one of --all, --intercalates, --max-size");
    }
    ltt::SearchBudget budget;
    if (a.node_limit > 0) budget.node_limit = a.node_limit;
    std::vector<ltt::Trade> trades;
    if (a.intercalates) {
        trades = ltt::enumerate_intercalates(L);
    } else if (a.all) {
        trades = ltt::enumerate_trades(L, std::nullopt, budget);
    } else {
        trades = ltt::enumerate_trades(L, a.max_size, budget);
    }
    std::cout << "trades: " << trades.size() << "\n";
    if (a.output) {
        write_file(*a.output, ltt::trades_to_json(L.order(), trades));
        std::cout << "wrote " << *a.output << "\n";
    }
    return 0;
}

int cmd_complex_build(const BuildArgs& a) {
    ltt::LatinSquare L = load_square(a.input);
    ltt::TradesFile tf = ltt::trades_from_json(read_file(a.trades));
    if (tf.order != L.order()) throw ltt::OrderMismatchError(L.order(), tf.order);
    ltt::SimplicialComplex K = ltt::nerve_from_trades(tf.trades, L);
    std::cout << "vertices: " << K.vertex_count() << " facets: " << K.facets().size()
              << " dim: " << K.dim() << "\n";
    if (a.output) {
        write_file(*a.output, ltt::complex_to_json(K));
        std::cout << "wrote " << *a.output << "\n";
    }
    return 0;
}

int cmd_homology(const HomologyArgs& a) {
    ltt::SimplicialComplex K = ltt::complex_from_json(read_file(a.complex_path));
    ltt::HomologyOptions opt;
    if (a.method == "snf") {
        opt.method = ltt::HomologyMethod::ExactSnf;
    } else if (a.method == "mod-p") {
        opt.method = ltt::HomologyMethod::RankModP;
        opt.prime = a.prime;
    } else if (a.method == "rational") {
        opt.method = ltt::HomologyMethod::RationalRank;
    } else {
        throw ltt::Error("Usage", "unknown method " + a.method);
    }
    opt.reduce = !a.no_reduce;
    ltt::HomologyResult H = ltt::reduced_homology(K, opt);
    std::cout << "betti: " << format_betti(H.betti) << "\n";
    for (size_t k = 0; k < H.torsion.size(); ++k) {
        if (H.torsion[k].empty()) continue;
        std::cout << "torsion k=" << k << ":";
        for (const auto& d : H.torsion[k]) std::cout << " " << d.get_str();
        std::cout << "\n";
    }
    if (a.output) {
        write_file(*a.output, ltt::homology_to_json(H));
        std::cout << "wrote " << *a.output << "\n";
    }
    return 0;
}

int cmd_critical_search(const SearchArgs& a) {
    ltt::LatinSquare L = load_square(a.input);
    ltt::SearchBudget budget;
    if (a.node_limit > 0) budget.node_limit = a.node_limit;
    ltt::CriticalSet C = ltt::smallest_critical_set(L, budget);
    std::cout << "size: " << C.entries.size() << "\n";
    std::cout << "witness: " << format_triples(C.entries.triples()) << "\n";
    if (a.output) {
        write_file(*a.output, ltt::render_square(C.entries));
        std::cout << "wrote " << *a.output << "\n";
    }
    return 0;
}

int cmd_critical_check(const CheckArgs& a) {
    ltt::LatinSquare L = load_square(a.input);
    ltt::PartialLatinSquare C = load_partial(a.candidate);
    bool ok = ltt::is_critical_set(C, L);
    std::cout << "critical: " << (ok ? "yes" : "no") << "\n";
    return 0;
}

int cmd_critical_coverage(const CoverageArgs& a) {
    ltt::LatinSquare L = load_square(a.input);
    ltt::PartialLatinSquare C = load_partial(a.candidate);
    if (C.order() != L.order()) throw ltt::OrderMismatchError(L.order(), C.order());
    ltt::TradesFile tf = ltt::trades_from_json(read_file(a.trades));
    if (tf.order != L.order()) throw ltt::OrderMismatchError(L.order(), tf.order);
    ltt::TradeCoverage cov = ltt::check_trade_coverage(C, tf.trades);
    if (cov.all_hit) {
        std::cout << "coverage: ok\n";
    } else {
        std::cout << "coverage: missed trade " << *cov.witness << "\n";
    }
    return 0;
}

int cmd_cover_from_critical(const FromCriticalArgs& a) {
    ltt::LatinSquare L = load_square(a.input);
    ltt::PartialLatinSquare C = load_partial(a.candidate);
    ltt::TradesFile tf = ltt::trades_from_json(read_file(a.trades));
    if (tf.order != L.order()) throw ltt::OrderMismatchError(L.order(), tf.order);
    ltt::SimplicialComplex K = ltt::nerve_from_trades(tf.trades, L);
    ltt::VertexCover cover = ltt::critical_to_cover(C, K, tf.trades);
    std::cout << "cover:";
    for (int v : cover.vertices) std::cout << " " << v;
    std::cout << "\n";
    std::cout << "minimal: " << (cover.minimal ? "yes" : "no") << "\n";
    if (a.output) {
        bool sizes_match = cover.vertices.size() == C.triples().size();
        write_file(*a.output, ltt::cover_report_to_json(cover.vertices, C.triples(), sizes_match));
        std::cout << "wrote " << *a.output << "\n";
    }
    return 0;
}

int cmd_cover_to_critical(const ToCriticalArgs& a) {
    ltt::LatinSquare L = load_square(a.input);
    ltt::TradesFile tf = ltt::trades_from_json(read_file(a.trades));
    if (tf.order != L.order()) throw ltt::OrderMismatchError(L.order(), tf.order);
    ltt::SimplicialComplex K = ltt::nerve_from_trades(tf.trades, L);
    ltt::VertexCover cover;
    cover.vertices = a.vertices;
    cover.minimal = ltt::is_minimal_vertex_cover(K, cover.vertices);
    ltt::PartialLatinSquare C = ltt::cover_to_critical(cover, K, tf.trades, L);
    std::cout << "size: " << C.size() << "\n";
    std::cout << "critical: " << format_triples(C.triples()) << "\n";
    if (a.output) {
        bool sizes_match = C.triples().size() == cover.vertices.size();
        write_file(*a.output, ltt::cover_report_to_json(cover.vertices, C.triples(), sizes_match));
        std::cout << "wrote " << *a.output << "\n";
    }
    return 0;
}

int cmd_tables(const TablesArgs& a) {
    ltt::TableRunOptions opt;
    opt.extended = a.extended;
    opt.max_n = a.max_n;
    opt.max_s = a.max_s;
    opt.jobs = a.jobs;
    opt.cache_dir = a.cache_dir;
    std::vector<ltt::TableCheck> checks = ltt::run_reference_tables(opt);
    bool all_pass = true;
    for (const auto& c : checks) all_pass = all_pass && c.pass;
    if (a.format == "json") {
        std::cout << ltt::table_checks_to_json(checks);
    } else {
        std::cout << ltt::format_table_checks(checks);
    }
    return all_pass ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"latin trade spaces: squares, trades, complexes, homology, critical sets"};
    app.set_version_flag("--version", std::string(ltt::kVersion));
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a latin square");
    gen_cmd->add_option("--family", gen.family, "back-circulant | ea2 | file")->required();
    gen_cmd->add_option("--n", gen.n, "order for back-circulant");
    gen_cmd->add_option("--s", gen.s, "exponent for ea2 (order 2^s)");
    gen_cmd->add_option("--path", gen.path, "input square for --family file");
    std::string gen_out;
    gen_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");

    EnumArgs en;
    auto* trades_cmd = app.add_subcommand("trades", "latin trade operations");
    trades_cmd->require_subcommand(1);
    auto* enum_cmd = trades_cmd->add_subcommand("enumerate", "enumerate trades of a square");
    enum_cmd->add_option("-i,--input", en.input, "latin square file")->required();
    enum_cmd->add_flag("--all", en.all, "all trades (every proper subset with a mate)");
    enum_cmd->add_flag("--intercalates", en.intercalates, "size-4 trades only");
    enum_cmd->add_option("--max-size", en.max_size, "trades up to this size");
    enum_cmd->add_option("--node-limit", en.node_limit, "search node budget");
    std::string enum_out;
    enum_cmd->add_option("-o,--output", enum_out, "trades JSON output");

    BuildArgs bu;
    auto* complex_cmd = app.add_subcommand("complex", "simplicial complex operations");
    complex_cmd->require_subcommand(1);
    auto* build_cmd = complex_cmd->add_subcommand("build", "build the trade-space complex");
    build_cmd->add_option("-i,--input", bu.input, "latin square file")->required();
    build_cmd->add_option("-t,--trades", bu.trades, "trades JSON")->required();
    std::string build_out;
    build_cmd->add_option("-o,--output", build_out, "complex JSON output");

    HomologyArgs ho;
    auto* hom_cmd = app.add_subcommand("homology", "reduced homology of a complex");
    hom_cmd->add_option("-k,--complex", ho.complex_path, "complex JSON")->required();
    hom_cmd->add_option("--method", ho.method, "snf | mod-p | rational (default snf)");
    hom_cmd->add_option("--prime", ho.prime, "prime for --method mod-p (default 2)");
    hom_cmd->add_flag("--no-reduce", ho.no_reduce, "skip the collapse preprocessing");
    std::string hom_out;
    hom_cmd->add_option("-o,--output", hom_out, "homology JSON output");

    SearchArgs se;
    CheckArgs ch;
    CoverageArgs cov;
    auto* crit_cmd = app.add_subcommand("critical", "critical set operations");
    crit_cmd->require_subcommand(1);
    auto* search_cmd = crit_cmd->add_subcommand("search", "find a smallest critical set");
    search_cmd->add_option("-i,--input", se.input, "latin square file")->required();
    search_cmd->add_flag("--smallest", se.smallest, "exhaustive smallest-first search");
    search_cmd->add_option("--node-limit", se.node_limit, "search node budget");
    std::string search_out;
    search_cmd->add_option("-o,--output", search_out, "write the witness as a square file");
    auto* check_cmd = crit_cmd->add_subcommand("check", "test whether a partial square is critical");
    check_cmd->add_option("-i,--input", ch.input, "latin square file")->required();
    check_cmd->add_option("-c,--candidate", ch.candidate, "partial square file")->required();
    auto* coverage_cmd = crit_cmd->add_subcommand("coverage", "check that a set meets every trade");
    coverage_cmd->add_option("-i,--input", cov.input, "latin square file")->required();
    coverage_cmd->add_option("-c,--candidate", cov.candidate, "partial square file")->required();
    coverage_cmd->add_option("-t,--trades", cov.trades, "trades JSON")->required();

    FromCriticalArgs fc;
    ToCriticalArgs tc;
    auto* cover_cmd = app.add_subcommand("cover", "critical sets vs vertex covers");
    cover_cmd->require_subcommand(1);
    auto* from_cmd = cover_cmd->add_subcommand("from-critical", "cover induced by a critical set");
    from_cmd->add_option("-i,--input", fc.input, "latin square file")->required();
    from_cmd->add_option("-c,--candidate", fc.candidate, "partial square file")->required();
    from_cmd->add_option("-t,--trades", fc.trades, "trades JSON")->required();
    std::string from_out;
    from_cmd->add_option("-o,--output", from_out, "cover report JSON");
    auto* to_cmd = cover_cmd->add_subcommand("to-critical", "critical set from a minimal cover");
    to_cmd->add_option("-i,--input", tc.input, "latin square file")->required();
    to_cmd->add_option("-t,--trades", tc.trades, "trades JSON")->required();
    to_cmd->add_option("--vertices", tc.vertices, "cover vertex ids, comma separated")
        ->required()
        ->delimiter(',');
    std::string to_out;
    to_cmd->add_option("-o,--output", to_out, "cover report JSON");

    TablesArgs ta;
    const char* env_cache = std::getenv("LTT_CACHE_DIR");
    if (env_cache) ta.cache_dir = env_cache;
    auto* tables_cmd = app.add_subcommand("tables", "recompute the reference tables");
    tables_cmd->add_flag("--extended", ta.extended, "include the slow rows (B4 trades, L5, L6)");
    tables_cmd->add_option("--max-n", ta.max_n, "component sweep upper bound (default 198)");
    auto* max_s_opt = tables_cmd->add_option("--max-s", ta.max_s, "intercalate rows up to L_s");
    tables_cmd->add_option("--jobs", ta.jobs, "concurrent table cells (default 1)");
    tables_cmd->add_option("--cache-dir", ta.cache_dir, "result cache (or LTT_CACHE_DIR)");
    tables_cmd->add_option("--format", ta.format, "text | json (default text)")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    auto opt_out = [](const std::string& s) {
        return s.empty() ? std::optional<std::string>() : std::optional<std::string>(s);
    };
    if (*gen_cmd) {
        gen.output = opt_out(gen_out);
        return cmd_gen(gen);
    }
    if (*enum_cmd) {
        en.output = opt_out(enum_out);
        return cmd_trades_enumerate(en);
    }
    if (*build_cmd) {
        bu.output = opt_out(build_out);
        return cmd_complex_build(bu);
    }
    if (*hom_cmd) {
        ho.output = opt_out(hom_out);
        return cmd_homology(ho);
    }
    if (*search_cmd) {
        se.output = opt_out(search_out);
        return cmd_critical_search(se);
    }
    if (*check_cmd) return cmd_critical_check(ch);
    if (*coverage_cmd) return cmd_critical_coverage(cov);
    if (*from_cmd) {
        fc.output = opt_out(from_out);
        return cmd_cover_from_critical(fc);
    }
    if (*to_cmd) {
        tc.output = opt_out(to_out);
        return cmd_cover_to_critical(tc);
    }
    if (*tables_cmd) {
        if (ta.extended && max_s_opt->count() == 0) ta.max_s = 6;
        return cmd_tables(ta);
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ltt::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ltt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
