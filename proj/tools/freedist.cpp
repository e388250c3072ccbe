#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "freedist/bench.hpp"
#include "freedist/codefile.hpp"
#include "freedist/distances.hpp"
#include "freedist/legacy.hpp"
#include "freedist/search_bidir.hpp"
#include "freedist/search_fast.hpp"
#include "freedist/search_naive.hpp"

namespace {

// 0 = ok, 1 = parse/usage, 2 = precondition failure, 3 = internal error,
// 4 = bench completed partially.
constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInternal = 3;
constexpr int kExitPartial = 4;

int classify(const freedist::Error& e) {
    if (dynamic_cast<const freedist::ParseError*>(&e)) return kExitParse;
    if (dynamic_cast<const freedist::MismatchedDistance*>(&e)) return kExitInternal;
    if (dynamic_cast<const freedist::StepLimitExceeded*>(&e)) return kExitInternal;
    return kExitPrecondition;
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream ss;
    ss << '[';
    for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v[i];
    ss << ']';
    return ss.str();
}

int cmd_check(const std::string& path) {
    const auto code = freedist::load_code(path);
    const auto nu = freedist::row_degrees(code.G);
    const auto prof = freedist::profile(code.G);
    std::cout << "id=" << code.id << " n=" << code.G.n << " k=" << code.G.k << " M=" << prof.M
              << " nu=" << join_ints(nu) << " internal_degree=" << prof.delta
              << " external_degree=" << prof.external_degree << " delta=" << prof.delta
              << " row_reduced=" << (prof.row_reduced ? "true" : "false")
              << " noncatastrophic=" << (prof.noncatastrophic ? "true" : "false")
              << " singleton=" << prof.singleton << " q=" << prof.q << "\n";
    if (!prof.noncatastrophic)
        std::cerr << "warning: the code is catastrophic; free-distance searches will refuse it\n";
    if (!prof.row_reduced)
        std::cerr << "warning: the generator matrix is not row reduced; free-distance searches will refuse it\n";
    return 0;
}

int cmd_dfree(const std::string& path, const std::string& alg, bool stats, std::optional<int> bound,
              bool no_dstate) {
    const auto code = freedist::load_code(path);
    const auto& G = code.G;
    int dfree = 0;
    freedist::RunStats rs;
    const auto start = std::chrono::steady_clock::now();
    if (alg == "naive") {
        freedist::NaiveOptions o;
        o.initial_bound = bound;
        std::tie(dfree, rs) = freedist::naive_free_distance(G, o);
    } else if (alg == "fast") {
        freedist::FastOptions o;
        o.initial_bound = bound;
        o.use_state_distance_pruning = !no_dstate;
        std::tie(dfree, rs) = freedist::fast_free_distance(G, o);
    } else if (alg == "bidir") {
        freedist::BidirOptions o;
        o.initial_bound = bound;
        std::tie(dfree, rs) = freedist::bidir_free_distance(G, o);
    } else if (alg == "larsen") {
        const int w0 = bound ? *bound : freedist::profile(G).singleton;
        std::tie(dfree, rs) = freedist::larsen_free_distance(G, w0);
    } else if (alg == "heapmod") {
        std::cerr << "warning: heapmod is KNOWN-INCORRECT (kept for demonstration); "
                     "it may report a larger value than the true free distance\n";
        dfree = freedist::heapmod_free_distance(G);
    } else if (alg == "oracle") {
        dfree = freedist::dijkstra_free_distance(G);
    } else {
        std::cerr << "error: unknown algorithm '" << alg << "'\n";
        return kExitParse;
    }
    const auto ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << "dfree=" << dfree << "\n";
    if (stats) {
        std::cout << "alg=" << alg << " ext_eval=" << rs.extensions_evaluated
                  << " nodes_stored=" << rs.nodes_stored << " peak=" << rs.peak_storage
                  << " bound_updates=" << rs.bound_updates
                  << " dstate_pruning=" << (rs.state_distance_pruning ? 1 : 0) << " ns=" << ns << "\n";
    }
    return 0;
}

int cmd_coldist(const std::string& path, std::optional<int> max_j) {
    const auto code = freedist::load_code(path);
    const auto prof = freedist::profile(code.G);
    const int J = max_j ? *max_j : prof.M;
    const auto p = freedist::column_distances(code.G, J);
    std::cout << "j,d_j\n";
    for (int j = 0; j <= p.max_j(); ++j) std::cout << j << ',' << p.at(j) << "\n";
    return 0;
}

int cmd_bench(const std::string& corpus_dir, const std::string& algs_arg, const std::string& out_path,
              int parallel) {
    std::vector<std::string> algs;
    {
        std::stringstream ss(algs_arg);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            if (std::find(freedist::algorithm_names().begin(), freedist::algorithm_names().end(), item) ==
                freedist::algorithm_names().end()) {
                std::cerr << "error: unknown algorithm '" << item << "'\n";
                return kExitParse;
            }
            algs.push_back(item);
        }
    }
    if (algs.empty()) {
        std::cerr << "error: no algorithms selected\n";
        return kExitParse;
    }
    std::vector<std::string> paths;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());
    if (paths.empty()) {
        std::cerr << "error: no .json code files in '" << corpus_dir << "'\n";
        return kExitParse;
    }
    std::vector<freedist::CodeFile> corpus;
    std::vector<freedist::BenchSkip> parse_skips;
    for (const auto& p : paths) {
        try {
            corpus.push_back(freedist::load_code(p));
        } catch (const freedist::Error& e) {
            parse_skips.push_back({std::filesystem::path(p).stem().string(), "*", e.what()});
        }
    }
    auto result = freedist::run_bench(corpus, algs, parallel);
    result.skipped.insert(result.skipped.begin(), parse_skips.begin(), parse_skips.end());
    if (out_path.empty() || out_path == "-") {
        freedist::write_bench_csv(std::cout, result.records);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return kExitInternal;
        }
        freedist::write_bench_csv(out, result.records);
    }
    for (const auto& s : result.skipped)
        std::cerr << "skipped " << s.id << " [" << s.alg << "]: " << s.reason << "\n";
    return result.skipped.empty() ? 0 : kExitPartial;
}

int cmd_larsen_graph(const std::string& path, int bound, int n) {
    const auto g = freedist::load_graph(path);
    std::cout << "larsen=" << freedist::larsen_on_graph(g, bound, n) << "\n";
    std::cout << "shortest_cycle=" << freedist::graph_shortest_zero_cycle(g) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"free distance of convolutional codes over finite fields"};
    app.require_subcommand(1);

    std::string file, alg = "fast", corpus_dir, algs_arg = "fast,fast-baseline,bidir,oracle", out_path;
    std::optional<int> bound, max_j;
    bool stats = false, no_dstate = false;
    int parallel = 1, graph_n = 1, graph_bound = 1 << 20;

    auto* check = app.add_subcommand("check", "parse a code file and print its profile");
    check->add_option("file", file, "code JSON file")->required();

    auto* dfree = app.add_subcommand("dfree", "compute the free distance");
    dfree->add_option("file", file, "code JSON file")->required();
    dfree->add_option("--alg", alg, "naive|fast|bidir|larsen|heapmod|oracle")->capture_default_str();
    dfree->add_flag("--stats", stats, "print search counters");
    dfree->add_option("--bound", bound, "override the initial upper bound");
    dfree->add_flag("--no-dstate-pruning", no_dstate, "baseline FAST: disable state-distance pruning");

    auto* coldist = app.add_subcommand("coldist", "print the column distance profile as CSV");
    coldist->add_option("file", file, "code JSON file")->required();
    coldist->add_option("--max-j", max_j, "largest column index (default: the memory M)");

    auto* bench = app.add_subcommand("bench", "run algorithms over a corpus and emit CSV");
    bench->add_option("--corpus", corpus_dir, "directory of code JSON files")->required();
    bench->add_option("--algs", algs_arg, "comma-separated algorithm list")->capture_default_str();
    bench->add_option("--out", out_path, "output CSV file (default stdout)");
    bench->add_option("--parallel", parallel, "number of worker threads")->capture_default_str();

    auto* lgraph = app.add_subcommand("larsen-graph", "run the Larsen steps on a raw weighted digraph");
    lgraph->add_option("--graph", file, "graph JSON file")->required();
    lgraph->add_option("--bound", graph_bound, "initial upper bound")->capture_default_str();
    lgraph->add_option("--n", graph_n, "block length used by the half-bound cutoff")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    try {
        if (check->parsed()) return cmd_check(file);
        if (dfree->parsed()) return cmd_dfree(file, alg, stats, bound, no_dstate);
        if (coldist->parsed()) return cmd_coldist(file, max_j);
        if (bench->parsed()) return cmd_bench(corpus_dir, algs_arg, out_path, parallel);
        if (lgraph->parsed()) return cmd_larsen_graph(file, graph_bound, graph_n);
    } catch (const freedist::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
