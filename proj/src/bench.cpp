#include "freedist/bench.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <ostream>
#include <thread>

#include "freedist/distances.hpp"
#include "freedist/legacy.hpp"
#include "freedist/search_bidir.hpp"
#include "freedist/search_fast.hpp"
#include "freedist/search_naive.hpp"

namespace freedist {

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names = {"naive", "fast", "fast-baseline", "bidir",
                                                   "larsen", "heapmod", "oracle"};
    return names;
}

bool algorithm_is_correct(const std::string& alg) { return alg != "heapmod"; }

std::pair<int, RunStats> run_algorithm(const GeneratorMatrix& G, const std::string& alg) {
    if (alg == "naive") return naive_free_distance(G);
    if (alg == "fast") return fast_free_distance(G);
    if (alg == "fast-baseline") {
        FastOptions o;
        o.use_state_distance_pruning = false;
        return fast_free_distance(G, o);
    }
    if (alg == "bidir") return bidir_free_distance(G);
    if (alg == "larsen") {
        const CodeProfile p = profile(G);
        return larsen_free_distance(G, p.singleton);
    }
    if (alg == "heapmod") return {heapmod_free_distance(G), RunStats{}};
    if (alg == "oracle") return {dijkstra_free_distance(G), RunStats{}};
    throw Error("unknown algorithm '" + alg + "'");
}

namespace {

struct PerCode {
    std::vector<BenchRecord> records;
    std::vector<BenchSkip> skipped;
    std::string mismatch;  // non-empty on cross-algorithm disagreement
};

PerCode bench_one(const CodeFile& code, const std::vector<std::string>& algs) {
    PerCode out;
    CodeProfile prof;
    try {
        prof = profile(code.G);
    } catch (const Error& e) {
        for (const auto& alg : algs) out.skipped.push_back({code.id, alg, e.what()});
        return out;
    }
    int agreed = -1;
    std::string agreed_alg;
    for (const auto& alg : algs) {
        try {
            const auto start = std::chrono::steady_clock::now();
            const auto [dfree, stats] = run_algorithm(code.G, alg);
            const auto ns =
                std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start)
                    .count();
            out.records.push_back({code.id, static_cast<int>(code.G.n), static_cast<int>(code.G.k), prof.delta,
                                   prof.q, dfree, alg, stats.extensions_evaluated, stats.nodes_stored,
                                   stats.peak_storage, ns});
            if (algorithm_is_correct(alg)) {
                if (agreed < 0) {
                    agreed = dfree;
                    agreed_alg = alg;
                } else if (dfree != agreed) {
                    out.mismatch = "code '" + code.id + "': " + alg + " returned " + std::to_string(dfree) +
                                   " but " + agreed_alg + " returned " + std::to_string(agreed);
                }
            }
        } catch (const MismatchedDistance&) {
            throw;
        } catch (const Error& e) {
            out.skipped.push_back({code.id, alg, e.what()});
        }
    }
    return out;
}

}  // namespace

BenchResult run_bench(const std::vector<CodeFile>& corpus, const std::vector<std::string>& algs, int parallel) {
    std::vector<PerCode> per_code(corpus.size());
    if (parallel <= 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i) per_code[i] = bench_one(corpus[i], algs);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        const int count = std::min<int>(parallel, static_cast<int>(corpus.size()));
        std::mutex fail_mutex;
        std::exception_ptr failure;
        for (int t = 0; t < count; ++t) {
            workers.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < corpus.size(); i = next.fetch_add(1)) {
                    try {
                        per_code[i] = bench_one(corpus[i], algs);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(fail_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        for (auto& w : workers) w.join();
        if (failure) std::rethrow_exception(failure);
    }
    BenchResult result;
    for (auto& pc : per_code) {
        if (!pc.mismatch.empty()) throw MismatchedDistance(pc.mismatch);
        result.records.insert(result.records.end(), pc.records.begin(), pc.records.end());
        result.skipped.insert(result.skipped.end(), pc.skipped.begin(), pc.skipped.end());
    }
    return result;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "id,n,k,delta,q,dfree,alg,ext_eval,nodes_stored,peak,ns\n";
    for (const auto& r : records) {
        out << r.id << ',' << r.n << ',' << r.k << ',' << r.delta << ',' << r.q << ',' << r.dfree << ',' << r.alg
            << ',' << r.ext_eval << ',' << r.nodes_stored << ',' << r.peak << ',' << r.ns << '\n';
    }
}

}  // namespace freedist
