#ifndef FREEDIST_BENCH_HPP
#define FREEDIST_BENCH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "freedist/codefile.hpp"
#include "freedist/stats.hpp"

namespace freedist {

/// One (code, algorithm) measurement.
struct BenchRecord {
    std::string id;
    int n = 0, k = 0, delta = 0;
    std::uint32_t q = 0;
    int dfree = 0;
    std::string alg;
    std::uint64_t ext_eval = 0;
    std::uint64_t nodes_stored = 0;
    std::uint64_t peak = 0;
    std::int64_t ns = 0;
};

struct BenchSkip {
    std::string id;
    std::string alg;
    std::string reason;
};

struct BenchResult {
    std::vector<BenchRecord> records;  // corpus order, algorithms in request order
    std::vector<BenchSkip> skipped;
};

/// Algorithm names accepted by run_algorithm and the CLI.
const std::vector<std::string>& algorithm_names();
bool algorithm_is_correct(const std::string& alg);  // false only for heapmod

/// Dispatches to one engine by name: naive, fast, fast-baseline, bidir,
/// larsen, heapmod, oracle. The oracle and heapmod report empty stats.
std::pair<int, RunStats> run_algorithm(const GeneratorMatrix& G, const std::string& alg);

/// Runs every requested algorithm on every code. Precondition failures skip
/// the (code, algorithm) pair with a reason; disagreement between correct
/// algorithms on the same code throws MismatchedDistance. With parallel > 1
/// the codes are processed concurrently (each engine stays sequential) and
/// the record order is still deterministic.
BenchResult run_bench(const std::vector<CodeFile>& corpus, const std::vector<std::string>& algs,
                      int parallel = 1);

/// Header exactly: id,n,k,delta,q,dfree,alg,ext_eval,nodes_stored,peak,ns
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace freedist

#endif
