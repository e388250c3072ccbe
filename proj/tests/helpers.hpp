#ifndef FREEDIST_TESTS_HELPERS_HPP
#define FREEDIST_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "freedist/codegen.hpp"
#include "freedist/legacy.hpp"
#include "freedist/polymat.hpp"

namespace freedist::tests {

// (1, 2, 2) code G = [1 + z^2, z^2] over F_2; also the appendix example
// G = (z^2 + 1, z^2).
inline GeneratorMatrix fig1_code() {
    return make_matrix(small_field(2), {{{1, 0, 1}, {0, 0, 1}}});
}

// G = (z^6 + z^4 + 1, z^6 + z^5 + z^4 + z^3 + z + 1): the memory-6 code on
// which the step-shortest-paths heuristic overshoots the free distance.
inline GeneratorMatrix heapmod_counterexample() {
    return make_matrix(small_field(2), {{{1, 0, 0, 0, 1, 0, 1}, {1, 1, 0, 1, 1, 1, 1}}});
}

// Degenerate delta = 0 block code [1, 1] over F_2.
inline GeneratorMatrix block_code_11() { return make_matrix(small_field(2), {{{1}, {1}}}); }

// G = [1 + z, 1 + z]: the entries share the factor 1 + z.
inline GeneratorMatrix catastrophic_code() {
    return make_matrix(small_field(2), {{{1, 1}, {1, 1}}});
}

inline WeightedDigraph fig8_graph() {
    WeightedDigraph g;
    g.vertices = {"00", "01", "10", "11"};
    g.zero = "00";
    g.edges = {{"00", "00", 0}, {"00", "10", 1}, {"10", "11", 1}, {"10", "01", 2},
               {"11", "11", 20}, {"11", "01", 0}, {"01", "10", 20}, {"01", "00", 10}};
    return g;
}

struct SuiteParams {
    std::uint32_t q;
    int n, k, delta;
};

// Deterministic stream of suite codes over q in {2,3,4,5}, n <= 4, k < n,
// delta in [1, max_delta].
inline std::vector<GeneratorMatrix> suite_codes(int count, int max_delta = 5, std::uint64_t seed = 0xF00D) {
    const std::pair<int, int> shapes[] = {{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}};
    const std::uint32_t qs[] = {2, 3, 4, 5};
    std::vector<GeneratorMatrix> out;
    std::mt19937_64 rng(seed);
    for (int i = 0; out.size() < static_cast<std::size_t>(count); ++i) {
        const std::uint32_t q = qs[i % 4];
        const int delta = 1 + (i / 4) % max_delta;
        const auto [n, k] = shapes[(i / (4 * max_delta)) % 6];
        out.push_back(random_code(q, n, k, delta, rng));
    }
    return out;
}

// Binary rate-1/n codes only (for larsen / heapmod / green-blue checks).
inline std::vector<GeneratorMatrix> binary_1n_codes(int count, int min_M, int max_M,
                                                    std::uint64_t seed = 0xBEEF) {
    std::vector<GeneratorMatrix> out;
    std::mt19937_64 rng(seed);
    for (int i = 0; out.size() < static_cast<std::size_t>(count); ++i) {
        const int n = 2 + i % 3;
        const int M = min_M + (i / 3) % (max_M - min_M + 1);
        out.push_back(random_code(2, n, 1, M, rng));
    }
    return out;
}

// k = 2 code on which the bidirectional search gives a wrong (larger) answer
// when zero-state extensions are stored instead of folded into the bound.
// Found by randomized search against the oracle; see test_search_bidir.
inline GeneratorMatrix bidir_step4_witness() {
    return make_matrix(small_field(2), {{{1}, {0, 1}, {1, 1}}, {{0, 1}, {1}, {1, 0, 1}}});
}

}  // namespace freedist::tests

#endif
