#ifndef FREEDIST_TESTS_ORACLES_HPP
#define FREEDIST_TESTS_ORACLES_HPP

// Independent reference computations used to freeze expected values. These
// deliberately avoid the library's trellis/DP code paths: everything here
// works through plain polynomial arithmetic or explicit path enumeration.

#include <climits>
#include <functional>
#include <queue>
#include <vector>

#include "freedist/distances.hpp"
#include "freedist/polymat.hpp"

namespace freedist::tests {

// Applies fn to every nonzero input vector u with deg(u_i) < len.
inline void for_each_input(const GeneratorMatrix& G, int len, const std::function<void(const PolyVector&)>& fn) {
    const std::uint32_t q = G.field->q();
    const std::size_t digits = G.k * static_cast<std::size_t>(len);
    std::vector<galois::Elem> flat(digits, 0);
    while (true) {
        // odometer increment
        std::size_t pos = 0;
        while (pos < digits) {
            if (++flat[pos] < q) break;
            flat[pos] = 0;
            ++pos;
        }
        if (pos == digits) return;  // wrapped around: all inputs done
        PolyVector u(G.k);
        for (std::size_t i = 0; i < G.k; ++i) {
            std::vector<galois::Elem> c(flat.begin() + static_cast<std::ptrdiff_t>(i * len),
                                        flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * len));
            u[i] = Poly(std::move(c));
        }
        fn(u);
    }
}

// Minimum codeword weight over nonzero inputs with deg(u_i) < len, via
// polynomial encoding only.
inline int encode_min_weight(const GeneratorMatrix& G, int len) {
    int best = INT_MAX;
    for_each_input(G, len, [&](const PolyVector& u) { best = std::min(best, poly_weight(encode(u, G))); });
    return best;
}

// Column distances by direct truncation of polynomial codewords: inputs of
// degree <= j determine the first j+1 blocks.
inline std::vector<int> coldist_oracle(const GeneratorMatrix& G, int J) {
    std::vector<int> d(static_cast<std::size_t>(J) + 1, INT_MAX);
    for_each_input(G, J + 1, [&](const PolyVector& u) {
        const PolyVector v = encode(u, G);
        bool v0_nonzero = false;
        for (const Poly& p : v) v0_nonzero = v0_nonzero || p.coeff(0) != 0;
        if (!v0_nonzero) return;
        int w = 0;
        for (int j = 0; j <= J; ++j) {
            for (const Poly& p : v) w += p.coeff(j) != 0;
            d[static_cast<std::size_t>(j)] = std::min(d[static_cast<std::size_t>(j)], w);
        }
    });
    return d;
}

// Minimum path weight from the zero state to every state over paths of
// length <= maxlen, by explicit enumeration of all input sequences (no
// per-state relaxation).
inline std::vector<int> path_enum_min_weights(const Trellis& T, int maxlen) {
    std::vector<int> best(static_cast<std::size_t>(T.num_states()), INT_MAX);
    best[0] = 0;
    std::function<void(std::uint64_t, int, int)> dfs = [&](std::uint64_t s, int left, int acc) {
        if (left == 0) return;
        for (std::uint64_t u = 0; u < T.num_inputs(); ++u) {
            const auto e = T.forward_step(s, u);
            auto& slot = best[static_cast<std::size_t>(e.state)];
            if (acc + e.weight < slot) slot = acc + e.weight;
            dfs(e.state, left - 1, acc + e.weight);
        }
    };
    dfs(0, maxlen, 0);
    return best;
}

// True minimum weight of a forward path from the zero state to each state
// (unbounded length), for certifying search discards.
inline std::vector<int> forward_dijkstra(const Trellis& T) {
    std::vector<int> dist(static_cast<std::size_t>(T.num_states()), INT_MAX);
    using Item = std::pair<int, std::uint64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[0] = 0;
    heap.push({0, 0});
    while (!heap.empty()) {
        const auto [w, s] = heap.top();
        heap.pop();
        if (w != dist[static_cast<std::size_t>(s)]) continue;
        for (std::uint64_t u = 0; u < T.num_inputs(); ++u) {
            const auto e = T.forward_step(s, u);
            if (w + e.weight < dist[static_cast<std::size_t>(e.state)]) {
                dist[static_cast<std::size_t>(e.state)] = w + e.weight;
                heap.push({w + e.weight, e.state});
            }
        }
    }
    return dist;
}

// Enumerates every nontrivial zero -> zero walk of total weight exactly
// `target` (skipping the zero-weight self-loop at zero) and hands the
// per-edge weight sequence to the callback. `length_cap` bounds the walk
// length; zero-weight cycles cannot occur in non-catastrophic codes, so a
// generous cap sees every walk of the target weight.
inline void for_each_min_cycle(const Trellis& T, int target, int length_cap,
                               const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> edges;
    std::function<void(std::uint64_t, int)> dfs = [&](std::uint64_t s, int acc) {
        if (static_cast<int>(edges.size()) >= length_cap) return;
        for (std::uint64_t u = 0; u < T.num_inputs(); ++u) {
            if (s == 0 && u == 0) continue;  // never traverse the trivial self-loop
            const auto e = T.forward_step(s, u);
            const int na = acc + e.weight;
            if (na > target) continue;
            edges.push_back(e.weight);
            if (e.state == 0) {
                if (na == target) fn(edges);
            } else {
                dfs(e.state, na);
            }
            edges.pop_back();
        }
    };
    dfs(0, 0);
}

}  // namespace freedist::tests

#endif
