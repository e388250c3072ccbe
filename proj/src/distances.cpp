#include "freedist/distances.hpp"

#include <climits>
#include <cstdlib>
#include <queue>

namespace freedist {

std::uint64_t state_table_limit() {
    if (const char* env = std::getenv("FREEDIST_TABLE_LIMIT")) {
        const unsigned long long v = std::strtoull(env, nullptr, 10);
        if (v > 0) return v;
    }
    return 1ull << 24;
}

namespace {

void coldist_dfs(const Trellis& T, std::uint64_t state, int depth, int acc, std::vector<int>& best) {
    const int J = static_cast<int>(best.size()) - 1;
    for (std::uint64_t u = 0; u < T.num_inputs(); ++u) {
        const auto step = T.forward_step(state, u);
        if (depth == 0 && step.weight == 0) continue;  // v_0 = 0: not counted by d_j
        const int na = acc + step.weight;
        auto& slot = best[static_cast<std::size_t>(depth)];
        if (na < slot) slot = na;
        // Weights only grow with depth and the final profile is
        // non-decreasing, so nothing below this node can beat any d_t once
        // the running weight reaches the current d_J.
        if (depth < J && na < best[static_cast<std::size_t>(J)]) coldist_dfs(T, step.state, depth + 1, na, best);
    }
}

}  // namespace

ColumnDistanceProfile column_distances(const Trellis& T, int J) {
    ColumnDistanceProfile p;
    p.values.assign(static_cast<std::size_t>(J) + 1, INT_MAX);
    coldist_dfs(T, 0, 0, 0, p.values);
    return p;
}

ColumnDistanceProfile column_distances(const GeneratorMatrix& G, int J) {
    return column_distances(Trellis(G), J);
}

StateDistanceTable state_min_weights(const Trellis& T, std::uint64_t table_limit) {
    const std::uint64_t S = T.num_states();
    if (S > table_limit) throw StateSpaceTooLarge("q^delta exceeds the state table limit");
    StateDistanceTable out;
    out.d.assign(static_cast<std::size_t>(S), INT_MAX);
    out.d[0] = 0;
    std::vector<int> cur(static_cast<std::size_t>(S), INT_MAX), next;
    cur[0] = 0;
    for (int step = 0; step < T.memory() + 1; ++step) {
        next.assign(static_cast<std::size_t>(S), INT_MAX);
        for (std::uint64_t s = 0; s < S; ++s) {
            const int base = cur[static_cast<std::size_t>(s)];
            if (base == INT_MAX) continue;
            for (std::uint64_t u = 0; u < T.num_inputs(); ++u) {
                const auto e = T.forward_step(s, u);
                const int w = base + e.weight;
                auto& slot = next[static_cast<std::size_t>(e.state)];
                if (w < slot) {
                    slot = w;
                    auto& b = out.d[static_cast<std::size_t>(e.state)];
                    if (w < b) b = w;
                }
            }
        }
        cur.swap(next);
    }
    return out;
}

StateDistanceTable state_min_weights(const GeneratorMatrix& G) { return state_min_weights(Trellis(G)); }

std::vector<int> distances_to_zero(const Trellis& T, std::uint64_t table_limit) {
    const std::uint64_t S = T.num_states();
    if (S > table_limit) throw StateSpaceTooLarge("q^delta exceeds the state table limit");
    std::vector<int> dist(static_cast<std::size_t>(S), INT_MAX);
    using Item = std::pair<int, std::uint64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[0] = 0;
    heap.push({0, 0});
    while (!heap.empty()) {
        const auto [d, s] = heap.top();
        heap.pop();
        if (d != dist[static_cast<std::size_t>(s)]) continue;
        // Relax incoming edges: a predecessor P with edge weight w reaches
        // the zero state through s at cost d + w.
        for (std::uint64_t e = 0; e < T.num_inputs(); ++e) {
            const auto step = T.backward_step(s, e);
            const int nd = d + step.weight;
            auto& slot = dist[static_cast<std::size_t>(step.state)];
            if (nd < slot) {
                slot = nd;
                heap.push({nd, step.state});
            }
        }
    }
    return dist;
}

int dijkstra_free_distance(const GeneratorMatrix& G) {
    const Trellis T(G);
    if (!is_noncatastrophic(G)) throw Catastrophic("the free distance search requires a non-catastrophic code");
    const auto to_zero = distances_to_zero(T);
    int best = INT_MAX;
    for (std::uint64_t u = 1; u < T.num_inputs(); ++u) {
        const auto e = T.forward_step(0, u);
        if (e.state == 0) {
            // Length-1 codeword via a nonzero-input self-loop (possible only
            // when some row degree is 0); tracked separately from the
            // all-zero-input loop.
            best = std::min(best, e.weight);
        } else if (to_zero[static_cast<std::size_t>(e.state)] != INT_MAX) {
            best = std::min(best, e.weight + to_zero[static_cast<std::size_t>(e.state)]);
        }
    }
    return best;
}

namespace {

// Output weight accumulated by draining `state` to zero with all-zero inputs.
int drain_weight(const Trellis& T, std::uint64_t state) {
    int w = 0;
    while (state != 0) {
        const auto e = T.forward_step(state, 0);
        w += e.weight;
        state = e.state;
    }
    return w;
}

void depth_limited_dfs(const Trellis& T, std::uint64_t state, int depth, int acc, bool nonzero, int& best) {
    if (acc >= best) return;
    if (depth == 0) {
        if (nonzero) best = std::min(best, acc + drain_weight(T, state));
        return;
    }
    for (std::uint64_t u = 0; u < T.num_inputs(); ++u) {
        const auto e = T.forward_step(state, u);
        depth_limited_dfs(T, e.state, depth - 1, acc + e.weight, nonzero || u != 0, best);
    }
}

}  // namespace

int depth_limited_min_weight(const GeneratorMatrix& G, int L) {
    const Trellis T(G);
    int best = INT_MAX;
    depth_limited_dfs(T, 0, L, 0, false, best);
    return best;
}

}  // namespace freedist
