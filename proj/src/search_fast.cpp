#include "freedist/search_fast.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace freedist {

namespace {

struct Node {
    std::uint64_t state;
    int weight;
    int consumed;  // edge weight spent reaching it, used for the pick rule
    std::uint64_t ext;
};

}  // namespace

std::pair<int, RunStats> fast_free_distance(const GeneratorMatrix& G, const FastOptions& opts) {
    const Trellis T(G);
    if (!is_noncatastrophic(G)) throw Catastrophic("fast search requires a non-catastrophic code");
    if (opts.initial_bound && *opts.initial_bound < 1) throw BadBound("initial bound must be at least 1");

    RunStats stats;
    const int M = T.memory();
    const ColumnDistanceProfile cd = column_distances(T, M);

    StateDistanceTable dstate;
    if (opts.use_state_distance_pruning) {
        const std::uint64_t limit = opts.table_limit ? opts.table_limit : state_table_limit();
        if (T.num_states() <= limit) {
            dstate = state_min_weights(T, limit);
            stats.state_distance_pruning = true;
        }
        // else: degrade silently to baseline pruning; the flag stays false.
    }

    int bound = opts.initial_bound
                    ? *opts.initial_bound
                    : singleton_bound(static_cast<int>(T.n()), static_cast<int>(T.k()), T.delta());

    const auto notify = [&](SearchEvent::Kind kind, std::uint64_t s, int w) {
        if (opts.observer) opts.observer({kind, s, w, bound});
    };
    const auto check_steps = [&] {
        if (opts.step_limit && stats.extensions_evaluated > opts.step_limit)
            throw StepLimitExceeded("fast search exceeded its step ceiling");
    };

    std::vector<Node> stack;
    std::vector<Node> survivors;

    // Initialization identical to the naive search.
    std::vector<Trellis::Step> seed(static_cast<std::size_t>(T.num_inputs()));
    for (std::uint64_t e = 1; e < T.num_inputs(); ++e) {
        seed[static_cast<std::size_t>(e)] = T.backward_step(0, e);
        ++stats.extensions_evaluated;
    }
    for (std::uint64_t e = 1; e < T.num_inputs(); ++e) {
        const auto& s = seed[static_cast<std::size_t>(e)];
        if (s.state == 0 && s.weight < bound) {
            bound = s.weight;
            ++stats.bound_updates;
            notify(SearchEvent::Kind::BoundUpdate, 0, s.weight);
        }
    }
    for (std::uint64_t e = 1; e < T.num_inputs(); ++e) {
        const auto& s = seed[static_cast<std::size_t>(e)];
        if (s.state == 0) continue;
        const int w = bound - s.weight;
        if (w >= 0) survivors.push_back({s.state, w, s.weight, e});
    }
    for (auto it = survivors.rbegin(); it != survivors.rend(); ++it) {
        stack.push_back(*it);
        ++stats.nodes_stored;
    }
    stats.peak_storage = std::max<std::uint64_t>(stats.peak_storage, stack.size());

    bool have_cur = false;
    Node cur{};
    while (have_cur || !stack.empty()) {
        if (!have_cur) {
            cur = stack.back();
            stack.pop_back();
        }
        have_cur = false;
        survivors.clear();
        for (std::uint64_t e = 0; e < T.num_inputs(); ++e) {
            const auto step = T.backward_step(cur.state, e);
            ++stats.extensions_evaluated;
            check_steps();
            const int w = cur.weight - step.weight;
            if (step.state == 0) {
                if (w > 0) {
                    const int delta = w;
                    bound -= delta;
                    cur.weight -= delta;
                    ++stats.bound_updates;
                    notify(SearchEvent::Kind::BoundUpdate, 0, delta);
                    const auto rebalance = [&](std::vector<Node>& nodes) {
                        std::size_t out = 0;
                        for (auto& nd : nodes) {
                            if (nd.weight < delta) {
                                notify(SearchEvent::Kind::StackDelete, nd.state, nd.weight);
                                continue;
                            }
                            nd.weight -= delta;
                            nodes[out++] = nd;
                        }
                        nodes.resize(out);
                    };
                    rebalance(stack);
                    rebalance(survivors);
                }
                continue;
            }
            const int sig = T.sigma(step.state);
            assert(sig >= 1 && sig <= M);  // sigma = 0 only at the zero state
            const bool discard =
                (stats.state_distance_pruning && w < dstate.at(step.state) && w < cd.at(M)) || w < cd.at(sig - 1);
            if (discard) {
                notify(SearchEvent::Kind::Discard, step.state, w);
                continue;
            }
            survivors.push_back({step.state, w, step.weight, e});
        }
        if (!survivors.empty()) {
            // Continue with the all-zero extension when it survived,
            // otherwise with the extension that consumed the least weight
            // (first in input order on ties).
            std::size_t pick = 0;
            if (survivors[0].ext != 0) {
                for (std::size_t i = 1; i < survivors.size(); ++i)
                    if (survivors[i].consumed < survivors[pick].consumed) pick = i;
            }
            cur = survivors[pick];
            have_cur = true;
            survivors.erase(survivors.begin() + static_cast<std::ptrdiff_t>(pick));
            for (auto it = survivors.rbegin(); it != survivors.rend(); ++it) {
                stack.push_back(*it);
                ++stats.nodes_stored;
            }
            stats.peak_storage = std::max<std::uint64_t>(stats.peak_storage, stack.size());
        }
    }
    return {bound, stats};
}

}  // namespace freedist
