#include "freedist/search_naive.hpp"

#include <algorithm>
#include <vector>

namespace freedist {

namespace {

struct Node {
    std::uint64_t state;
    int weight;
};

}  // namespace

std::pair<int, RunStats> naive_free_distance(const GeneratorMatrix& G, const NaiveOptions& opts) {
    const Trellis T(G);
    if (!is_noncatastrophic(G)) throw Catastrophic("naive search requires a non-catastrophic code");
    if (opts.initial_bound && *opts.initial_bound < 1) throw BadBound("initial bound must be at least 1");

    RunStats stats;
    int bound = opts.initial_bound
                    ? *opts.initial_bound
                    : singleton_bound(static_cast<int>(T.n()), static_cast<int>(T.k()), T.delta());

    const auto notify = [&](SearchEvent::Kind kind, std::uint64_t s, int w) {
        if (opts.observer) opts.observer({kind, s, w, bound});
    };
    const auto check_steps = [&] {
        if (opts.step_limit && stats.extensions_evaluated > opts.step_limit)
            throw StepLimitExceeded("naive search exceeded its step ceiling");
    };

    std::vector<Node> stack;
    std::vector<Node> survivors;

    // Seed from the zero state. Extension 0 is the all-zero input and is
    // skipped; zero -> zero edges with nonzero input (rows of degree 0) fold
    // straight into the bound and are never stacked.
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
        if (w >= 0) survivors.push_back({s.state, w});
    }
    for (auto it = survivors.rbegin(); it != survivors.rend(); ++it) {
        stack.push_back(*it);
        ++stats.nodes_stored;
    }
    stats.peak_storage = std::max<std::uint64_t>(stats.peak_storage, stack.size());

    while (!stack.empty()) {
        Node cur = stack.back();
        stack.pop_back();
        survivors.clear();
        for (std::uint64_t e = 0; e < T.num_inputs(); ++e) {
            const auto step = T.backward_step(cur.state, e);
            ++stats.extensions_evaluated;
            check_steps();
            const int w = cur.weight - step.weight;
            if (step.state == 0) {
                if (w > 0) {
                    // Found a codeword w below the bound: tighten, then
                    // rebalance everything still pending against the new
                    // bound scale.
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
                // w == 0 merely matches the current bound; w < 0 is dead.
                continue;
            }
            if (w >= 0) survivors.push_back({step.state, w});
        }
        // LIFO with the zero extension pushed last so it is popped first.
        for (auto it = survivors.rbegin(); it != survivors.rend(); ++it) {
            stack.push_back(*it);
            ++stats.nodes_stored;
        }
        stats.peak_storage = std::max<std::uint64_t>(stats.peak_storage, stack.size());
    }
    return {bound, stats};
}

}  // namespace freedist
