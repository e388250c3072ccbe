#include "freedist/search_bidir.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace freedist {

namespace {

enum class Dir : std::uint8_t { F, B };

struct Entry {
    int w;
    Dir t2;
    bool dead;
    std::uint64_t seq;  // insertion order, breaks selection ties
};

}  // namespace

std::pair<int, RunStats> bidir_free_distance(const GeneratorMatrix& G, const BidirOptions& opts) {
    const Trellis T(G);
    if (!is_noncatastrophic(G)) throw Catastrophic("bidirectional search requires a non-catastrophic code");
    if (opts.initial_bound && *opts.initial_bound < 1) throw BadBound("initial bound must be at least 1");

    const std::uint64_t limit = opts.table_limit ? opts.table_limit : state_table_limit();
    const GeneratorMatrix rev = reverse_code(G);
    const Trellis RT(rev);
    assert(RT.nu() == T.nu());

    const int M = T.memory();
    // Backward nodes complete through a forward path of the code itself;
    // forward nodes complete through a forward path of the reverse code.
    const ColumnDistanceProfile cd_b = column_distances(T, M);
    const ColumnDistanceProfile cd_f = column_distances(RT, M);
    const StateDistanceTable ds_b = state_min_weights(T, limit);
    const StateDistanceTable ds_f = state_min_weights(RT, limit);

    RunStats stats;
    stats.state_distance_pruning = true;
    int bound = opts.initial_bound
                    ? *opts.initial_bound
                    : singleton_bound(static_cast<int>(T.n()), static_cast<int>(T.k()), T.delta());
    const int n = static_cast<int>(T.n());

    const auto check_steps = [&] {
        if (opts.step_limit && stats.extensions_evaluated > opts.step_limit)
            throw StepLimitExceeded("bidirectional search exceeded its step ceiling");
    };

    std::unordered_map<std::uint64_t, Entry> frontier;
    std::uint64_t seq = 0;
    const auto note_stored = [&] {
        ++stats.nodes_stored;
        stats.peak_storage = std::max<std::uint64_t>(stats.peak_storage, frontier.size());
    };
    const auto improve = [&](int candidate) {
        if (candidate < bound) {
            bound = candidate;
            ++stats.bound_updates;
        }
    };

    // Step 1: seed both frontiers from the zero state. Nonzero-input edges
    // that stay at the zero state fold straight into the bound. An F/B seed
    // collision keeps the lighter path and treats the weight sum as a
    // zero -> zero codeword. (With zero_state_step4 off, self-loop seeds are
    // stored like anything else and the fold never happens.)
    for (std::uint64_t u = 1; u < T.num_inputs(); ++u) {
        const auto e = T.forward_step(0, u);
        ++stats.extensions_evaluated;
        if (e.state == 0 && opts.zero_state_step4) {
            improve(e.weight);
            continue;
        }
        auto [it, inserted] = frontier.try_emplace(e.state, Entry{e.weight, Dir::F, false, seq});
        if (inserted) {
            ++seq;
            note_stored();
        } else if (e.weight < it->second.w) {
            it->second.w = e.weight;
        }
    }
    for (std::uint64_t x = 1; x < T.num_inputs(); ++x) {
        const auto e = T.backward_step(0, x);
        ++stats.extensions_evaluated;
        if (e.state == 0 && opts.zero_state_step4) {
            improve(e.weight);
            continue;
        }
        auto it = frontier.find(e.state);
        if (it == frontier.end()) {
            frontier.emplace(e.state, Entry{e.weight, Dir::B, false, seq++});
            note_stored();
            continue;
        }
        if (it->second.t2 == Dir::F) {
            improve(it->second.w + e.weight);
            if (e.weight < it->second.w) {
                it->second.w = e.weight;
                it->second.t2 = Dir::B;
            }
        } else if (e.weight < it->second.w) {
            it->second.w = e.weight;
        }
    }

    while (true) {
        // Step 2: lowest-weight non-dead node, earliest stored on ties.
        Entry* cur = nullptr;
        std::uint64_t cur_state = 0;
        for (auto& [s, entry] : frontier) {
            if (entry.dead) continue;
            if (!cur || entry.w < cur->w || (entry.w == cur->w && entry.seq < cur->seq)) {
                cur = &entry;
                cur_state = s;
            }
        }
        if (!cur) break;  // all states are dead
        const int wl = cur->w;
        const Dir dir = cur->t2;

        for (std::uint64_t e = 0; e < T.num_inputs(); ++e) {
            // Step 3: terminal state and accumulated weight of the extension.
            const auto step = dir == Dir::F ? T.forward_step(cur_state, e) : T.backward_step(cur_state, e);
            ++stats.extensions_evaluated;
            check_steps();
            const int wel = wl + step.weight;

            // Step 4: zero-state hits update the bound and are not stored.
            if (step.state == 0 && opts.zero_state_step4) {
                improve(wel);
                continue;
            }

            // Step 5: half-bound cutoff on the accumulated weight, FAST
            // tests on the residual, against the statistics of the node's
            // direction.
            if (2 * wel > bound + n - 1) continue;
            const int residual = bound - wel;
            const std::uint64_t stat_state = dir == Dir::F ? T.reverse_state(step.state) : step.state;
            const auto& cd = dir == Dir::F ? cd_f : cd_b;
            const auto& ds = dir == Dir::F ? ds_f : ds_b;
            const int sig = T.sigma(stat_state);
            if (residual < ds.at(stat_state) && residual < cd.at(M)) continue;
            if (sig > 0 && residual < cd.at(sig - 1)) continue;

            // Step 6: unseen states are stored with the current direction.
            auto it = frontier.find(step.state);
            if (it == frontier.end()) {
                frontier.emplace(step.state, Entry{wel, dir, false, seq++});
                note_stored();
                continue;
            }
            Entry& hit = it->second;
            if (hit.t2 != dir) {
                // Steps 8-10: opposite-type meeting.
                improve(wel + hit.w);
                if (wel >= hit.w) continue;
                hit.w = wel;
                hit.t2 = dir;  // T1 is left unchanged
                continue;
            }
            // Steps 11-12: same-type hit; dead nodes never lower their weight.
            if (hit.dead) continue;
            hit.w = std::min(hit.w, wel);
        }
        // Step 13.
        cur->dead = true;
        // Step 14.
        if (2 * wl >= bound) break;
    }
    return {bound, stats};
}

}  // namespace freedist
