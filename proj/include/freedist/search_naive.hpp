#ifndef FREEDIST_SEARCH_NAIVE_HPP
#define FREEDIST_SEARCH_NAIVE_HPP

#include <functional>
#include <optional>
#include <utility>

#include "freedist/stats.hpp"
#include "freedist/trellis.hpp"

namespace freedist {

/// Observer events emitted by the stack searches; used by tests to pin down
/// trace-level behaviour (bound updates, rebalancing deletions, discards).
struct SearchEvent {
    enum class Kind { BoundUpdate, StackDelete, Discard };
    Kind kind;
    std::uint64_t state = 0;  // affected state (deleted node / discarded extension)
    int weight = 0;           // its residual weight
    int bound = 0;            // upper bound after the event
};

struct NaiveOptions {
    std::optional<int> initial_bound;                 // default: generalized Singleton bound
    std::uint64_t step_limit = 0;                     // 0 = unlimited; else throw StepLimitExceeded
    std::function<void(const SearchEvent&)> observer;  // optional
};

/// Backward stack search for the free distance: explores predecessors of the
/// zero state, decrements the residual weight budget, tightens the upper
/// bound on every zero-state return with positive residual and rebalances
/// the stack (delete entries below the improvement, subtract it from the
/// rest). Requires a row-reduced, non-catastrophic generator matrix.
std::pair<int, RunStats> naive_free_distance(const GeneratorMatrix& G, const NaiveOptions& opts = {});

}  // namespace freedist

#endif
