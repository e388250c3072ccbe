#ifndef FREEDIST_SEARCH_BIDIR_HPP
#define FREEDIST_SEARCH_BIDIR_HPP

#include <optional>
#include <utility>

#include "freedist/distances.hpp"
#include "freedist/stats.hpp"

namespace freedist {

struct BidirOptions {
    std::optional<int> initial_bound;
    std::uint64_t table_limit = 0;  // 0 = library default
    std::uint64_t step_limit = 0;
    /// Step 4 folds zero-state extensions straight into the bound instead of
    /// storing them (the seeding step applies the same rule to self-loop
    /// edges). Disabling it (tests only) stores zero-state nodes like any
    /// other state, so no zero return ever updates the bound directly; that
    /// makes the search wrong for k > 1, where codewords can return to the
    /// zero state without offering any intermediate meeting point.
    bool zero_state_step4 = true;
};

/// Bidirectional free-distance search. Forward and backward frontiers grow
/// on the same state-transition diagram and share one storage array; every
/// node carries a type F/B/DF/DB (path direction, optionally dead). Nodes
/// are expanded lowest-accumulated-weight first. An opposite-type meeting at
/// a state tightens the bound with the sum of the two path weights; the
/// search stops once twice the expanded weight reaches the bound or all
/// states are dead. Extensions are pruned by the half-bound cutoff
/// 2 W_{E,L} > W* + n - 1 and by the FAST tests, evaluated against the
/// statistics of the code itself for backward nodes and of the reverse code
/// for forward nodes.
std::pair<int, RunStats> bidir_free_distance(const GeneratorMatrix& G, const BidirOptions& opts = {});

}  // namespace freedist

#endif
