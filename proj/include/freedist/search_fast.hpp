#ifndef FREEDIST_SEARCH_FAST_HPP
#define FREEDIST_SEARCH_FAST_HPP

#include <functional>
#include <optional>
#include <utility>

#include "freedist/distances.hpp"
#include "freedist/search_naive.hpp"
#include "freedist/stats.hpp"

namespace freedist {

struct FastOptions {
    /// With true this is the optimized algorithm (column distances plus the
    /// d(S) state-distance table); with false only the d_{sigma-1} test runs,
    /// which is the baseline FAST behaviour.
    bool use_state_distance_pruning = true;
    std::optional<int> initial_bound;
    std::uint64_t table_limit = 0;  // 0 = library default
    std::uint64_t step_limit = 0;
    std::function<void(const SearchEvent&)> observer;
};

/// Stack search with column-distance pruning. An extension (S_E, W_E) with
/// S_E nonzero is discarded when
///     (W_E < d(S_E) and W_E < d_M)  or  W_E < d_{sigma-1},
/// sigma = max_i(nu_i - m(S_E)_i). Among surviving extensions the search
/// continues depth-first with the all-zero extension when present, else the
/// one that consumed the least weight. When the d(S) table would exceed the
/// table limit the search degrades to baseline pruning and records that in
/// the returned RunStats.
std::pair<int, RunStats> fast_free_distance(const GeneratorMatrix& G, const FastOptions& opts = {});

}  // namespace freedist

#endif
