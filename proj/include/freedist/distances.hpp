#ifndef FREEDIST_DISTANCES_HPP
#define FREEDIST_DISTANCES_HPP

#include <cstdint>
#include <vector>

#include "freedist/trellis.hpp"

namespace freedist {

/// Column distances d_0 ... d_J.
struct ColumnDistanceProfile {
    std::vector<int> values;

    int at(int j) const { return values[static_cast<std::size_t>(j)]; }
    int max_j() const { return static_cast<int>(values.size()) - 1; }
};

/// d(S) for every state: the minimum output weight over forward paths from
/// the zero state to S of length at most M+1. Every state is reachable
/// within M steps, so all entries are finite.
struct StateDistanceTable {
    std::vector<int> d;  // indexed by state code_index

    int at(std::uint64_t s) const { return d[static_cast<std::size_t>(s)]; }
};

/// Default cap on q^delta for materialized per-state tables; the environment
/// variable FREEDIST_TABLE_LIMIT overrides it.
std::uint64_t state_table_limit();

/// d_j = min weight of the first j+1 output blocks over codewords with
/// v_0 != 0, for j = 0..J. Depth-first enumeration over input sequences with
/// branch-and-bound on the running minimum. Requires a row-reduced G.
ColumnDistanceProfile column_distances(const GeneratorMatrix& G, int J);
ColumnDistanceProfile column_distances(const Trellis& T, int J);

/// Forward dynamic programming over M+1 layers. Throws StateSpaceTooLarge
/// when q^delta exceeds the table limit.
StateDistanceTable state_min_weights(const GeneratorMatrix& G);
StateDistanceTable state_min_weights(const Trellis& T, std::uint64_t table_limit = state_table_limit());

/// Independent oracle: weight of the minimum-weight nontrivial zero -> zero
/// closed walk, excluding the all-zero-input self-loop. Equals the free
/// distance for non-catastrophic codes. Throws Catastrophic /
/// StateSpaceTooLarge.
int dijkstra_free_distance(const GeneratorMatrix& G);

/// Minimum-weight forward path from every state to the zero state, via
/// Dijkstra on the reversed diagram. Entry for the zero state is 0.
std::vector<int> distances_to_zero(const Trellis& T, std::uint64_t table_limit = state_table_limit());

/// Minimum weight of encode(u, G) over nonzero inputs u whose rows each have
/// fewer than L+1 symbols (deg u_i < L). Exhaustive with branch-and-bound.
int depth_limited_min_weight(const GeneratorMatrix& G, int L);

}  // namespace freedist

#endif
