#ifndef FREEDIST_STATS_HPP
#define FREEDIST_STATS_HPP

#include <cstdint>

namespace freedist {

/// Node-visit and storage counters, collected identically by every search so
/// their efficiency can be compared.
struct RunStats {
    std::uint64_t extensions_evaluated = 0;  // transition evaluations
    std::uint64_t nodes_stored = 0;          // stack / array insertions
    std::uint64_t peak_storage = 0;          // max simultaneous stored nodes
    std::uint64_t bound_updates = 0;         // improvements of the upper bound
    // False when a search that could use the state-distance table ran
    // without it (disabled or table too large).
    bool state_distance_pruning = false;
};

}  // namespace freedist

#endif
