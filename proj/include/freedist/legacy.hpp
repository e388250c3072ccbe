#ifndef FREEDIST_LEGACY_HPP
#define FREEDIST_LEGACY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "freedist/stats.hpp"
#include "freedist/trellis.hpp"

namespace freedist {

/// Directed graph with nonnegative edge weights and a designated zero
/// vertex; parallel edges are representable in the input format but the
/// Larsen runner requires the de Bruijn shape of a binary shift register.
struct WeightedDigraph {
    std::vector<std::string> vertices;
    std::string zero;
    struct Edge {
        std::string from;
        std::string to;
        int weight;
    };
    std::vector<Edge> edges;
};

struct HeapmodOptions {
    /// Precompute the weight of every register in [1, 2^{M+1}) up front
    /// instead of evaluating lazily along the examined paths. Same result.
    bool full_table = false;
};

/// Shortest-paths-by-steps heuristic over the register tree of a binary
/// rate-1/n code (root index 1, children 2i and 2i+1, register = input plus
/// shift register): sums the output weights along the tree paths from the
/// indices l_j = (2j+1) 2^M to the root and returns the minimum.
///
/// KNOWN INCORRECT by design: it only examines the 2^{M+1} step-shortest
/// zero-to-zero paths, so inputs longer than M+2 symbols are never explored
/// and the result can exceed the true free distance. Kept as a faithful
/// reproduction for demonstration and comparison.
int heapmod_free_distance(const GeneratorMatrix& G, const HeapmodOptions& opts = {});

/// Upper bound on the number of input symbols heapmod ever explores for
/// memory M (equals M + 2; derived from the depth of the l_j indices).
int heapmod_explored_input_length(int M);

/// Bidirectional array search for binary rate-1/n codes, steps exactly as
/// published: 0- and 1-extensions, half-bound cutoff, opposite-type meetings
/// tighten the bound, stop when twice the selected weight reaches it.
/// Correct on convolutional codes, though not on arbitrary weighted diagrams
/// of the same shape (see larsen_on_graph). Requires W0 >= d_free.
std::pair<int, RunStats> larsen_free_distance(const GeneratorMatrix& G, int W0);

/// The identical step 1-17 logic on an arbitrary weighted digraph shaped
/// like a binary memory-m shift register diagram (every vertex one
/// 0-successor and one 1-successor). No code semantics: weights are taken
/// from the edges as given, and the result need not be the true shortest
/// cycle. n is the block length used by the half-bound cutoff (1 for plain
/// graphs). Throws MalformedDiagram when the shape is wrong.
int larsen_on_graph(const WeightedDigraph& g, int W0, int n = 1);

/// Weight of the true shortest nontrivial cycle through the zero vertex
/// (excluding the zero self-loop), for cross-checking larsen_on_graph.
int graph_shortest_zero_cycle(const WeightedDigraph& g);

/// Checks the path property behind the repaired correctness argument for
/// binary 1/n codes with M >= 2: every path from the zero state through
/// (0...011) to (0...01) weighs at least as much as the edge from (0...01)
/// back to zero. Bounded enumeration of simple-prefix paths of up to
/// `horizon` edges (default 2M+2).
bool green_blue_property(const GeneratorMatrix& G, int horizon = 0);

}  // namespace freedist

#endif
