#ifndef BIPCHORD_RECOGNITION_HPP
#define BIPCHORD_RECOGNITION_HPP

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "bipchord/elimination.hpp"
#include "bipchord/graph.hpp"

namespace bipchord {

/// Failure certificate. deleted_edges is the trail of deletions (in
/// deletion order) leading to the first chordal-bipartite subcheck that
/// failed; stuck_subgraph is that subcheck's elimination remainder, whose
/// labels are glued-graph ids (X vertices first, then Y).
struct Witness {
    enum class Kind { StuckSubgraph, DeletedEdgeTrail };

    Kind kind = Kind::StuckSubgraph;
    std::vector<Edge> deleted_edges;
    Graph stuck_subgraph;
};

/// Verdict plus metrics for one recognition run. subchecks counts the
/// chordal-bipartite evaluations performed.
struct CheckReport {
    std::string property;  ///< "chordal-bipartite" when k == 1, else "k-chordal-bipartite"
    int k = 0;
    bool verdict = false;
    std::optional<Witness> witness;
    int vertex_count = 0;  ///< s
    int edge_count = 0;    ///< t
    long long subchecks = 0;
    std::chrono::nanoseconds elapsed{0};
};

struct CheckOptions {
    /// When > 1, the per-edge subchecks of a k = 2 run are evaluated in
    /// parallel. Verdict and witness are independent of the thread count;
    /// the parallel path evaluates every edge (no early exit), so subchecks
    /// can exceed the sequential count on failing inputs.
    int threads = 1;
};

/// True iff every cycle of length >= 6 has a chord, decided by gluing the
/// smaller part into a clique and testing strong chordality. Which side is
/// glued does not affect the verdict.
bool is_chordal_bipartite(const BipartiteGraph& b);

/// True iff every cycle of length >= 6 has at least k chords. k = 0 holds
/// vacuously; k >= 1 is decided recursively: b must be chordal bipartite
/// and every single-edge deletion must be (k-1)-chordal bipartite. Results
/// are memoized per set of deleted edges, so each edge subset is checked
/// once regardless of deletion order.
bool is_k_chordal_bipartite(const BipartiteGraph& b, int k);

/// The flat two-phase check: b is chordal bipartite, and so is every
/// single-edge deletion of b. Agrees with is_k_chordal_bipartite(b, 2).
bool is_two_chordal_bipartite(const BipartiteGraph& b);

/// Runs the k-chordal decision with witness extraction and metrics.
CheckReport check(const BipartiteGraph& b, int k, const CheckOptions& options = {});

}  // namespace bipchord

#endif
