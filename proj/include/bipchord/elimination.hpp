#ifndef BIPCHORD_ELIMINATION_HPP
#define BIPCHORD_ELIMINATION_HPP

#include <optional>
#include <vector>

#include "bipchord/graph.hpp"

namespace bipchord {

/// Result of a greedy elimination run. On success the ordering lists the
/// deleted vertices in deletion order, reported as labels of the input
/// graph. On failure stuck_subgraph is the first remainder containing no
/// eligible vertex; its labels map back to the input graph's ids.
struct EliminationOutcome {
    bool success = false;
    std::vector<VertexId> ordering;
    Graph stuck_subgraph;
};

/// True iff the open neighborhood of v induces a complete graph.
bool is_simplicial(const Graph& g, VertexId v);

/// True iff the closed neighborhoods of v's neighbors form a chain under
/// inclusion. Checked by sorting them by cardinality and verifying each
/// consecutive inclusion; equal-size sets must then be equal. Every simple
/// vertex is simplicial, and vertices of degree <= 1 are always simple.
bool is_simple(const Graph& g, VertexId v);

/// Lowest-id simple vertex, or nothing if none exists.
std::optional<VertexId> find_simple_vertex(const Graph& g);

/// Repeatedly deletes the lowest-id simple vertex, rescanning from scratch
/// after each deletion, until the graph is empty (success) or no simple
/// vertex remains (failure). The empty graph succeeds vacuously.
EliminationOutcome simple_elimination(const Graph& g);

/// Farber's characterization: g is strongly chordal iff the greedy simple
/// elimination empties it.
bool is_strongly_chordal(const Graph& g);

/// Dirac's characterization: g is chordal iff the greedy simplicial
/// elimination empties it.
bool is_chordal(const Graph& g);

}  // namespace bipchord

#endif
