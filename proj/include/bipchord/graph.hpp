#ifndef BIPCHORD_GRAPH_HPP
#define BIPCHORD_GRAPH_HPP

#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace bipchord {

/// Dense vertex index; ids within one graph value are 0..vertex_count()-1.
using VertexId = int;

/// Cross edge of a bipartite graph: x indexes the X part, y the Y part.
struct Edge {
    VertexId x = 0;
    VertexId y = 0;
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Side { X, Y };

/// Undirected simple graph. Values are immutable once constructed;
/// mutation-shaped operations (delete_vertex) return new values.
///
/// Each vertex carries a label: the id it had in the graph this value was
/// derived from (identity for freshly built graphs). Deletion re-densifies
/// ids, so labels are what let elimination orderings and stuck subgraphs be
/// reported in the caller's numbering.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    Graph(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges);
    Graph(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges,
          std::vector<VertexId> labels);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    bool has_edge(VertexId u, VertexId v) const;
    /// Open neighborhood, sorted ascending.
    const std::vector<VertexId>& neighbors(VertexId v) const;
    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

    VertexId label(VertexId v) const;
    const std::vector<VertexId>& labels() const { return labels_; }

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    /// Structural equality; labels are provenance metadata and do not count.
    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    void require_vertex(VertexId v) const;

    std::vector<std::vector<VertexId>> adj_;
    std::vector<VertexId> labels_;
    int edge_count_ = 0;
};

/// Bipartite graph with disjoint parts X and Y and cross edges only.
/// X vertices are indexed 0..x_count-1, Y vertices 0..y_count-1; the two
/// index spaces are independent. Edges are stored deduplicated in
/// lexicographic (x, y) order, which fixes every iteration order downstream.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(int x_count, int y_count, std::vector<Edge> edges);

    int x_count() const { return x_count_; }
    int y_count() const { return y_count_; }
    int vertex_count() const { return x_count_ + y_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(VertexId x, VertexId y) const;
    /// Sorted Y-indices adjacent to x.
    const std::vector<VertexId>& x_neighbors(VertexId x) const;
    /// Sorted X-indices adjacent to y.
    const std::vector<VertexId>& y_neighbors(VertexId y) const;

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
        return a.x_count_ == b.x_count_ && a.y_count_ == b.y_count_ && a.edges_ == b.edges_;
    }

private:
    int x_count_ = 0;
    int y_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> x_adj_;
    std::vector<std::vector<VertexId>> y_adj_;
};

/// Validating constructor for the (X, Y, E) triple. Edges are deduplicated;
/// an out-of-range endpoint raises std::invalid_argument naming the pair.
BipartiteGraph from_parts(int x_count, int y_count, std::vector<Edge> edges);

/// Copy of b without edge e; both vertex parts are retained unchanged.
/// Raises std::invalid_argument if e is not an edge of b.
BipartiteGraph delete_edge(const BipartiteGraph& b, Edge e);

/// Underlying plain graph of b. X vertices come first (ids 0..x_count-1),
/// then Y vertices (ids x_count..x_count+y_count-1).
Graph underlying_graph(const BipartiteGraph& b);

/// Underlying graph of b with an edge added between every pair of vertices
/// of the chosen part. Same X-first numbering as underlying_graph.
Graph glue_clique(const BipartiteGraph& b, Side side);

/// Induced subgraph with v removed. Remaining vertices keep their relative
/// order and are re-densified; the result's labels record the mapping back
/// to g's ids.
Graph delete_vertex(const Graph& g, VertexId v);

/// N(v) together with v itself, sorted ascending.
std::vector<VertexId> closed_neighborhood(const Graph& g, VertexId v);

struct TwoColoring {
    BipartiteGraph graph;
    std::vector<VertexId> x_vertices;  ///< g-ids of the X part, ascending
    std::vector<VertexId> y_vertices;  ///< g-ids of the Y part, ascending
};

struct TwoColorResult {
    std::optional<TwoColoring> coloring;
    /// Odd closed walk with distinct vertices, present iff g is not bipartite.
    std::vector<VertexId> odd_cycle;

    bool ok() const { return coloring.has_value(); }
};

/// Deterministic 2-coloring: BFS from the lowest-id unvisited vertex of each
/// component, roots colored X, layers alternating. Within each part,
/// vertices are numbered in ascending g-id order.
TwoColorResult two_color(const Graph& g);

}  // namespace bipchord

#endif
