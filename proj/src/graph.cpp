#include "bipchord/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bipchord {

namespace {

std::string pair_text(VertexId a, VertexId b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

Graph::Graph(int vertex_count) : Graph(vertex_count, {}) {}

Graph::Graph(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges)
    : Graph(vertex_count, edges, {}) {}

Graph::Graph(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges,
             std::vector<VertexId> labels) {
    if (vertex_count < 0) {
        throw std::invalid_argument("Graph: negative vertex count");
    }
    adj_.resize(static_cast<std::size_t>(vertex_count));
    if (labels.empty()) {
        labels_.resize(static_cast<std::size_t>(vertex_count));
        std::iota(labels_.begin(), labels_.end(), 0);
    } else {
        if (static_cast<int>(labels.size()) != vertex_count) {
            throw std::invalid_argument("Graph: label vector size does not match vertex count");
        }
        labels_ = std::move(labels);
    }
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
            throw std::invalid_argument("Graph: edge endpoint out of range " + pair_text(u, v));
        }
        if (u == v) {
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        }
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count_ += static_cast<int>(nbrs.size());
    }
    edge_count_ /= 2;
}

void Graph::require_vertex(VertexId v) const {
    if (v < 0 || v >= vertex_count()) {
        throw std::out_of_range("Graph: vertex id " + std::to_string(v) + " out of range");
    }
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    require_vertex(u);
    require_vertex(v);
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    require_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

VertexId Graph::label(VertexId v) const {
    require_vertex(v);
    return labels_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (VertexId u = 0; u < vertex_count(); ++u) {
        for (VertexId v : adj_[static_cast<std::size_t>(u)]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

BipartiteGraph::BipartiteGraph(int x_count, int y_count, std::vector<Edge> edges)
    : x_count_(x_count), y_count_(y_count) {
    if (x_count < 0 || y_count < 0) {
        throw std::invalid_argument("BipartiteGraph: negative part size");
    }
    for (const Edge& e : edges) {
        if (e.x < 0 || e.x >= x_count || e.y < 0 || e.y >= y_count) {
            throw std::invalid_argument("BipartiteGraph: edge out of range " + pair_text(e.x, e.y));
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    x_adj_.resize(static_cast<std::size_t>(x_count));
    y_adj_.resize(static_cast<std::size_t>(y_count));
    for (const Edge& e : edges_) {
        x_adj_[static_cast<std::size_t>(e.x)].push_back(e.y);
        y_adj_[static_cast<std::size_t>(e.y)].push_back(e.x);
    }
    for (auto& nbrs : y_adj_) std::sort(nbrs.begin(), nbrs.end());
    // x_adj_ rows are already sorted because edges_ is in (x, y) order.
}

bool BipartiteGraph::has_edge(VertexId x, VertexId y) const {
    if (x < 0 || x >= x_count_ || y < 0 || y >= y_count_) return false;
    const auto& nbrs = x_adj_[static_cast<std::size_t>(x)];
    return std::binary_search(nbrs.begin(), nbrs.end(), y);
}

const std::vector<VertexId>& BipartiteGraph::x_neighbors(VertexId x) const {
    if (x < 0 || x >= x_count_) {
        throw std::out_of_range("BipartiteGraph: X index " + std::to_string(x) + " out of range");
    }
    return x_adj_[static_cast<std::size_t>(x)];
}

const std::vector<VertexId>& BipartiteGraph::y_neighbors(VertexId y) const {
    if (y < 0 || y >= y_count_) {
        throw std::out_of_range("BipartiteGraph: Y index " + std::to_string(y) + " out of range");
    }
    return y_adj_[static_cast<std::size_t>(y)];
}

BipartiteGraph from_parts(int x_count, int y_count, std::vector<Edge> edges) {
    return BipartiteGraph(x_count, y_count, std::move(edges));
}

BipartiteGraph delete_edge(const BipartiteGraph& b, Edge e) {
    if (!b.has_edge(e.x, e.y)) {
        throw std::invalid_argument("delete_edge: " + pair_text(e.x, e.y) + " is not an edge");
    }
    std::vector<Edge> edges = b.edges();
    edges.erase(std::lower_bound(edges.begin(), edges.end(), e));
    return BipartiteGraph(b.x_count(), b.y_count(), std::move(edges));
}

Graph underlying_graph(const BipartiteGraph& b) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(static_cast<std::size_t>(b.edge_count()));
    for (const Edge& e : b.edges()) {
        edges.emplace_back(e.x, b.x_count() + e.y);
    }
    return Graph(b.vertex_count(), edges);
}

Graph glue_clique(const BipartiteGraph& b, Side side) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Edge& e : b.edges()) {
        edges.emplace_back(e.x, b.x_count() + e.y);
    }
    const int offset = side == Side::X ? 0 : b.x_count();
    const int count = side == Side::X ? b.x_count() : b.y_count();
    for (VertexId u = 0; u < count; ++u) {
        for (VertexId v = u + 1; v < count; ++v) {
            edges.emplace_back(offset + u, offset + v);
        }
    }
    return Graph(b.vertex_count(), edges);
}

Graph delete_vertex(const Graph& g, VertexId v) {
    if (v < 0 || v >= g.vertex_count()) {
        throw std::out_of_range("delete_vertex: vertex id " + std::to_string(v) + " out of range");
    }
    const int n = g.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<VertexId> labels;
    labels.reserve(static_cast<std::size_t>(n - 1));
    auto remap = [v](VertexId u) { return u > v ? u - 1 : u; };
    for (VertexId u = 0; u < n; ++u) {
        if (u == v) continue;
        labels.push_back(g.label(u));
        for (VertexId w : g.neighbors(u)) {
            if (w == v || w <= u) continue;
            edges.emplace_back(remap(u), remap(w));
        }
    }
    return Graph(n - 1, edges, std::move(labels));
}

std::vector<VertexId> closed_neighborhood(const Graph& g, VertexId v) {
    std::vector<VertexId> out = g.neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

TwoColorResult two_color(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<VertexId> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> queue;
    queue.reserve(static_cast<std::size_t>(n));

    auto odd_cycle_through = [&](VertexId u, VertexId w) {
        // u and w got the same color; close the cycle through their lowest
        // common BFS-tree ancestor.
        std::vector<VertexId> up_u{u};
        std::vector<VertexId> up_w{w};
        VertexId a = u;
        VertexId b = w;
        while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
            a = parent[static_cast<std::size_t>(a)];
            up_u.push_back(a);
        }
        while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
            b = parent[static_cast<std::size_t>(b)];
            up_w.push_back(b);
        }
        while (a != b) {
            a = parent[static_cast<std::size_t>(a)];
            up_u.push_back(a);
            b = parent[static_cast<std::size_t>(b)];
            up_w.push_back(b);
        }
        // up_u ends at the meeting vertex; append the w-side path in reverse,
        // excluding the meeting vertex itself.
        std::vector<VertexId> cycle = std::move(up_u);
        for (auto it = up_w.rbegin() + 1; it != up_w.rend(); ++it) {
            cycle.push_back(*it);
        }
        return cycle;
    };

    for (VertexId root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] != -1) continue;
        color[static_cast<std::size_t>(root)] = 0;
        queue.clear();
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            VertexId u = queue[head];
            for (VertexId w : g.neighbors(u)) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = color[static_cast<std::size_t>(u)] ^ 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
                    TwoColorResult res;
                    res.odd_cycle = odd_cycle_through(u, w);
                    return res;
                }
            }
        }
    }

    TwoColoring coloring;
    std::vector<VertexId> index_of(static_cast<std::size_t>(n), -1);
    for (VertexId v = 0; v < n; ++v) {
        if (color[static_cast<std::size_t>(v)] == 0) {
            index_of[static_cast<std::size_t>(v)] = static_cast<VertexId>(coloring.x_vertices.size());
            coloring.x_vertices.push_back(v);
        } else {
            index_of[static_cast<std::size_t>(v)] = static_cast<VertexId>(coloring.y_vertices.size());
            coloring.y_vertices.push_back(v);
        }
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (VertexId u = 0; u < n; ++u) {
        if (color[static_cast<std::size_t>(u)] != 0) continue;
        for (VertexId w : g.neighbors(u)) {
            edges.push_back({index_of[static_cast<std::size_t>(u)], index_of[static_cast<std::size_t>(w)]});
        }
    }
    coloring.graph = from_parts(static_cast<int>(coloring.x_vertices.size()),
                                static_cast<int>(coloring.y_vertices.size()), std::move(edges));
    TwoColorResult res;
    res.coloring = std::move(coloring);
    return res;
}

}  // namespace bipchord
