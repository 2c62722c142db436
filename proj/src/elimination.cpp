#include "bipchord/elimination.hpp"

#include <algorithm>

namespace bipchord {

namespace {

template <typename Predicate>
EliminationOutcome eliminate_by(const Graph& g, Predicate eligible) {
    EliminationOutcome out;
    out.ordering.reserve(static_cast<std::size_t>(g.vertex_count()));
    Graph h = g;
    while (h.vertex_count() > 0) {
        std::optional<VertexId> pick;
        for (VertexId v = 0; v < h.vertex_count(); ++v) {
            if (eligible(h, v)) {
                pick = v;
                break;
            }
        }
        if (!pick) {
            out.success = false;
            out.stuck_subgraph = std::move(h);
            return out;
        }
        out.ordering.push_back(h.label(*pick));
        h = delete_vertex(h, *pick);
    }
    out.success = true;
    return out;
}

}  // namespace

bool is_simplicial(const Graph& g, VertexId v) {
    const auto& nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            if (!g.has_edge(nbrs[i], nbrs[j])) return false;
        }
    }
    return true;
}

bool is_simple(const Graph& g, VertexId v) {
    const auto& nbrs = g.neighbors(v);
    if (nbrs.size() <= 1) return true;
    std::vector<std::vector<VertexId>> closed;
    closed.reserve(nbrs.size());
    for (VertexId u : nbrs) {
        closed.push_back(closed_neighborhood(g, u));
    }
    std::sort(closed.begin(), closed.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (std::size_t i = 0; i + 1 < closed.size(); ++i) {
        if (!std::includes(closed[i + 1].begin(), closed[i + 1].end(), closed[i].begin(),
                           closed[i].end())) {
            return false;
        }
    }
    return true;
}

std::optional<VertexId> find_simple_vertex(const Graph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (is_simple(g, v)) return v;
    }
    return std::nullopt;
}

EliminationOutcome simple_elimination(const Graph& g) {
    return eliminate_by(g, [](const Graph& h, VertexId v) { return is_simple(h, v); });
}

bool is_strongly_chordal(const Graph& g) { return simple_elimination(g).success; }

bool is_chordal(const Graph& g) {
    return eliminate_by(g, [](const Graph& h, VertexId v) { return is_simplicial(h, v); }).success;
}

}  // namespace bipchord
