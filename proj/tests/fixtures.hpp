#ifndef BIPCHORD_TESTS_FIXTURES_HPP
#define BIPCHORD_TESTS_FIXTURES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "bipchord/generate.hpp"
#include "bipchord/graph.hpp"

// Shared graphs for the test suites.
namespace fixtures {

using bipchord::Edge;
using bipchord::Graph;
using bipchord::VertexId;

// 5 vertices with the chordless 4-cycle 0-1-4-2; vertex 3 is adjacent to
// 1, 2 and 4.
inline Graph nonchordal_five() {
    return Graph(5, {{2, 4}, {3, 4}, {2, 3}, {1, 3}, {0, 2}, {0, 1}, {1, 4}});
}

// nonchordal_five with the chord 1-2 added; chordal, and in fact strongly
// chordal (vertex 0 is simple, the rest induce K4).
inline Graph chordal_five() {
    return Graph(5, {{2, 4}, {3, 4}, {2, 3}, {1, 2}, {1, 4}, {1, 3}, {0, 2}, {0, 1}});
}

// K4 on {0,1,2,3} plus a pendant 4 attached to 2. Vertex 3 is simple and
// simplicial; so is 0, which greedy scans find first.
inline Graph k4_plus_pendant() {
    return Graph(5, {{0, 2}, {2, 3}, {0, 3}, {1, 3}, {0, 1}, {1, 2}, {2, 4}});
}

// k4_plus_pendant with two more pendants: 5 on 1 and 6 on 0. Vertex 3 keeps
// a complete neighborhood but its neighbors' closed neighborhoods are no
// longer nested, so it is simplicial without being simple.
inline Graph k4_plus_three_pendants() {
    return Graph(7, {{0, 2}, {2, 3}, {0, 3}, {1, 3}, {0, 1}, {1, 2}, {2, 4}, {0, 6}, {1, 5}});
}

// Triangle 0,1,2 with a private degree-2 neighbor glued to each edge; the
// classic chordal-but-not-strongly-chordal graph.
inline Graph three_sun() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 0}, {5, 2}});
}

inline Graph cycle_as_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

// G(n, num/den) with the same counter-based stream as the bipartite
// generator; edge slot (u, v), u < v, uses counter u * n + v.
inline Graph random_graph(int n, int num, int den, std::uint64_t seed) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            const std::uint64_t counter = static_cast<std::uint64_t>(u) * n + v;
            if (bipchord::gen::rng_at(seed, counter) % den < static_cast<std::uint64_t>(num)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

// Uniform random attachment tree.
inline Graph random_tree(int n, std::uint64_t seed) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 1; v < n; ++v) {
        const VertexId parent =
            static_cast<VertexId>(bipchord::gen::rng_at(seed, static_cast<std::uint64_t>(v)) % v);
        edges.emplace_back(parent, v);
    }
    return Graph(n, edges);
}

}  // namespace fixtures

#endif
