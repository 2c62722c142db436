#include "bipchord/generate.hpp"

#include <stdexcept>
#include <string>

namespace bipchord::gen {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rng_at(std::uint64_t seed, std::uint64_t counter) {
    return mix64(seed + (counter + 1) * 0x9E3779B97F4A7C15ULL);
}

BipartiteGraph cycle_graph(int length) {
    if (length < 4 || length % 2 != 0) {
        throw std::invalid_argument("cycle_graph: length must be even and >= 4, got " +
                                    std::to_string(length));
    }
    const int half = length / 2;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(length));
    for (VertexId i = 0; i < half; ++i) {
        edges.push_back({i, i});
        edges.push_back({(i + 1) % half, i});
    }
    return from_parts(half, half, std::move(edges));
}

BipartiteGraph complete_bipartite(int x_count, int y_count) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(x_count) * static_cast<std::size_t>(y_count));
    for (VertexId i = 0; i < x_count; ++i) {
        for (VertexId j = 0; j < y_count; ++j) {
            edges.push_back({i, j});
        }
    }
    return from_parts(x_count, y_count, std::move(edges));
}

BipartiteGraph domino() {
    return from_parts(3, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}});
}

BipartiteGraph star(int leaf_count) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(leaf_count));
    for (VertexId j = 0; j < leaf_count; ++j) {
        edges.push_back({0, j});
    }
    return from_parts(1, leaf_count, std::move(edges));
}

BipartiteGraph random_bipartite(int x_count, int y_count, int p_num, int p_den,
                                std::uint64_t seed) {
    if (p_den < 1 || p_num < 0 || p_num > p_den) {
        throw std::invalid_argument("random_bipartite: density must satisfy 0 <= num <= den");
    }
    std::vector<Edge> edges;
    for (VertexId i = 0; i < x_count; ++i) {
        for (VertexId j = 0; j < y_count; ++j) {
            const std::uint64_t counter =
                static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(y_count) +
                static_cast<std::uint64_t>(j);
            if (rng_at(seed, counter) % static_cast<std::uint64_t>(p_den) <
                static_cast<std::uint64_t>(p_num)) {
                edges.push_back({i, j});
            }
        }
    }
    return from_parts(x_count, y_count, std::move(edges));
}

}  // namespace bipchord::gen
