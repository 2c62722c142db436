#ifndef BIPCHORD_GENERATE_HPP
#define BIPCHORD_GENERATE_HPP

#include <cstdint>

#include "bipchord/graph.hpp"

namespace bipchord::gen {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z);

/// Counter-based stream: value at position `counter` of the stream named by
/// `seed`. Stateless, so fixtures are reproducible from (seed, counter)
/// alone: mix64(seed + (counter + 1) * 0x9E3779B97F4A7C15).
std::uint64_t rng_at(std::uint64_t seed, std::uint64_t counter);

/// Even cycle C_length as a bipartite graph: x_i ~ y_i and x_{(i+1) mod n} ~ y_i
/// with n = length / 2. length must be even and >= 4.
BipartiteGraph cycle_graph(int length);

/// K_{x_count, y_count}.
BipartiteGraph complete_bipartite(int x_count, int y_count);

/// The double-square graph: a 6-cycle plus the one chord splitting it into
/// two 4-cycles (parts of size 3, 7 edges).
BipartiteGraph domino();

/// Star K_{1, leaf_count}: one X vertex adjacent to every Y vertex.
BipartiteGraph star(int leaf_count);

/// Each of the x_count * y_count possible edges is included independently
/// iff rng_at(seed, i * y_count + j) % p_den < p_num, i.e. with probability
/// roughly p_num / p_den. Requires 0 <= p_num <= p_den and p_den >= 1.
BipartiteGraph random_bipartite(int x_count, int y_count, int p_num, int p_den,
                                std::uint64_t seed);

}  // namespace bipchord::gen

#endif
