#ifndef BIPCHORD_ORACLE_HPP
#define BIPCHORD_ORACLE_HPP

#include <stdexcept>
#include <vector>

#include "bipchord/graph.hpp"

// Brute-force ground truth. Everything here evaluates the defining
// quantifiers directly (enumerate all cycles, try all permutations) and is
// deliberately independent of the elimination-based recognizers, so the two
// can be checked against each other. Exponential cost is fine at desk scale;
// size guards keep accidental large inputs from hanging.

namespace bipchord::oracle {

class SizeGuardError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Largest vertex count accepted by the cycle-based oracles without an
/// explicit override.
inline constexpr int kCycleGuard = 16;
/// Largest vertex count accepted by the permutation search.
inline constexpr int kPermutationGuard = 8;

/// Closed walk with pairwise distinct vertices; the last vertex connects
/// back to the first. Canonical form: starts at the minimum id, and the
/// second vertex is the smaller of the first's two cycle neighbors.
struct Cycle {
    std::vector<VertexId> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Graph edge joining two non-consecutive vertices of some cycle, u < v.
struct Chord {
    VertexId u = 0;
    VertexId v = 0;
    friend constexpr auto operator<=>(const Chord&, const Chord&) = default;
};

/// All distinct cycles of length >= min_len, in canonical form, sorted by
/// (length, vertex sequence). Guarded at kCycleGuard vertices.
std::vector<Cycle> enumerate_cycles(const Graph& g, int min_len, bool allow_large = false);
/// Same, on the underlying graph of b (X-first vertex numbering).
std::vector<Cycle> enumerate_cycles(const BipartiteGraph& b, int min_len, bool allow_large = false);

/// All edges of g joining non-consecutive vertices of c, sorted. Raises
/// std::invalid_argument if c is not a cycle of g.
std::vector<Chord> chords_of_cycle(const Graph& g, const Cycle& c);
std::vector<Chord> chords_of_cycle(const BipartiteGraph& b, const Cycle& c);

/// Definition check: every cycle of length >= 6 has at least k chords.
bool definition_k_chordal(const BipartiteGraph& b, int k, bool allow_large = false);

/// True iff b has no cycle of length >= 6, so every chord condition holds
/// vacuously.
bool is_trivial(const BipartiteGraph& b, bool allow_large = false);

/// True iff some six vertices of b induce the double-square (domino) graph:
/// a 6-cycle plus exactly one chord splitting it into two 4-cycles.
bool contains_induced_double_square(const BipartiteGraph& b, bool allow_large = false);

/// Checks the quadruple condition: for positions i < j and k < l, if
/// v_k, v_l lie in N[v_i] and v_j lies in N[v_k], then v_l must lie in
/// N[v_j]. The ordering must be a permutation of g's vertices.
bool verify_strong_elimination_ordering(const Graph& g, const std::vector<VertexId>& ordering);

/// True iff some permutation of g's vertices verifies. Factorial search,
/// guarded at kPermutationGuard vertices.
bool exists_strong_elimination_ordering(const Graph& g);

/// Definition check: every cycle of length >= 4 has a chord.
bool is_chordal_bruteforce(const Graph& g, bool allow_large = false);

/// Definition check: chordal, and every even cycle of length >= 6 has a
/// strong chord (endpoints at odd distance along the cycle; on an even
/// cycle the two arc lengths have equal parity, so either arc works).
bool is_strongly_chordal_bruteforce(const Graph& g, bool allow_large = false);

}  // namespace bipchord::oracle

#endif
