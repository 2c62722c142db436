#include "bipchord/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace bipchord::oracle {

namespace {

void check_guard(int vertex_count, int limit, bool allow_large, const char* what) {
    if (!allow_large && vertex_count > limit) {
        throw SizeGuardError(std::string(what) + ": " + std::to_string(vertex_count) +
                             " vertices exceeds the guard of " + std::to_string(limit));
    }
}

struct CycleDfs {
    const Graph& g;
    int min_len;
    std::vector<Cycle>& out;
    std::vector<char> in_path;
    std::vector<VertexId> path;

    CycleDfs(const Graph& graph, int min, std::vector<Cycle>& sink)
        : g(graph), min_len(min), out(sink), in_path(static_cast<std::size_t>(graph.vertex_count()), 0) {}

    void extend(VertexId v) {
        const VertexId root = path.front();
        for (VertexId w : g.neighbors(v)) {
            if (w <= root || in_path[static_cast<std::size_t>(w)]) continue;
            path.push_back(w);
            in_path[static_cast<std::size_t>(w)] = 1;
            // path[1] < w keeps one of the two traversal directions, so each
            // cycle is emitted exactly once and already in canonical form.
            if (path.size() >= 3 && path[1] < w && g.has_edge(w, root) &&
                static_cast<int>(path.size()) >= min_len) {
                out.push_back(Cycle{path});
            }
            extend(w);
            in_path[static_cast<std::size_t>(w)] = 0;
            path.pop_back();
        }
    }

    void run() {
        for (VertexId root = 0; root < g.vertex_count(); ++root) {
            path.assign(1, root);
            in_path[static_cast<std::size_t>(root)] = 1;
            extend(root);
            in_path[static_cast<std::size_t>(root)] = 0;
        }
    }
};

// Positions of each cycle vertex, or throws if c is not a cycle of g.
std::vector<int> cycle_positions(const Graph& g, const Cycle& c) {
    const int len = c.length();
    if (len < 3) {
        throw std::invalid_argument("chords_of_cycle: a cycle needs at least 3 vertices");
    }
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int i = 0; i < len; ++i) {
        VertexId v = c.vertices[static_cast<std::size_t>(i)];
        if (v < 0 || v >= g.vertex_count() || pos[static_cast<std::size_t>(v)] != -1) {
            throw std::invalid_argument("chords_of_cycle: vertices are not distinct valid ids");
        }
        pos[static_cast<std::size_t>(v)] = i;
    }
    for (int i = 0; i < len; ++i) {
        VertexId u = c.vertices[static_cast<std::size_t>(i)];
        VertexId w = c.vertices[static_cast<std::size_t>((i + 1) % len)];
        if (!g.has_edge(u, w)) {
            throw std::invalid_argument("chords_of_cycle: consecutive pair is not an edge");
        }
    }
    return pos;
}

bool strong_elimination_core(const std::vector<std::vector<char>>& closed,
                             const std::vector<VertexId>& ordering) {
    const int n = static_cast<int>(ordering.size());
    for (int i = 0; i < n; ++i) {
        const auto& row_i = closed[static_cast<std::size_t>(ordering[static_cast<std::size_t>(i)])];
        for (int k = 0; k < n; ++k) {
            VertexId vk = ordering[static_cast<std::size_t>(k)];
            if (!row_i[static_cast<std::size_t>(vk)]) continue;
            const auto& row_k = closed[static_cast<std::size_t>(vk)];
            for (int l = k + 1; l < n; ++l) {
                VertexId vl = ordering[static_cast<std::size_t>(l)];
                if (!row_i[static_cast<std::size_t>(vl)]) continue;
                for (int j = i + 1; j < n; ++j) {
                    VertexId vj = ordering[static_cast<std::size_t>(j)];
                    if (!row_k[static_cast<std::size_t>(vj)]) continue;
                    if (!closed[static_cast<std::size_t>(vj)][static_cast<std::size_t>(vl)]) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

std::vector<std::vector<char>> closed_neighborhood_matrix(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<char>> closed(static_cast<std::size_t>(n),
                                          std::vector<char>(static_cast<std::size_t>(n), 0));
    for (VertexId v = 0; v < n; ++v) {
        closed[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 1;
        for (VertexId w : g.neighbors(v)) {
            closed[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = 1;
        }
    }
    return closed;
}

// Domino adjacency: X part {x1,x2,x3} by rows, Y part {y1,y2,y3} by columns.
constexpr std::array<std::array<bool, 3>, 3> kDomino = {{
    {{true, true, false}},
    {{true, true, true}},
    {{false, true, true}},
}};

bool induces_domino(const std::array<std::array<bool, 3>, 3>& m) {
    std::array<int, 3> px{0, 1, 2};
    do {
        std::array<int, 3> py{0, 1, 2};
        do {
            bool direct = true;
            bool swapped = true;
            for (int a = 0; a < 3 && (direct || swapped); ++a) {
                for (int b = 0; b < 3 && (direct || swapped); ++b) {
                    const bool has = m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                    if (has != kDomino[static_cast<std::size_t>(px[static_cast<std::size_t>(a)])]
                                      [static_cast<std::size_t>(py[static_cast<std::size_t>(b)])]) {
                        direct = false;
                    }
                    if (has != kDomino[static_cast<std::size_t>(py[static_cast<std::size_t>(b)])]
                                      [static_cast<std::size_t>(px[static_cast<std::size_t>(a)])]) {
                        swapped = false;
                    }
                }
            }
            if (direct || swapped) return true;
        } while (std::next_permutation(py.begin(), py.end()));
    } while (std::next_permutation(px.begin(), px.end()));
    return false;
}

template <typename Visit>
void for_each_triple(int n, Visit visit) {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) visit(a, b, c);
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, int min_len, bool allow_large) {
    check_guard(g.vertex_count(), kCycleGuard, allow_large, "enumerate_cycles");
    std::vector<Cycle> out;
    CycleDfs dfs(g, min_len, out);
    dfs.run();
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    return out;
}

std::vector<Cycle> enumerate_cycles(const BipartiteGraph& b, int min_len, bool allow_large) {
    check_guard(b.vertex_count(), kCycleGuard, allow_large, "enumerate_cycles");
    return enumerate_cycles(underlying_graph(b), min_len, allow_large);
}

std::vector<Chord> chords_of_cycle(const Graph& g, const Cycle& c) {
    const std::vector<int> pos = cycle_positions(g, c);
    const int len = c.length();
    std::vector<Chord> out;
    for (int i = 0; i < len; ++i) {
        for (int j = i + 1; j < len; ++j) {
            const bool consecutive = (j - i == 1) || (i == 0 && j == len - 1);
            if (consecutive) continue;
            VertexId u = c.vertices[static_cast<std::size_t>(i)];
            VertexId v = c.vertices[static_cast<std::size_t>(j)];
            if (g.has_edge(u, v)) {
                out.push_back(Chord{std::min(u, v), std::max(u, v)});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Chord> chords_of_cycle(const BipartiteGraph& b, const Cycle& c) {
    return chords_of_cycle(underlying_graph(b), c);
}

bool definition_k_chordal(const BipartiteGraph& b, int k, bool allow_large) {
    const Graph g = underlying_graph(b);
    check_guard(g.vertex_count(), kCycleGuard, allow_large, "definition_k_chordal");
    for (const Cycle& c : enumerate_cycles(g, 6, allow_large)) {
        if (static_cast<int>(chords_of_cycle(g, c).size()) < k) return false;
    }
    return true;
}

bool is_trivial(const BipartiteGraph& b, bool allow_large) {
    check_guard(b.vertex_count(), kCycleGuard, allow_large, "is_trivial");
    return enumerate_cycles(b, 6, allow_large).empty();
}

bool contains_induced_double_square(const BipartiteGraph& b, bool allow_large) {
    check_guard(b.vertex_count(), kCycleGuard, allow_large, "contains_induced_double_square");
    if (b.x_count() < 3 || b.y_count() < 3) return false;
    bool found = false;
    for_each_triple(b.x_count(), [&](int xa, int xb, int xc) {
        if (found) return;
        const std::array<int, 3> xs{xa, xb, xc};
        for_each_triple(b.y_count(), [&](int ya, int yb, int yc) {
            if (found) return;
            const std::array<int, 3> ys{ya, yb, yc};
            std::array<std::array<bool, 3>, 3> m{};
            int edges = 0;
            for (int a = 0; a < 3; ++a) {
                for (int c = 0; c < 3; ++c) {
                    m[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] =
                        b.has_edge(xs[static_cast<std::size_t>(a)], ys[static_cast<std::size_t>(c)]);
                    edges += m[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] ? 1 : 0;
                }
            }
            if (edges == 7 && induces_domino(m)) found = true;
        });
    });
    return found;
}

bool verify_strong_elimination_ordering(const Graph& g, const std::vector<VertexId>& ordering) {
    const int n = g.vertex_count();
    if (static_cast<int>(ordering.size()) != n) {
        throw std::invalid_argument("verify_strong_elimination_ordering: not a permutation");
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (VertexId v : ordering) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("verify_strong_elimination_ordering: not a permutation");
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return strong_elimination_core(closed_neighborhood_matrix(g), ordering);
}

bool exists_strong_elimination_ordering(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kPermutationGuard) {
        throw SizeGuardError("exists_strong_elimination_ordering: " + std::to_string(n) +
                             " vertices exceeds the guard of " + std::to_string(kPermutationGuard));
    }
    if (n == 0) return true;
    const auto closed = closed_neighborhood_matrix(g);
    std::vector<VertexId> ordering(static_cast<std::size_t>(n));
    std::iota(ordering.begin(), ordering.end(), 0);
    do {
        if (strong_elimination_core(closed, ordering)) return true;
    } while (std::next_permutation(ordering.begin(), ordering.end()));
    return false;
}

bool is_chordal_bruteforce(const Graph& g, bool allow_large) {
    check_guard(g.vertex_count(), kCycleGuard, allow_large, "is_chordal_bruteforce");
    for (const Cycle& c : enumerate_cycles(g, 4, allow_large)) {
        if (chords_of_cycle(g, c).empty()) return false;
    }
    return true;
}

bool is_strongly_chordal_bruteforce(const Graph& g, bool allow_large) {
    check_guard(g.vertex_count(), kCycleGuard, allow_large, "is_strongly_chordal_bruteforce");
    if (!is_chordal_bruteforce(g, allow_large)) return false;
    for (const Cycle& c : enumerate_cycles(g, 6, allow_large)) {
        if (c.length() % 2 != 0) continue;
        std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
        for (int i = 0; i < c.length(); ++i) {
            pos[static_cast<std::size_t>(c.vertices[static_cast<std::size_t>(i)])] = i;
        }
        bool has_strong = false;
        for (const Chord& ch : chords_of_cycle(g, c)) {
            const int d = std::abs(pos[static_cast<std::size_t>(ch.u)] - pos[static_cast<std::size_t>(ch.v)]);
            if (d % 2 == 1) {
                has_strong = true;
                break;
            }
        }
        if (!has_strong) return false;
    }
    return true;
}

}  // namespace bipchord::oracle
