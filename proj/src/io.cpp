#include "bipchord/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace bipchord::io {

namespace {

bool skippable(const std::string& line) {
    return line.empty() || line[0] == '#' ||
           line.find_first_not_of(" \t\r") == std::string::npos;
}

void require_no_trailing(std::istringstream& tokens, int lineno) {
    std::string extra;
    if (tokens >> extra) {
        throw ParseError("unexpected trailing token '" + extra + "'", lineno);
    }
}

}  // namespace

BipartiteGraph parse_bip(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int x_count = 0;
    int y_count = 0;
    int declared = 0;
    int records = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        std::istringstream tokens(line);
        std::string tag;
        tokens >> tag;
        if (!have_header) {
            if (tag != "b" || !(tokens >> x_count >> y_count >> declared)) {
                throw ParseError("expected header 'b <x_count> <y_count> <edge_count>'", lineno);
            }
            require_no_trailing(tokens, lineno);
            if (x_count < 0 || y_count < 0 || declared < 0) {
                throw ParseError("negative count in header", lineno);
            }
            have_header = true;
            edges.reserve(static_cast<std::size_t>(declared));
            continue;
        }
        int i = 0;
        int j = 0;
        if (tag != "e" || !(tokens >> i >> j)) {
            throw ParseError("expected edge record 'e <i> <j>'", lineno);
        }
        require_no_trailing(tokens, lineno);
        if (records == declared) {
            throw ParseError("more edge records than the header declares", lineno);
        }
        if (i < 1 || i > x_count || j < 1 || j > y_count) {
            throw ParseError("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                 ") out of declared range",
                             lineno);
        }
        edges.push_back({i - 1, j - 1});
        ++records;
    }
    if (!have_header) {
        throw ParseError("missing 'b' header", lineno);
    }
    if (records != declared) {
        throw ParseError("header declares " + std::to_string(declared) + " edges but file has " +
                             std::to_string(records),
                         lineno);
    }
    return from_parts(x_count, y_count, std::move(edges));
}

BipartiteGraph parse_edgelist(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::map<long long, VertexId> dense_of;
    std::vector<long long> label_of;
    std::vector<std::pair<VertexId, VertexId>> edges;
    auto intern = [&](long long label) {
        auto [it, inserted] = dense_of.try_emplace(label, static_cast<VertexId>(label_of.size()));
        if (inserted) label_of.push_back(label);
        return it->second;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        std::istringstream tokens(line);
        long long u = 0;
        long long v = 0;
        if (!(tokens >> u >> v)) {
            throw ParseError("expected edge line '<u> <v>'", lineno);
        }
        require_no_trailing(tokens, lineno);
        if (u <= 0 || v <= 0) {
            throw ParseError("vertex labels must be positive integers", lineno);
        }
        if (u == v) {
            throw ParseError("self-loop at vertex " + std::to_string(u) +
                                 " cannot appear in a bipartite graph",
                             lineno);
        }
        edges.emplace_back(intern(u), intern(v));
    }
    Graph g(static_cast<int>(label_of.size()), edges);
    TwoColorResult colored = two_color(g);
    if (!colored.ok()) {
        std::string cycle_text;
        for (VertexId v : colored.odd_cycle) {
            if (!cycle_text.empty()) cycle_text += ' ';
            cycle_text += std::to_string(label_of[static_cast<std::size_t>(v)]);
        }
        throw ParseError("graph is not bipartite: odd cycle [" + cycle_text + "]");
    }
    return std::move(colored.coloring->graph);
}

BipartiteGraph parse_file(const std::string& path, Format format) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    return format == Format::Bip ? parse_bip(in) : parse_edgelist(in);
}

std::string render_bip(const BipartiteGraph& b) {
    std::string out = "b " + std::to_string(b.x_count()) + " " + std::to_string(b.y_count()) +
                      " " + std::to_string(b.edge_count()) + "\n";
    for (const Edge& e : b.edges()) {
        out += "e " + std::to_string(e.x + 1) + " " + std::to_string(e.y + 1) + "\n";
    }
    return out;
}

void write_bip(const BipartiteGraph& b, std::ostream& out) { out << render_bip(b); }

}  // namespace bipchord::io
