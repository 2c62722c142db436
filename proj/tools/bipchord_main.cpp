#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "bipchord/elimination.hpp"
#include "bipchord/generate.hpp"
#include "bipchord/graph.hpp"
#include "bipchord/io.hpp"
#include "bipchord/oracle.hpp"
#include "bipchord/recognition.hpp"

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

std::string bool_text(bool v) { return v ? "true" : "false"; }

// Labels of a glued graph are X-first ids of the bipartite graph; report
// them as 1-based part names.
std::string glued_vertex_name(bipchord::VertexId label, int x_count) {
    return label < x_count ? "x" + std::to_string(label + 1)
                           : "y" + std::to_string(label - x_count + 1);
}

json witness_to_json(const bipchord::Witness& w, int x_count) {
    json deleted = json::array();
    for (const bipchord::Edge& e : w.deleted_edges) {
        deleted.push_back({e.x + 1, e.y + 1});
    }
    json vertices = json::array();
    const bipchord::Graph& stuck = w.stuck_subgraph;
    for (bipchord::VertexId v = 0; v < stuck.vertex_count(); ++v) {
        vertices.push_back(glued_vertex_name(stuck.label(v), x_count));
    }
    json edges = json::array();
    for (const auto& [u, v] : stuck.edges()) {
        edges.push_back({glued_vertex_name(stuck.label(u), x_count),
                         glued_vertex_name(stuck.label(v), x_count)});
    }
    return json{{"kind", w.kind == bipchord::Witness::Kind::StuckSubgraph ? "stuck-subgraph"
                                                                          : "deleted-edge-trail"},
                {"deleted_edges", deleted},
                {"stuck_vertices", vertices},
                {"stuck_edges", edges}};
}

void print_witness(const bipchord::Witness& w, int x_count) {
    std::cout << "WITNESS kind "
              << (w.kind == bipchord::Witness::Kind::StuckSubgraph ? "stuck-subgraph"
                                                                   : "deleted-edge-trail")
              << "\n";
    for (const bipchord::Edge& e : w.deleted_edges) {
        std::cout << "WITNESS deleted-edge e " << e.x + 1 << " " << e.y + 1 << "\n";
    }
    const bipchord::Graph& stuck = w.stuck_subgraph;
    std::cout << "WITNESS stuck-vertices";
    for (bipchord::VertexId v = 0; v < stuck.vertex_count(); ++v) {
        std::cout << " " << glued_vertex_name(stuck.label(v), x_count);
    }
    std::cout << "\nWITNESS stuck-edges";
    for (const auto& [u, v] : stuck.edges()) {
        std::cout << " " << glued_vertex_name(stuck.label(u), x_count) << "-"
                  << glued_vertex_name(stuck.label(v), x_count);
    }
    std::cout << "\n";
}

struct CheckArgs {
    int k = 0;
    bool oracle = false;
    bool witness = false;
    bool as_json = false;
    int threads = 1;
    std::string format = "bip";
    std::string file;
};

int run_check(const CheckArgs& args) {
    const auto format =
        args.format == "bip" ? bipchord::io::Format::Bip : bipchord::io::Format::EdgeList;
    const bipchord::BipartiteGraph b = bipchord::io::parse_file(args.file, format);
    const bipchord::CheckReport rep = bipchord::check(b, args.k, {args.threads});

    bool oracle_verdict = false;
    if (args.oracle) {
        oracle_verdict = bipchord::oracle::definition_k_chordal(b, args.k);
    }

    if (args.as_json) {
        json record{{"property", rep.property},
                    {"k", rep.k},
                    {"verdict", rep.verdict},
                    {"s", rep.vertex_count},
                    {"t", rep.edge_count},
                    {"subchecks", rep.subchecks},
                    {"elapsed_ns", rep.elapsed.count()},
                    {"witness", rep.witness ? witness_to_json(*rep.witness, b.x_count())
                                            : json(nullptr)}};
        if (args.oracle) record["oracle_verdict"] = oracle_verdict;
        std::cout << record.dump() << "\n";
    } else {
        std::cout << "RESULT " << rep.property << " k=" << rep.k << " " << bool_text(rep.verdict)
                  << "\n";
        std::cout << "STATS s=" << rep.vertex_count << " t=" << rep.edge_count
                  << " subchecks=" << rep.subchecks << " elapsed_ns=" << rep.elapsed.count()
                  << "\n";
        if (args.witness && rep.witness) {
            print_witness(*rep.witness, b.x_count());
        }
        if (args.oracle) {
            std::cout << "ORACLE definition-k-chordal k=" << args.k << " "
                      << bool_text(oracle_verdict) << "\n";
            std::cout << "AGREE " << bool_text(oracle_verdict == rep.verdict) << "\n";
        }
    }
    if (args.oracle && oracle_verdict != rep.verdict) {
        std::cerr << "error: recognizer and oracle disagree\n";
        return kExitError;
    }
    return rep.verdict ? kExitTrue : kExitFalse;
}

struct GenArgs {
    std::string family;
    std::vector<int> params;
    std::uint64_t seed = 0;
    std::string output;
};

bipchord::BipartiteGraph build_family(const std::string& family, const std::vector<int>& params,
                                      std::uint64_t seed) {
    auto need = [&](std::size_t count, const char* usage) {
        if (params.size() != count) {
            throw std::invalid_argument("family '" + family + "' expects " + usage);
        }
    };
    if (family == "cycle") {
        need(1, "1 parameter: <length>");
        return bipchord::gen::cycle_graph(params[0]);
    }
    if (family == "complete-bipartite") {
        need(2, "2 parameters: <x_count> <y_count>");
        return bipchord::gen::complete_bipartite(params[0], params[1]);
    }
    if (family == "domino") {
        need(0, "no parameters");
        return bipchord::gen::domino();
    }
    if (family == "star") {
        need(1, "1 parameter: <leaf_count>");
        return bipchord::gen::star(params[0]);
    }
    if (family == "random") {
        need(4, "4 parameters: <x_count> <y_count> <p_num> <p_den>");
        return bipchord::gen::random_bipartite(params[0], params[1], params[2], params[3], seed);
    }
    throw std::invalid_argument("unknown family '" + family + "'");
}

int run_gen(const GenArgs& args) {
    const bipchord::BipartiteGraph b = build_family(args.family, args.params, args.seed);
    if (args.output == "-") {
        bipchord::io::write_bip(b, std::cout);
    } else {
        std::ofstream out(args.output);
        if (!out) {
            throw std::runtime_error("cannot write '" + args.output + "'");
        }
        bipchord::io::write_bip(b, out);
    }
    return kExitTrue;
}

struct BenchArgs {
    std::string family;
    std::string range;
    int k = 0;
    bool as_json = false;
    std::uint64_t seed = 0;
    std::string density = "1/2";
};

std::pair<int, int> parse_range(const std::string& text) {
    const auto sep = text.find("..");
    if (sep == std::string::npos) {
        throw std::invalid_argument("range must look like <a>..<b>, got '" + text + "'");
    }
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo_text = text.substr(0, sep);
    const std::string hi_text = text.substr(sep + 2);
    const int lo = std::stoi(lo_text, &used_lo);
    const int hi = std::stoi(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size() || lo < 0 || hi < 0) {
        throw std::invalid_argument("range must be two non-negative integers, got '" + text + "'");
    }
    return {lo, hi};
}

std::pair<int, int> parse_density(const std::string& text) {
    const auto sep = text.find('/');
    if (sep == std::string::npos) {
        throw std::invalid_argument("density must look like <num>/<den>, got '" + text + "'");
    }
    const int num = std::stoi(text.substr(0, sep));
    const int den = std::stoi(text.substr(sep + 1));
    if (den < 1 || num < 0 || num > den) {
        throw std::invalid_argument("density must satisfy 0 <= num <= den, got '" + text + "'");
    }
    return {num, den};
}

int run_bench(const BenchArgs& args) {
    const auto [lo, hi] = parse_range(args.range);
    const auto [p_num, p_den] = parse_density(args.density);
    if (!args.as_json) {
        std::cout << "family,s,t,k,verdict,subchecks,elapsed_ns\n";
    }
    for (int n = lo; n <= hi; ++n) {
        bipchord::BipartiteGraph b;
        if (args.family == "cycle") {
            if (n < 4 || n % 2 != 0) continue;
            b = bipchord::gen::cycle_graph(n);
        } else if (args.family == "complete-bipartite") {
            b = bipchord::gen::complete_bipartite(n, n);
        } else if (args.family == "star") {
            b = bipchord::gen::star(n);
        } else if (args.family == "domino") {
            b = bipchord::gen::domino();
        } else if (args.family == "random") {
            b = bipchord::gen::random_bipartite(n, n, p_num, p_den,
                                                args.seed + static_cast<std::uint64_t>(n));
        } else {
            throw std::invalid_argument("unknown family '" + args.family + "'");
        }
        const bipchord::CheckReport rep = bipchord::check(b, args.k);
        if (args.as_json) {
            std::cout << json{{"family", args.family}, {"s", rep.vertex_count},
                              {"t", rep.edge_count},  {"k", rep.k},
                              {"verdict", rep.verdict}, {"subchecks", rep.subchecks},
                              {"elapsed_ns", rep.elapsed.count()}}
                             .dump()
                      << "\n";
        } else {
            std::cout << args.family << "," << rep.vertex_count << "," << rep.edge_count << ","
                      << rep.k << "," << bool_text(rep.verdict) << "," << rep.subchecks << ","
                      << rep.elapsed.count() << "\n";
        }
    }
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chordal bipartite / k-chordal bipartite recognition"};
    app.require_subcommand(1);

    CheckArgs check_args;
    CLI::App* check_cmd =
        app.add_subcommand("check", "decide whether a bipartite graph is k-chordal bipartite");
    check_cmd->add_option("--k", check_args.k, "number of chords required per long cycle")
        ->required()
        ->check(CLI::NonNegativeNumber);
    check_cmd->add_flag("--oracle", check_args.oracle,
                        "also run the brute-force definition check and compare");
    check_cmd->add_flag("--witness", check_args.witness, "print the failure witness");
    check_cmd->add_flag("--json", check_args.as_json, "emit a single-line JSON report");
    check_cmd->add_option("--threads", check_args.threads, "parallel subchecks for k=2")
        ->check(CLI::PositiveNumber);
    check_cmd->add_option("--format", check_args.format, "input format")
        ->check(CLI::IsMember({"bip", "edgelist"}));
    check_cmd->add_option("file", check_args.file, "graph file")->required();

    GenArgs gen_args;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a named bipartite graph family");
    gen_cmd->add_option("family", gen_args.family,
                        "cycle | complete-bipartite | domino | star | random")
        ->required();
    gen_cmd->add_option("params", gen_args.params, "family parameters");
    gen_cmd->add_option("--seed", gen_args.seed, "seed for the random family");
    gen_cmd->add_option("-o,--output", gen_args.output, "output path ('-' for stdout)")
        ->required();

    BenchArgs bench_args;
    CLI::App* bench_cmd = app.add_subcommand("bench", "time checks over a family size range");
    bench_cmd->add_option("--family", bench_args.family, "graph family")->required();
    bench_cmd->add_option("--n", bench_args.range, "size range <a>..<b>")->required();
    bench_cmd->add_option("--k", bench_args.k, "chord count to check")
        ->required()
        ->check(CLI::NonNegativeNumber);
    bench_cmd->add_flag("--json", bench_args.as_json, "emit JSON lines instead of CSV");
    bench_cmd->add_option("--seed", bench_args.seed, "seed for the random family");
    bench_cmd->add_option("--density", bench_args.density, "random family density <num>/<den>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitTrue : kExitError;
    }

    try {
        if (*check_cmd) return run_check(check_args);
        if (*gen_cmd) return run_gen(gen_args);
        if (*bench_cmd) return run_bench(bench_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
