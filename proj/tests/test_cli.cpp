#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "bipchord/generate.hpp"
#include "bipchord/io.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "bipchord_cli_tests";
    fs::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args) {
    const fs::path out_path = scratch_dir() / "stdout.txt";
    const std::string command =
        std::string(BIPCHORD_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>/dev/null";
    const int status = std::system(command.c_str());
    RunResult res;
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    res.output = buffer.str();
    return res;
}

std::string write_graph(const std::string& name, const bipchord::BipartiteGraph& b) {
    const fs::path path = scratch_dir() / name;
    std::ofstream out(path);
    bipchord::io::write_bip(b, out);
    return path.string();
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("check exits 1 with a RESULT line on failing graphs") {
    const std::string path = write_graph("domino.bip", bipchord::gen::domino());
    const RunResult res = run_cli("check --k 2 " + path);
    CHECK(res.exit_code == 1);
    CHECK(first_line(res.output) == "RESULT k-chordal-bipartite k=2 false");
}

TEST_CASE("check exits 0 on vacuous and holding properties") {
    const std::string path = write_graph("domino0.bip", bipchord::gen::domino());
    const RunResult vacuous = run_cli("check --k 0 " + path);
    CHECK(vacuous.exit_code == 0);
    CHECK(first_line(vacuous.output) == "RESULT k-chordal-bipartite k=0 true");

    const std::string c4 = write_graph("c4.bip", bipchord::gen::cycle_graph(4));
    const RunResult agree = run_cli("check --k 2 --oracle " + c4);
    CHECK(agree.exit_code == 0);
    CHECK(agree.output.find("ORACLE definition-k-chordal k=2 true") != std::string::npos);
    CHECK(agree.output.find("AGREE true") != std::string::npos);
}

TEST_CASE("check --json emits the fixed report fields") {
    const std::string path = write_graph("dom_json.bip", bipchord::gen::domino());
    const RunResult res = run_cli("check --k 2 --json " + path);
    CHECK(res.exit_code == 1);
    const nlohmann::json rec = nlohmann::json::parse(res.output);
    CHECK(rec["property"] == "k-chordal-bipartite");
    CHECK(rec["k"] == 2);
    CHECK(rec["verdict"] == false);
    CHECK(rec["s"] == 6);
    CHECK(rec["t"] == 7);
    CHECK(rec["subchecks"].is_number_integer());
    CHECK(rec["elapsed_ns"].is_number_integer());
    CHECK(rec["witness"]["kind"] == "deleted-edge-trail");
    CHECK(rec["witness"]["deleted_edges"] == nlohmann::json::array({{2, 2}}));
}

TEST_CASE("check --witness prints the failing trail") {
    const std::string path = write_graph("dom_w.bip", bipchord::gen::domino());
    const RunResult res = run_cli("check --k 2 --witness " + path);
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("WITNESS kind deleted-edge-trail") != std::string::npos);
    CHECK(res.output.find("WITNESS deleted-edge e 2 2") != std::string::npos);
    CHECK(res.output.find("WITNESS stuck-vertices") != std::string::npos);
}

TEST_CASE("check exits 2 on operational errors") {
    CHECK(run_cli("check --k 2 /nonexistent/file.bip").exit_code == 2);
    CHECK(run_cli("check " + write_graph("c4b.bip", bipchord::gen::cycle_graph(4))).exit_code ==
          2);  // missing --k

    const fs::path bad = scratch_dir() / "bad.bip";
    std::ofstream(bad) << "b 2 2 1\nnot an edge\n";
    CHECK(run_cli("check --k 1 " + bad.string()).exit_code == 2);

    const fs::path odd = scratch_dir() / "odd.edges";
    std::ofstream(odd) << "1 2\n2 3\n3 1\n";
    CHECK(run_cli("check --k 1 --format edgelist " + odd.string()).exit_code == 2);
}

TEST_CASE("check accepts edgelist input") {
    const fs::path path = scratch_dir() / "square.edges";
    std::ofstream(path) << "1 2\n2 3\n3 4\n4 1\n";
    const RunResult res = run_cli("check --k 1 --format edgelist " + path.string());
    CHECK(res.exit_code == 0);
    CHECK(first_line(res.output) == "RESULT chordal-bipartite k=1 true");
}

TEST_CASE("check --threads matches the sequential output") {
    const std::string path = write_graph("k33.bip", bipchord::gen::complete_bipartite(3, 3));
    const RunResult seq = run_cli("check --k 2 " + path);
    const RunResult par = run_cli("check --k 2 --threads 4 " + path);
    CHECK(seq.exit_code == par.exit_code);
    CHECK(first_line(seq.output) == first_line(par.output));
}

TEST_CASE("gen writes files that check and parse accept") {
    const fs::path out = scratch_dir() / "gen_c6.bip";
    CHECK(run_cli("gen cycle 6 -o " + out.string()).exit_code == 0);
    CHECK(bipchord::io::parse_file(out.string(), bipchord::io::Format::Bip) ==
          bipchord::gen::cycle_graph(6));

    const RunResult res = run_cli("check --k 1 " + out.string());
    CHECK(res.exit_code == 1);
    CHECK(first_line(res.output) == "RESULT chordal-bipartite k=1 false");
}

TEST_CASE("gen rejects invalid family parameters") {
    const std::string out = (scratch_dir() / "never.bip").string();
    CHECK(run_cli("gen cycle 5 -o " + out).exit_code == 2);
    CHECK(run_cli("gen cycle -o " + out).exit_code == 2);
    CHECK(run_cli("gen nosuch 3 -o " + out).exit_code == 2);
    CHECK(run_cli("gen random 2 2 3 2 -o " + out).exit_code == 2);
}

TEST_CASE("gen random is reproducible from the seed") {
    const fs::path a = scratch_dir() / "ra.bip";
    const fs::path b = scratch_dir() / "rb.bip";
    REQUIRE(run_cli("gen random 4 4 1 2 --seed 9 -o " + a.string()).exit_code == 0);
    REQUIRE(run_cli("gen random 4 4 1 2 --seed 9 -o " + b.string()).exit_code == 0);
    CHECK(bipchord::io::parse_file(a.string(), bipchord::io::Format::Bip) ==
          bipchord::io::parse_file(b.string(), bipchord::io::Format::Bip));
    CHECK(bipchord::io::parse_file(a.string(), bipchord::io::Format::Bip) ==
          bipchord::gen::random_bipartite(4, 4, 1, 2, 9));
}

TEST_CASE("bench emits one CSV row per instance") {
    const RunResult res = run_cli("bench --family complete-bipartite --n 4..8 --k 2");
    CHECK(res.exit_code == 0);
    std::istringstream lines(res.output);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "family,s,t,k,verdict,subchecks,elapsed_ns");
    int rows = 0;
    int n = 4;
    while (std::getline(lines, line)) {
        ++rows;
        std::ostringstream prefix;
        prefix << "complete-bipartite," << 2 * n << "," << n * n << ",2,true,";
        CHECK(line.rfind(prefix.str(), 0) == 0);
        ++n;
    }
    CHECK(rows == 5);
}

TEST_CASE("bench handles empty ranges and bad ranges") {
    const RunResult empty = run_cli("bench --family cycle --n 8..4 --k 1");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output == "family,s,t,k,verdict,subchecks,elapsed_ns\n");

    CHECK(run_cli("bench --family cycle --n nope --k 1").exit_code == 2);
    CHECK(run_cli("bench --family nosuch --n 4..6 --k 1").exit_code == 2);
}

TEST_CASE("bench on cycles reports false verdicts for length >= 6") {
    const RunResult res = run_cli("bench --family cycle --n 6..12 --k 1");
    CHECK(res.exit_code == 0);
    std::istringstream lines(res.output);
    std::string line;
    std::getline(lines, line);  // header
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.find(",false,") != std::string::npos);
    }
    CHECK(rows == 4);  // 6, 8, 10, 12; odd lengths are skipped
}
