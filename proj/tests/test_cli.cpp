#include "cli.hpp"
#include "doctest.h"
#include "qsing/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = qsing::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("qsing_cli_test_" + std::to_string(++counter) + ".json");
        std::ofstream f(path_);
        f << content;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string str() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

} // namespace

TEST_CASE("hj subcommand") {
    RunResult r = run_cli({"hj", "6", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "2 2 2 2 2\n");

    RunResult j = run_cli({"hj", "7", "3", "--format", "json"});
    CHECK(j.code == 0);
    auto doc = qsing::parse_json_text(j.out);
    CHECK(doc["n"] == 7);
    CHECK(doc["chain"] == nlohmann::json::array({3, 2, 2}));

    CHECK(run_cli({"hj", "6", "5", "--format", "dot"}).code == 2);
    CHECK(run_cli({"hj", "6", "4"}).code == 2);
    CHECK(run_cli({"hj", "6"}).code == 2);
    CHECK(run_cli({"hj", "abc", "5"}).code == 2);
}

TEST_CASE("resolve subcommand") {
    RunResult r = run_cli({"resolve", "7", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("E1  weight -3") != std::string::npos);
    CHECK(r.out.find("E1 -- E2") != std::string::npos);

    RunResult d = run_cli({"resolve", "7", "3", "--format", "dot"});
    CHECK(d.code == 0);
    CHECK(d.out.find("graph G {") != std::string::npos);
}

TEST_CASE("fork subcommand distinguishes verdicts from bad input") {
    RunResult good = run_cli({"fork", std::string(QSING_DATA_DIR) + "/forks/e8.json"});
    CHECK(good.code == 0);
    CHECK(good.out.find("platonic: yes") != std::string::npos);
    CHECK(good.out.find("arm determinants: 2 3 5") != std::string::npos);

    TempFile bad(R"({"central_weight": -2, "arms": [
        {"chain": [3], "attach": "front"},
        {"chain": [3], "attach": "front"},
        {"chain": [3], "attach": "front"}]})");
    RunResult nonplat = run_cli({"fork", bad.str()});
    CHECK(nonplat.code == 1);
    CHECK(nonplat.out.find("platonic: no") != std::string::npos);

    TempFile malformed("{nope");
    RunResult mal = run_cli({"fork", malformed.str()});
    CHECK(mal.code == 2);
    CHECK(mal.err.find("malformed JSON") != std::string::npos);

    CHECK(run_cli({"fork", "/nonexistent/file.json"}).code == 2);
}

TEST_CASE("fundcycle subcommand") {
    qsing::DualGraph g;
    g.add_vertex("A", -2);
    g.add_vertex("B", -2);
    g.add_edge("A", "B");
    TempFile file(qsing::graph_to_json(g).dump());
    RunResult r = run_cli({"fundcycle", file.str()});
    CHECK(r.code == 0);
    CHECK(r.out == "A: 1\nB: 1\n");

    qsing::DualGraph zero;
    zero.add_vertex("F", 0);
    TempFile bad(qsing::graph_to_json(zero).dump());
    RunResult b = run_cli({"fundcycle", bad.str()});
    CHECK(b.code == 1);
    CHECK(b.err.find("negative definite") != std::string::npos);

    CHECK(run_cli({"fundcycle", file.str(), "--format", "dot"}).code == 2);
}

TEST_CASE("complete-fiber subcommand") {
    RunResult r = run_cli({"complete-fiber", "2", "3", "--attach", "front"});
    CHECK(r.code == 0);
    CHECK(r.out.find("F  weight -1  multiplicity 5") != std::string::npos);
    CHECK(r.out.find("R1  weight -3  multiplicity 2") != std::string::npos);

    RunResult empty = run_cli({"complete-fiber"});
    CHECK(empty.code == 0);
    CHECK(empty.out.find("F  weight 0  multiplicity 1") != std::string::npos);

    CHECK(run_cli({"complete-fiber", "1"}).code == 2);
    CHECK(run_cli({"complete-fiber", "2", "--attach", "sideways"}).code == 2);
}

TEST_CASE("completion subcommand") {
    RunResult r = run_cli({"completion", "5", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("kind: cyclic") != std::string::npos);
    CHECK(r.out.find("log canonical verified: yes") != std::string::npos);
    CHECK(r.out.find("freeness scalar: -2/5") != std::string::npos);

    RunResult j = run_cli({"completion", "6", "5", "--format", "json"});
    CHECK(j.code == 0);
    auto doc = qsing::parse_json_text(j.out);
    CHECK(doc["kind"] == "cyclic");
    CHECK(doc["log_canonical"]["verified"] == true);
    CHECK(doc["freeness"]["scalar"] == "-2/3");

    RunResult fork = run_cli({"completion", "--fork",
                              std::string(QSING_DATA_DIR) + "/forks/d4.json"});
    CHECK(fork.code == 0);
    CHECK(fork.out.find("kind: noncyclic") != std::string::npos);

    TempFile heavy(R"({"central_weight": -2, "arms": [
        {"chain": [2], "attach": "front"},
        {"chain": [2, 2], "attach": "front"},
        {"chain": [2, 2, 2, 2, 2, 2], "attach": "front"}]})");
    CHECK(run_cli({"completion", "--fork", heavy.str()}).code == 2);

    CHECK(run_cli({"completion", "6", "4"}).code == 2);
    CHECK(run_cli({"completion"}).code == 2);
    CHECK(run_cli({"completion", "6", "5", "--fork", heavy.str()}).code == 2);
}

TEST_CASE("pencil subcommand") {
    RunResult r = run_cli({"pencil", "2", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("special member") != std::string::npos);

    RunResult c = run_cli({"pencil", "2", "2", "--contract", "--format", "json"});
    CHECK(c.code == 0);
    auto doc = qsing::parse_json_text(c.out);
    CHECK(doc["contraction"]["schedule"].size() == 6);

    RunResult d = run_cli({"pencil", "2", "1", "--format", "dot"});
    CHECK(d.code == 0);
    CHECK(d.out.find("rankdir=LR") != std::string::npos);

    CHECK(run_cli({"pencil", "0", "1"}).code == 2);
    CHECK(run_cli({"pencil", "2"}).code == 2);
}

TEST_CASE("keller subcommand") {
    RunResult good = run_cli({"keller", "x + y^3", "y", "--action", "2,1"});
    CHECK(good.code == 0);
    CHECK(good.out.find("certified: yes (automorphism_by_theorem)") != std::string::npos);
    CHECK(good.out.find("boundary map") != std::string::npos);

    RunResult bad = run_cli({"keller", "x^2", "y", "--action", "2,1"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("certified: no (not_keller)") != std::string::npos);

    RunResult odd = run_cli({"keller", "x", "y", "--action", "3,1"});
    CHECK(odd.code == 1);
    CHECK(odd.out.find("group_order_odd") != std::string::npos);

    RunResult syntax = run_cli({"keller", "x +", "y", "--action", "2,1"});
    CHECK(syntax.code == 2);
    CHECK(syntax.err.find("f:") != std::string::npos);

    CHECK(run_cli({"keller", "x", "y", "--action", "4,2"}).code == 2);
    CHECK(run_cli({"keller", "x", "y", "--action", "nonsense"}).code == 2);
    CHECK(run_cli({"keller", "x", "y"}).code == 2);

    RunResult j = run_cli({"keller", "x + y^3", "y", "--action", "2,1", "--format", "json"});
    CHECK(j.code == 0);
    auto doc = qsing::parse_json_text(j.out);
    CHECK(doc["certified"] == true);
    CHECK(doc["detail"] == "automorphism_by_theorem");
}

TEST_CASE("top level dispatch") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"frobnicate"}).code == 2);
    RunResult help = run_cli({"--help"});
    CHECK(help.out.find("qsing") != std::string::npos);
}
