#include "doctest.h"
#include "qsing/pencil.hpp"
#include "qsing/quotient.hpp"
#include "qsing/serialize.hpp"

using namespace qsing;
using nlohmann::json;

TEST_CASE("integers and rationals survive the JSON round trip") {
    CHECK(int_to_json(Int(42)) == json(42));
    CHECK(int_to_json(Int(-7)) == json(-7));
    Int big = Int("123456789012345678901234567890");
    json jb = int_to_json(big);
    CHECK(jb.is_string());
    CHECK(int_from_json(jb, "value") == big);
    CHECK(int_from_json(json(17), "value") == 17);
    CHECK_THROWS_AS(int_from_json(json(1.5), "value"), std::invalid_argument);
    CHECK_THROWS_AS(int_from_json(json::parse("\"xyz\""), "value"), std::invalid_argument);

    CHECK(rat_to_json(Rat(3)) == json(3));
    json half = rat_to_json(Rat(1) / 2);
    CHECK(half.is_string());
    CHECK(rat_from_json(half, "value") == Rat(1) / 2);
    CHECK(rat_from_json(json("-5/3"), "value") == Rat(-5) / 3);
    CHECK_THROWS_AS(rat_from_json(json(0.25), "value"), std::invalid_argument);
}

TEST_CASE("graph round trip") {
    DualGraph g;
    g.add_vertex("A", -2, true);
    g.add_vertex("B", -1);
    g.add_vertex("C", 0, true);
    g.add_edge("A", "B");
    g.add_edge("B", "C");
    json j = graph_to_json(g);
    DualGraph back = graph_from_json(j);
    CHECK(back == g);

    // Unknown keys are ignored so richer documents still load as graphs.
    j["extra"] = "ignored";
    j["vertices"][0]["note"] = 17;
    CHECK(graph_from_json(j) == g);
}

TEST_CASE("graph JSON rejects malformed documents") {
    json good = graph_to_json(DualGraph{});
    CHECK(graph_from_json(good).size() == 0);

    json dup = json::parse(R"({"vertices": [{"name": "A", "weight": -1},
                                            {"name": "A", "weight": -2}], "edges": []})");
    CHECK_THROWS_AS(graph_from_json(dup), std::invalid_argument);

    json loop = json::parse(R"({"vertices": [{"name": "A", "weight": -1}],
                                "edges": [["A", "A"]]})");
    CHECK_THROWS_AS(graph_from_json(loop), std::invalid_argument);

    json ghost = json::parse(R"({"vertices": [{"name": "A", "weight": -1}],
                                 "edges": [["A", "B"]]})");
    CHECK_THROWS_AS(graph_from_json(ghost), std::invalid_argument);

    json repeated = json::parse(R"({"vertices": [{"name": "A", "weight": -1},
                                                 {"name": "B", "weight": -1}],
                                    "edges": [["A", "B"], ["B", "A"]]})");
    CHECK_THROWS_AS(graph_from_json(repeated), std::invalid_argument);
}

TEST_CASE("dot output") {
    DualGraph g;
    g.add_vertex("A", -2);
    g.add_vertex("B", -1);
    g.add_edge("A", "B");
    std::string dot = graph_to_dot(g);
    CHECK(dot.find("graph G {") != std::string::npos);
    CHECK(dot.find("A (-2)") != std::string::npos);
    CHECK(dot.find("\"A\" -- \"B\"") != std::string::npos);
}

TEST_CASE("divisor round trip") {
    Divisor d;
    d.set("A", Rat(3));
    d.set("B", Rat(-1) / 2);
    json j = divisor_to_json(d);
    CHECK(divisor_from_json(j) == d);
}

TEST_CASE("fork specs round trip") {
    ForkSpec f{-2, {ForkArm{{2, 3}, AttachEnd::back}, ForkArm{{2}, AttachEnd::front},
                    ForkArm{{2, 2}, AttachEnd::front}}};
    json j = fork_to_json(f);
    ForkSpec back = fork_from_json(j);
    CHECK(back.central_weight == f.central_weight);
    for (int i = 0; i < 3; ++i) {
        CHECK(back.arms[static_cast<std::size_t>(i)].chain ==
              f.arms[static_cast<std::size_t>(i)].chain);
        CHECK(back.arms[static_cast<std::size_t>(i)].attach ==
              f.arms[static_cast<std::size_t>(i)].attach);
    }
    CHECK_THROWS_AS(fork_from_json(json::parse(R"({"central_weight": -2, "arms": []})")),
                    std::invalid_argument);
    // Entry validation is the realizer's job, not the decoder's.
    ForkSpec shallow = fork_from_json(json::parse(
        R"({"central_weight": -2, "arms": [{"chain": [1], "attach": "front"},
            {"chain": [2], "attach": "front"},
            {"chain": [2], "attach": "front"}]})"));
    CHECK(shallow.arms[0].chain == HJChain{1});
    CHECK_THROWS_AS(realize_fork(shallow), std::invalid_argument);
}

TEST_CASE("completion JSON carries the fibration data and loads as a graph") {
    StandardCompletion sc = build_standard_completion(CyclicQuotientType(5, 2));
    json j = completion_to_json(sc);
    CHECK(j["kind"] == "cyclic");
    CHECK(j["sections"].size() == 2);
    CHECK(j["fibers"].size() == 2);
    CHECK(graph_from_json(j) == sc.graph);
    CHECK(completion_kind_name(CompletionKind::cyclic_minimal) == "cyclic_minimal");
    CHECK(completion_kind_name(CompletionKind::noncyclic) == "noncyclic");
}

TEST_CASE("pencil JSON and dot") {
    PencilResolution pr = resolve_pencil(2, 2);
    json j = pencil_to_json(pr);
    CHECK(int_from_json(j["n"], "n") == 2);
    CHECK(int_from_json(j["a"], "a") == 2);
    CHECK(j["section"] == "F");
    CHECK(j["steps"].size() == pr.steps.size());
    CHECK(graph_from_json(j) == pr.graph);

    std::string dot = pencil_to_dot(pr);
    CHECK(dot.find("rankdir=LR") != std::string::npos);
    CHECK(dot.find("rank=same") != std::string::npos);
    CHECK(dot.find("\"F\"") != std::string::npos);
}

TEST_CASE("json text parsing reports line and column") {
    CHECK(parse_json_text("{\"a\": 1}")["a"] == 1);
    bool raised = false;
    try {
        parse_json_text("{\n  \"a\": ]\n}");
    } catch (const std::invalid_argument& e) {
        raised = true;
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK(raised);
}
