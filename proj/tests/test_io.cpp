#include "doctest.h"
#include "mtcut/instance_io.hpp"
#include "mtcut/isolation.hpp"

using namespace mtcut;

namespace {

const char* kPathFile =
    "c the four-vertex path with a third terminal on top\n"
    "p mtcut 5 5 3 2\n"
    "t 1\n"
    "t 4\n"
    "t 5\n"
    "e 1 2 1\n"
    "e 2 3 1\n"
    "e 3 4 1\n"
    "e 5 2 1\n"
    "e 5 3 1\n";

}  // namespace

TEST_CASE("parse the path example file") {
    InstanceFile file = parse_instance(kPathFile);
    CHECK(file.graph.vertex_count() == 5);
    CHECK(file.graph.edge_count() == 5);
    CHECK(file.graph.terminal_count() == 3);
    CHECK(file.graph.terminal_at(2) == 5);
    CHECK(file.k == 2);
    CHECK(file.warnings.empty());
    CHECK(file.graph.weight(2, 3) == 1);
}

TEST_CASE("the budget field is optional") {
    InstanceFile file = parse_instance("p mtcut 2 1 2\nt 1\nt 2\ne 1 2 7\n");
    CHECK_FALSE(file.k.has_value());
    CHECK(file.graph.weight(1, 2) == 7);
}

TEST_CASE("duplicate edges are summed with a warning") {
    InstanceFile file = parse_instance("p mtcut 2 2 0\ne 1 2 1\ne 2 1 3\n");
    CHECK(file.graph.weight(1, 2) == 4);
    CHECK(file.graph.edge_count() == 1);
    REQUIRE(file.warnings.size() == 1);
    CHECK(file.warnings[0].find("duplicate") != std::string::npos);
}

TEST_CASE("parser diagnoses bad input with line numbers") {
    CHECK_THROWS_WITH_AS(parse_instance("p mtcut 3 1 0\ne 3 3 1\n"),
                         "line 2: self loop", InputError);
    CHECK_THROWS_WITH_AS(parse_instance("p mtcut 2 1 0\ne 1 5 1\n"),
                         "line 2: vertex id out of range", InputError);
    CHECK_THROWS_WITH_AS(parse_instance("p mtcut 2 1 2\nt 1\nt 1\ne 1 2 1\n"),
                         "line 3: terminal repeated", InputError);
    CHECK_THROWS_AS(parse_instance(""), InputError);
    CHECK_THROWS_AS(parse_instance("e 1 2 1\np mtcut 2 1 0\n"), InputError);
    CHECK_THROWS_AS(parse_instance("p mtcut 2 1 0\np mtcut 2 1 0\ne 1 2 1\n"), InputError);
    CHECK_THROWS_AS(parse_instance("p mtcut 2 2 0\ne 1 2 1\n"), InputError);
    CHECK_THROWS_AS(parse_instance("p mtcut 2 1 1\ne 1 2 1\n"), InputError);
    CHECK_THROWS_AS(parse_instance("p mtcut 2 1 0\ne 1 2 0\n"), InputError);
    CHECK_THROWS_AS(parse_instance("p mtcut 2 1 0\ne 1 2 x\n"), InputError);
    CHECK_THROWS_AS(parse_instance("p mtcut 2 1 0\nq 1\n"), InputError);
    CHECK_THROWS_AS(parse_instance("p mtcut 3 0 4\n"), InputError);
}

TEST_CASE("weights above 2^32 are rejected") {
    CHECK_THROWS_AS(parse_instance("p mtcut 2 1 0\ne 1 2 4294967297\n"), InputError);
    InstanceFile ok = parse_instance("p mtcut 2 1 0\ne 1 2 4294967296\n");
    CHECK(ok.graph.weight(1, 2) == 4294967296ll);
}

TEST_CASE("write then parse is the identity") {
    InstanceFile file = parse_instance(kPathFile);
    std::string text = write_instance(file.graph, file.k);
    InstanceFile again = parse_instance(text);
    CHECK(again.graph.same_structure(file.graph));
    CHECK(again.k == file.k);
    CHECK(write_instance(again.graph, again.k) == text);
}

TEST_CASE("generate is deterministic and respects its contract") {
    InstanceFile a = generate(8, 14, 3, 4, 1);
    InstanceFile b = generate(8, 14, 3, 4, 1);
    CHECK(write_instance(a.graph, a.k) == write_instance(b.graph, b.k));
    CHECK(a.graph.vertex_count() == 8);
    CHECK(a.graph.edge_count() == 14);
    CHECK(a.graph.terminal_count() == 3);
    for (VertexId t = 1; t <= 3; ++t) CHECK_FALSE(a.graph.neighbors(t).empty());
    CHECK(*a.k == (iso_size_sum(a.graph) + 1) / 2);

    InstanceFile c = generate(8, 14, 3, 4, 2);
    CHECK(write_instance(a.graph, a.k) != write_instance(c.graph, c.k));
}

TEST_CASE("generate fills the complete graph when m forces it") {
    InstanceFile k5 = generate(5, 10, 3, 1, 9);
    CHECK(k5.graph.edge_count() == 10);
    for (const auto& [u, v, w] : k5.graph.edges()) {
        (void)u;
        (void)v;
        CHECK(w == 1);
    }
}

TEST_CASE("generate rejects impossible parameter combinations") {
    CHECK_THROWS_AS(generate(5, 11, 3, 4, 1), InputError);
    CHECK_THROWS_AS(generate(5, 4, 6, 4, 1), InputError);
    CHECK_THROWS_AS(generate(5, 4, 3, 0, 1), InputError);
    CHECK_THROWS_AS(generate(5, 0, 3, 4, 1), InputError);
}

TEST_CASE("solution files round trip") {
    SolutionFile sol;
    sol.feasible = true;
    sol.size = 2;
    sol.assignment = {{1, 1}, {2, 3}, {3, 3}, {4, 2}, {5, 3}};
    std::string text = write_solution(sol);
    CHECK(text.substr(0, 9) == "s SIZE 2\n");
    SolutionFile back = parse_solution(text);
    CHECK(back.feasible);
    CHECK(back.size == 2);
    CHECK(back.assignment == sol.assignment);

    SolutionFile no;
    CHECK(write_solution(no) == "s INFEASIBLE\n");
    CHECK_FALSE(parse_solution("s INFEASIBLE\n").feasible);
}

TEST_CASE("solution parser rejects malformed files") {
    CHECK_THROWS_AS(parse_solution(""), InputError);
    CHECK_THROWS_AS(parse_solution("a 1 1\n"), InputError);
    CHECK_THROWS_AS(parse_solution("s SIZE 2\ns SIZE 2\n"), InputError);
    CHECK_THROWS_AS(parse_solution("s SIZE 2\na 1 1\na 1 2\n"), InputError);
    CHECK_THROWS_AS(parse_solution("s MAYBE\n"), InputError);
}
