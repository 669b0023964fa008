#include <random>

#include "doctest.h"
#include "mtcut/mincut.hpp"

using namespace mtcut;

namespace {

WeightedGraph unit_path4() {
    WeightedGraph g;
    for (VertexId v = 1; v <= 4; ++v) g.add_vertex(v);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 1);
    g.add_edge(3, 4, 1);
    return g;
}

WeightedGraph diamond() {
    // two parallel length-2 paths from 1 to 4
    WeightedGraph g;
    for (VertexId v = 1; v <= 4; ++v) g.add_vertex(v);
    g.add_edge(1, 2, 1);
    g.add_edge(1, 3, 1);
    g.add_edge(2, 4, 1);
    g.add_edge(3, 4, 1);
    return g;
}

WeightedGraph random_graph(std::mt19937_64& rng, int n, double density, Weight wmax) {
    WeightedGraph g;
    for (VertexId v = 1; v <= n; ++v) g.add_vertex(v);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<Weight> w(1, wmax);
    for (VertexId u = 1; u <= n; ++u)
        for (VertexId v = u + 1; v <= n; ++v)
            if (coin(rng) < density) g.add_edge(u, v, w(rng));
    return g;
}

}  // namespace

TEST_CASE("max_flow on one edge equals its weight") {
    WeightedGraph g;
    g.add_vertex(1);
    g.add_vertex(2);
    g.add_edge(1, 2, 3);
    CHECK(max_flow(g, {1}, {2}) == 3);
}

TEST_CASE("max_flow across a path is its bottleneck") {
    WeightedGraph g = unit_path4();
    CHECK(max_flow(g, {1}, {4}) == 1);
    g.remove_edge(2, 3);
    g.add_edge(2, 3, 5);
    CHECK(max_flow(g, {1}, {4}) == 1);
    CHECK(max_flow(g, {2}, {3}) == 5);
}

TEST_CASE("max_flow with grouped sources") {
    WeightedGraph g = diamond();
    CHECK(max_flow(g, {1}, {4}) == 2);
    CHECK(max_flow(g, {2, 3}, {4}) == 2);
    CHECK(max_flow(g, {1, 2}, {4}) == 2);
}

TEST_CASE("max_flow of a disconnected pair is zero") {
    WeightedGraph g;
    g.add_vertex(1);
    g.add_vertex(2);
    CHECK(max_flow(g, {1}, {2}) == 0);
    Cut c = max_vol_min_cut(g, {1}, {2});
    CHECK(c.size == 0);
    CHECK(c.side == std::set<VertexId>{1});
}

TEST_CASE("source and sink validation") {
    WeightedGraph g = unit_path4();
    CHECK_THROWS_AS(max_flow(g, {}, {4}), InputError);
    CHECK_THROWS_AS(max_flow(g, {1}, {}), InputError);
    CHECK_THROWS_AS(max_flow(g, {1, 4}, {4}), InputError);
    CHECK_THROWS_AS(max_flow(g, {1}, {9}), InputError);
}

TEST_CASE("max_vol_min_cut picks the largest minimum side") {
    WeightedGraph g = unit_path4();
    Cut c = max_vol_min_cut(g, {1}, {4});
    CHECK(c.size == 1);
    CHECK(c.side == std::set<VertexId>{1, 2, 3});

    Cut d = max_vol_min_cut(diamond(), {1}, {4});
    CHECK(d.size == 2);
    CHECK(d.side == std::set<VertexId>{1, 2, 3});

    Cut r = max_vol_min_cut(diamond(), {4}, {1});
    CHECK(r.side == std::set<VertexId>{2, 3, 4});
}

TEST_CASE("enumerate_min_cuts lists every minimum side") {
    auto cuts = enumerate_min_cuts(diamond(), {1}, {4});
    REQUIRE(cuts.size() == 4);
    for (const auto& c : cuts) CHECK(c.size == 2);
    CHECK(cuts[0].side == std::set<VertexId>{1});
    CHECK(cuts[2].side == std::set<VertexId>{1, 2, 3});
    CHECK(cuts[3].side == std::set<VertexId>{1, 3});
}

TEST_CASE("enumerate_min_cuts refuses large graphs") {
    WeightedGraph g;
    for (VertexId v = 1; v <= 21; ++v) g.add_vertex(v);
    for (VertexId v = 2; v <= 21; ++v) g.add_edge(1, v, 1);
    CHECK_THROWS_AS(enumerate_min_cuts(g, {1}, {21}), GuardError);
}

TEST_CASE("every enumerated minimum side sits inside the max-vol side") {
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 40) {
        WeightedGraph g = random_graph(rng, 4 + static_cast<int>(rng() % 5), 0.5, 3);
        if (!g.has_vertex(1) || !g.has_vertex(2)) continue;
        ++done;
        Cut best = max_vol_min_cut(g, {1}, {2});
        auto all = enumerate_min_cuts(g, {1}, {2});
        REQUIRE_FALSE(all.empty());
        bool found = false;
        for (const auto& c : all) {
            CHECK(c.size == best.size);
            CHECK(std::includes(best.side.begin(), best.side.end(), c.side.begin(),
                                c.side.end()));
            found = found || c.side == best.side;
        }
        CHECK(found);
    }
}

TEST_CASE("flow value matches the reported cut size on random graphs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        WeightedGraph g = random_graph(rng, 6, 0.6, 4);
        Cut c = max_vol_min_cut(g, {1, 2}, {5, 6});
        CHECK(c.size == max_flow(g, {1, 2}, {5, 6}));
        CHECK(c.size == cut_size(g, c.side));
    }
}
