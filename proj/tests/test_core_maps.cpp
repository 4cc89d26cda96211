#include "doctest.h"

#include "fatgraph/core_maps.hpp"
#include "test_graphs.hpp"

using namespace fatgraph;

TEST_CASE("graph text round-trips") {
    auto g = testing::two_loops_annulus();
    auto back = read_graph(write_graph(g));
    CHECK(back == g);
}

TEST_CASE("reader rejects missing end") {
    CHECK_THROWS_AS(read_graph("graph\nsurface torus\nlabels 0\nvertex 0 + 0 :\n"), MalformedGraph);
}

TEST_CASE("well-formedness catches duplicate slots") {
    auto g = testing::two_loops_annulus();
    g.rotation[0][1] = g.rotation[0][0];
    CHECK_THROWS_AS(check_well_formed(g), MalformedGraph);
}

TEST_CASE("faces satisfy the Euler relation per component") {
    for (auto g : {testing::two_loops_annulus(), testing::torus_figure_eight(), testing::theta_graph()}) {
        auto t = analyze(g);
        int chi = t.V - t.E + t.F;
        CHECK(chi == 2 * t.num_components - 2 * t.genus);
        int total = 0;
        for (auto &w : t.walks)
            total += static_cast<int>(w.size());
        CHECK(total == 2 * t.E);
    }
}

TEST_CASE("interleaved loops on one vertex give genus one") {
    auto t = analyze(testing::torus_figure_eight());
    CHECK(t.genus == 1);
    CHECK(t.F == 1);
}

TEST_CASE("a loop with adjacent ends around an empty disk is trivial") {
    auto g = testing::trivial_loop_graph();
    CHECK(is_trivial_loop(g, 0));
    CHECK_FALSE(is_trivial_loop(g, 1));
}

TEST_CASE("trivial loop query rejects non-loops") {
    auto g = testing::theta_graph();
    CHECK_THROWS_AS(is_trivial_loop(g, 0), NotALoop);
}

TEST_CASE("parallel classes group the bigon fans") {
    auto g = testing::two_loops_annulus();
    auto classes = parallel_classes(g);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].size() == 2);
}

TEST_CASE("essential loops on the annulus separate the marks") {
    auto g = testing::two_loops_annulus();
    auto t = analyze(g);
    CHECK(is_essential_cycle(g, t, {0}));
    CHECK(is_essential_edge_set(g, t, {0, 1}));
    g.extras.marks = {g.extras.marks[0], g.extras.marks[0]};
    auto t2 = analyze(g);
    CHECK_FALSE(is_essential_cycle(g, t2, {0}));
}

TEST_CASE("both loops of the figure eight are essential on the torus") {
    auto g = testing::torus_figure_eight();
    auto t = analyze(g);
    CHECK(is_essential_cycle(g, t, {0}));
    CHECK(is_essential_cycle(g, t, {2}));
}

TEST_CASE("cycle_from_edges orders a theta cycle") {
    auto g = testing::theta_graph();
    auto c = cycle_from_edges(g, {0, 1});
    REQUIRE(c.size() == 2);
    CHECK(edge_of(c[0]) != edge_of(c[1]));
    CHECK(cycle_from_edges(g, {0, 1, 2}).empty());
}

TEST_CASE("canonical code ignores vertex relabeling") {
    auto g = testing::theta_graph();
    auto h = testing::relabel(g, {1, 0});
    CHECK(canonicalize(g, false) == canonicalize(h, false));
}

TEST_CASE("reduced bounds report") {
    auto r = reduce(testing::two_loops_annulus());
    CHECK(r.graph.num_edges() == 1);
    CHECK(r.multiplicity[0] == 2);
}
