#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "fatgraph/disk_graphs.hpp"
#include "test_graphs.hpp"

using namespace fatgraph;
using testing::disk_graph;

namespace {

const char *wheel = "vertex 0 + 3 : 0.0 1.0 2.0\n"
                    "vertex 1 + 3 : 0.1 5.1 3.0\n"
                    "vertex 2 + 3 : 1.1 3.1 4.0\n"
                    "vertex 3 + 3 : 2.1 4.1 5.0\n"
                    "mark 1 1\n";

} // namespace

TEST_CASE("a single edge has two boundary leaves") {
    EmbeddedGraph d = disk_graph("vertex 0 + 1 : 0.0\nvertex 1 + 1 : 0.1\nmark 0 0\n");
    CHECK(classify_vertex(d, 0) == VertexKind::boundary);
    DiskStats s = disk_stats(d);
    CHECK(s.a1 == 2);
    CHECK(s.sigma() == 6);
    CHECK(s.tau() == 2);
}

TEST_CASE("the middle of a path is a cut vertex and is not counted") {
    EmbeddedGraph d = disk_graph("vertex 0 + 1 : 0.0\nvertex 1 + 2 : 0.1 1.0\nvertex 2 + 1 : 1.1\nmark 0 0\n");
    CHECK(classify_vertex(d, 1) == VertexKind::cut);
    DiskStats s = disk_stats(d);
    CHECK(s.a1 == 2);
    CHECK(s.a2 == 0);
    CHECK(s.sigma() == 6);
    CHECK(s.tau() == 2);
}

TEST_CASE("the hub of a wheel is interior") {
    EmbeddedGraph d = disk_graph(wheel);
    CHECK(classify_vertex(d, 0) == VertexKind::interior);
    for (int v = 1; v < 4; ++v)
        CHECK(classify_vertex(d, v) == VertexKind::boundary);
    DiskStats s = disk_stats(d);
    CHECK(s.a3 == 3);
    CHECK(s.tau() == 0);
}

TEST_CASE("a trivial loop counts four") {
    EmbeddedGraph d = disk_graph("vertex 0 + 3 : 0.0 1.0 1.1\nvertex 1 + 1 : 0.1\nmark 1 0\n");
    DiskStats s = disk_stats(d);
    CHECK(s.l == 1);
    CHECK(s.a1 == 1);
    CHECK(s.sigma() == 7);
    CHECK(s.tau() == 2);
}

TEST_CASE("a bigon is one adjacent parallel pair") {
    EmbeddedGraph d = disk_graph("vertex 0 + 2 : 0.0 1.0\nvertex 1 + 2 : 1.1 0.1\nmark 0 0\n");
    DiskStats s = disk_stats(d);
    CHECK(s.a2 == 2);
    CHECK(s.p == 1);
    CHECK(s.sigma() == 6);
    CHECK(s.tau() == 3);
}

TEST_CASE("one-vertex disk graphs are rejected") {
    EmbeddedGraph d = disk_graph("vertex 0 + 0 :\nmark 0 -1\n");
    CHECK_THROWS_AS(disk_stats(d), SingleVertex);
}

TEST_CASE("vertex kinds do not depend on vertex numbering") {
    EmbeddedGraph d = disk_graph(wheel);
    std::vector<int> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        EmbeddedGraph h = testing::relabel(d, perm);
        for (int v = 0; v < 4; ++v)
            CHECK(classify_vertex(h, perm[v]) == classify_vertex(d, v));
        DiskStats a = disk_stats(d), b = disk_stats(h);
        CHECK(a.sigma() == b.sigma());
        CHECK(a.tau() == b.tau());
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("small disk oracle runs clean") {
    DiskOracleReport r = disk_oracle(3, 4);
    CHECK(r.graphs > 0);
    CHECK(r.counterexamples.empty());
    CHECK(r.tau_checked > 0);
}

TEST_CASE("disk oracle caps") {
    DiskOracleReport r = disk_oracle(1, 0);
    CHECK(r.graphs == 0);
    CHECK(r.counterexamples.empty());
    CHECK_THROWS_AS(disk_oracle(9, 9), CapsTooLarge);
}

TEST_CASE("reduced map bounds hold on small maps") {
    BoundsOracleReport a = annulus_bounds_oracle(2);
    CHECK(a.maps > 0);
    CHECK(a.counterexamples.empty());
    BoundsOracleReport t = torus_bounds_oracle(1);
    CHECK(t.maps > 0);
    CHECK(t.counterexamples.empty());
}

TEST_CASE("subgraph drops edges and keeps the marks") {
    EmbeddedGraph d = disk_graph(wheel);
    // opening one rim edge exposes the hub
    std::vector<char> keep = {1, 1, 1, 0, 1, 1};
    EmbeddedGraph open = subgraph(d, keep);
    CHECK(open.num_edges() == 5);
    CHECK(open.extras.marks.size() == 1);
    Topology t = analyze(open);
    CHECK(t.genus == 0);
    CHECK(t.F == 3);
    CHECK(classify_vertex(open, t, 0) == VertexKind::boundary);
    DiskStats s = disk_stats(open);
    CHECK(s.a2 == 2);
    CHECK(s.a3 == 2);
}
