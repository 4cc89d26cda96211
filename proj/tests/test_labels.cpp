#include "doctest.h"

#include "fatgraph/fixtures.hpp"
#include "fatgraph/labels.hpp"

using namespace fatgraph;

TEST_CASE("distance from a slot to itself is zero and reverses to the complement") {
    for (auto &id : fixture_ids()) {
        GraphPair p = fixture(id);
        for (const EmbeddedGraph *g : {&p.g1, &p.g2})
            for (int v = 0; v < g->num_vertices(); ++v) {
                int m = static_cast<int>(g->rotation[v].size());
                for (int a = 0; a < m; ++a) {
                    CHECK(rho(*g, v, a, a) == 0);
                    for (int b = 0; b < m; ++b)
                        if (a != b)
                            CHECK(rho(*g, v, b, a) == m - rho(*g, v, a, b));
                }
            }
    }
}

TEST_CASE("distance follows the vertex direction") {
    GraphPair p = fixture("fig5_d");
    // vertex 1 of the annulus graph is negative: one step against the rotation
    int m = static_cast<int>(p.g1.rotation[1].size());
    CHECK(rho(p.g1, 0, 0, 1) == 1);
    CHECK(rho(p.g1, 1, 1, 0) == 1);
    CHECK(rho(p.g1, 1, 0, 1) == m - 1);
}

TEST_CASE("distance rejects slots off the vertex") {
    GraphPair p = fixture("fig3_1");
    CHECK_THROWS_AS(rho(p.g1, 0, 0, 99), SlotNotOnVertex);
    CHECK_THROWS_AS(label_at(p.g1, {0, 99}), SlotNotOnVertex);
}

TEST_CASE("labels run around each vertex in its direction") {
    for (auto &id : fixture_ids()) {
        GraphPair p = fixture(id);
        for (const EmbeddedGraph *g : {&p.g1, &p.g2})
            for (int v = 0; v < g->num_vertices(); ++v) {
                int first = label_at(*g, {v, 0});
                for (int pos = 0; pos < static_cast<int>(g->rotation[v].size()); ++pos)
                    CHECK(label_at(*g, {v, pos}) == expected_label(g->sign[v], g->n_opposite, first, pos));
            }
    }
}

TEST_CASE("edge sign compares the end vertex signs") {
    for (auto &id : fixture_ids()) {
        GraphPair p = fixture(id);
        Topology t = analyze(p.g1);
        for (int e = 0; e < t.E; ++e) {
            bool same = p.g1.sign[t.vert[2 * e]] == p.g1.sign[t.vert[2 * e + 1]];
            CHECK((edge_sign(p.g1, t, e) == EdgeSign::positive) == same);
        }
    }
}

TEST_CASE("family permutations invert") {
    for (auto &id : fixture_ids()) {
        GraphPair p = fixture(id);
        for (const EmbeddedGraph *g : {&p.g1, &p.g2}) {
            Topology t = analyze(*g);
            for (auto &c : parallel_classes(*g, t)) {
                if (edge_sign(*g, t, c.edges.front()) == EdgeSign::positive)
                    continue;
                PermutationPhi phi = family_permutation(*g, t, c);
                PermutationPhi back = phi.inverse();
                for (int i = 1; i <= phi.n; ++i)
                    if (phi.map[i])
                        CHECK(back.map[phi.map[i]] == i);
            }
        }
    }
}

TEST_CASE("the four parallel loops of fig3_1 form one positive family") {
    GraphPair p = fixture("fig3_1");
    auto classes = parallel_classes(p.g1);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].size() == 4);
    CHECK_THROWS_AS(family_permutation(p.g1, classes[0]), PositiveFamily);
}

TEST_CASE("negative families of fig5_d give total permutations") {
    GraphPair p = fixture("fig5_d");
    Topology t = analyze(p.g1);
    int negative = 0;
    for (auto &c : parallel_classes(p.g1, t)) {
        if (edge_sign(p.g1, t, c.edges.front()) == EdgeSign::positive)
            continue;
        ++negative;
        PermutationPhi phi = family_permutation(p.g1, t, c);
        for (size_t i = 0; i < c.side_a.size(); ++i)
            CHECK(phi.map[p.g1.label[c.side_a[i]]] == p.g1.label[mate(c.side_a[i])]);
    }
    CHECK(negative > 0);
}
