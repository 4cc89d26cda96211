#include <set>

#include "doctest.h"

#include "fatgraph/census.hpp"
#include "fatgraph/fixtures.hpp"
#include "fatgraph/labels.hpp"
#include "fatgraph/lemmas.hpp"
#include "test_graphs.hpp"

using namespace fatgraph;

namespace {

// Faces with distinct positive edges whose end labels are all the same
// consecutive pair; counted straight from the walks.
int count_scharlemann_faces(const EmbeddedGraph &g, const Topology &t) {
    const int n = g.n_opposite;
    if (n < 2)
        return 0;
    int count = 0;
    for (int f = 0; f < t.F; ++f) {
        const auto &w = t.walks[f];
        if (w.size() < 2 || !t.face_is_disk(f))
            continue;
        std::set<int> edges;
        std::set<std::set<int>> pairs;
        bool ok = true;
        for (int d : w) {
            int e = d / 2;
            ok = ok && edges.insert(e).second;
            ok = ok && g.sign[t.vert[d]] == g.sign[t.vert[d ^ 1]];
            pairs.insert({g.label[d], g.label[d ^ 1]});
        }
        if (!ok || pairs.size() != 1)
            continue;
        const std::set<int> &p = *pairs.begin();
        if (p.size() != 2)
            continue;
        int a = *p.begin(), b = *p.rbegin();
        if (b == a + 1 || (a == 1 && b == n))
            ++count;
    }
    return count;
}

} // namespace

TEST_CASE("constraint registry") {
    std::set<std::string> ids;
    for (auto &c : constraint_registry())
        CHECK(ids.insert(c.id).second);
    CHECK(find_constraint("parity").provenance == Provenance::structural);
    CHECK_THROWS_AS(find_constraint("no-such-rule"), UnknownConstraint);
    for (auto &c : constraint_registry()) {
        CHECK(active_in(c, Profile::full));
        CHECK(active_in(c, Profile::combinatorial) == (c.provenance != Provenance::topological_axiom));
    }
}

TEST_CASE("profile names") {
    CHECK(parse_profile("full") == Profile::full);
    CHECK(parse_profile("combinatorial") == Profile::combinatorial);
    CHECK(std::string(profile_name(Profile::combinatorial)) == "combinatorial");
    CHECK_THROWS_AS(parse_profile("strict"), std::invalid_argument);
}

TEST_CASE("fixtures survive under both profiles") {
    for (auto &id : fixture_ids()) {
        GraphPair p = fixture(id);
        CHECK_MESSAGE(evaluate(p, Profile::full).survivor, id);
        CHECK_MESSAGE(evaluate(p, Profile::combinatorial).survivor, id);
    }
}

TEST_CASE("every annulus graph is separable by its own vertex count") {
    for (auto &id : fixture_ids()) {
        GraphPair p = fixture(id);
        CHECK(is_k_separable(p.g1, p.n1()));
    }
    CHECK(is_k_separable(testing::nested_loops_annulus(), 2));
}

TEST_CASE("separable examples") {
    CHECK(is_k_separable(fixture("fig5_d").g1, 2));
    CHECK(is_k_separable(testing::nested_loops_annulus(), 1));
    CHECK_FALSE(is_k_separable(fixture("fig5_e").g1, 1));
}

TEST_CASE("Scharlemann cycles agree with a direct face scan") {
    for (auto &id : fixture_ids()) {
        GraphPair p = fixture(id);
        for (const EmbeddedGraph *g : {&p.g1, &p.g2}) {
            Topology t = analyze(*g);
            auto found = find_scharlemann_cycles(*g, t);
            CHECK(static_cast<int>(found.size()) == count_scharlemann_faces(*g, t));
            for (auto &sc : found)
                CHECK(sc.high == sc.low % g->n_opposite + 1);
        }
    }
}

TEST_CASE("Scharlemann cycles agree with a direct face scan on random pairs") {
    testing::Rng rng(23);
    int checked = 0;
    for (int trial = 0; trial < 3000 && checked < 200; ++trial) {
        PointModel m;
        m.n1 = 1 + rng.below(3);
        m.n2 = 1 + rng.below(3);
        m.delta = 4;
        m.d_eff = rng.below(2) ? 1 : 3;
        for (int i = 0; i < m.n1; ++i)
            m.su.push_back(rng.below(2) ? Sign::plus : Sign::minus);
        for (int j = 0; j < m.n2; ++j)
            m.sv.push_back(rng.below(2) ? Sign::plus : Sign::minus);
        int N = m.num_points();
        std::vector<int> free(N), sigma(N, -1);
        for (int i = 0; i < N; ++i)
            free[i] = i;
        while (!free.empty()) {
            int a = free.back();
            free.pop_back();
            int k = rng.below(static_cast<int>(free.size()));
            int b = free[k];
            free.erase(free.begin() + k);
            sigma[a] = b;
            sigma[b] = a;
        }
        GraphPair p = build_pair(m, sigma);
        try {
            auto c1 = extras_choices(p.g1), c2 = extras_choices(p.g2);
            if (c1.empty() || c2.empty())
                continue;
            p.g1.extras = c1.front();
            p.g2.extras = c2.front();
            for (const EmbeddedGraph *g : {&p.g1, &p.g2}) {
                Topology t = analyze(*g);
                CHECK(static_cast<int>(find_scharlemann_cycles(*g, t).size()) == count_scharlemann_faces(*g, t));
            }
            ++checked;
        } catch (const MalformedGraph &) {
            continue;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("certificate records round-trip through their text line") {
    CertificateRecord r{"c0.17", "1 2 4 1 +- ++ : 3 2 1 0", "", "eliminated", "parity",
                        "edge \"3\" has\tthe same sign\nin both graphs"};
    CHECK(parse_record(to_line(r)) == r);
    CHECK(to_line(r).find('\n') == std::string::npos);
    CertificateRecord s{"c1.2", "x", "code", "survivor", "", ""};
    CHECK(parse_record(to_line(s)) == s);
}
