#include <map>
#include <numeric>
#include <set>

#include "doctest.h"

#include "fatgraph/census.hpp"
#include "fatgraph/fixtures.hpp"
#include "test_graphs.hpp"

using namespace fatgraph;

namespace {

bool has(const PairReport &r, const std::string &id) {
    for (auto &v : r)
        if (v.constraint == id)
            return true;
    return false;
}

// Shift the torus vertex indices by k; annulus labels follow.
GraphPair rotate_torus_indices(const GraphPair &p, int k) {
    GraphPair q = p;
    int n = p.n2();
    auto to = [&](int v) { return (v + k) % n; };
    for (int v = 0; v < n; ++v) {
        q.g2.rotation[to(v)] = p.g2.rotation[v];
        q.g2.sign[to(v)] = p.g2.sign[v];
    }
    for (auto &l : q.g1.label)
        l = to(l - 1) + 1;
    for (auto &r : q.points)
        r.v = to(r.v);
    for (auto &c : q.g2.extras.marks)
        c.vertex = to(c.vertex);
    for (auto &c : q.g2.extras.handle)
        c.vertex = to(c.vertex);
    for (auto &[a, b] : q.g2.extras.joins) {
        a.vertex = to(a.vertex);
        b.vertex = to(b.vertex);
    }
    return q;
}

// The same shift on the annulus side.
GraphPair rotate_annulus_indices(const GraphPair &p, int k) {
    GraphPair q = p;
    int n = p.n1();
    auto to = [&](int u) { return (u + k) % n; };
    for (int u = 0; u < n; ++u) {
        q.g1.rotation[to(u)] = p.g1.rotation[u];
        q.g1.sign[to(u)] = p.g1.sign[u];
    }
    for (auto &l : q.g2.label)
        l = to(l - 1) + 1;
    for (auto &r : q.points)
        r.u = to(r.u);
    for (auto &c : q.g1.extras.marks)
        c.vertex = to(c.vertex);
    for (auto &[a, b] : q.g1.extras.joins) {
        a.vertex = to(a.vertex);
        b.vertex = to(b.vertex);
    }
    return q;
}

struct RandomPair {
    PointModel model;
    std::vector<int> sigma;
};

RandomPair random_pair(testing::Rng &rng) {
    RandomPair r;
    PointModel &m = r.model;
    m.n1 = 1 + rng.below(3);
    m.n2 = 1 + rng.below(3);
    m.delta = 3 + rng.below(3);
    std::vector<int> units;
    for (int d = 1; d < m.delta; ++d)
        if (std::gcd(d, m.delta) == 1)
            units.push_back(d);
    m.d_eff = units[rng.below(static_cast<int>(units.size()))];
    for (int i = 0; i < m.n1; ++i)
        m.su.push_back(rng.below(2) ? Sign::plus : Sign::minus);
    for (int j = 0; j < m.n2; ++j)
        m.sv.push_back(rng.below(2) ? Sign::plus : Sign::minus);
    int N = m.num_points();
    std::vector<int> order(N);
    std::iota(order.begin(), order.end(), 0);
    for (int i = N - 1; i > 0; --i)
        std::swap(order[i], order[rng.below(i + 1)]);
    r.sigma.assign(N, -1);
    if (N % 2)
        return r;
    for (int i = 0; i < N; i += 2) {
        r.sigma[order[i]] = order[i + 1];
        r.sigma[order[i + 1]] = order[i];
    }
    return r;
}

// First admissible marks and feet on both sides; false when the bare maps
// do not embed in their surfaces.
bool complete_extras(GraphPair &p) {
    try {
        auto c1 = extras_choices(p.g1), c2 = extras_choices(p.g2);
        if (c1.empty() || c2.empty())
            return false;
        p.g1.extras = c1.front();
        p.g2.extras = c2.front();
        analyze(p.g1);
        analyze(p.g2);
        return true;
    } catch (const std::exception &) {
        return false;
    }
}

} // namespace

TEST_CASE("fixtures validate cleanly with their jumping numbers") {
    std::map<std::string, int> jump = {{"fig3_1", 1}, {"fig3_3", 1}, {"fig5_d", 1}, {"fig5_e", 2}};
    for (auto &id : fixture_ids()) {
        GraphPair p = fixture(id);
        CHECK_MESSAGE(validate_pair(p).empty(), id);
        CHECK(p.d == jump[id]);
    }
}

TEST_CASE("fixture sizes") {
    GraphPair a = fixture("fig3_1");
    CHECK(a.n1() == 1);
    CHECK(a.n2() == 2);
    CHECK(a.delta == 4);
    CHECK(a.g1.num_edges() == 4);
    GraphPair e = fixture("fig5_e");
    CHECK(e.delta == 5);
    CHECK(e.g1.num_edges() == 10);
    CHECK_THROWS_AS(fixture("fig9_9"), UnknownFixture);
}

TEST_CASE("fig5_e read with jumping number 1 breaks the jumping order") {
    GraphPair p = fixture("fig5_e");
    p.d = 1;
    CHECK(has(check_jumping_order(p), "jumping-order"));
}

TEST_CASE("pair text round-trips") {
    for (auto &id : fixture_ids()) {
        GraphPair p = fixture(id);
        CHECK(read_pair(write_pair(p)) == p);
    }
}

TEST_CASE("transfer scans are clean on the fixtures") {
    for (auto &id : fixture_ids()) {
        GraphPair p = fixture(id);
        CHECK(check_distance_transfer(p).empty());
        CHECK(check_equidistance_transfer(p).empty());
    }
}

TEST_CASE("pairs built from the point model keep the jumping order") {
    testing::Rng rng(7);
    int built = 0;
    for (int trial = 0; trial < 200; ++trial) {
        RandomPair r = random_pair(rng);
        if (r.sigma.empty() || r.sigma[0] < 0)
            continue;
        GraphPair p = build_pair(r.model, r.sigma);
        CHECK(check_jumping_order(p).empty());
        ++built;
    }
    CHECK(built > 50);
}

TEST_CASE("parity violations match the vertex signs") {
    testing::Rng rng(11);
    int checked = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        RandomPair r = random_pair(rng);
        if (r.sigma.empty() || r.sigma[0] < 0)
            continue;
        const PointModel &m = r.model;
        bool expected_clean = true;
        for (int a = 0; a < m.num_points(); ++a) {
            int b = r.sigma[a];
            bool pos1 = m.su[m.u_of(a)] == m.su[m.u_of(b)];
            bool pos2 = m.sv[m.v_of(a)] == m.sv[m.v_of(b)];
            if (pos1 == pos2)
                expected_clean = false;
        }
        GraphPair p = build_pair(m, r.sigma);
        if (!complete_extras(p))
            continue;
        CHECK(check_parity_rule(p).empty() == expected_clean);
        ++checked;
    }
    CHECK(checked > 20);
}

TEST_CASE("canonical codes ignore cyclic shifts of vertex indices") {
    for (auto &id : fixture_ids()) {
        GraphPair p = fixture(id);
        std::string code = code_string(canonicalize_pair(p, false));
        for (int k = 1; k < p.n2(); ++k)
            CHECK(code_string(canonicalize_pair(rotate_torus_indices(p, k), false)) == code);
        for (int k = 1; k < p.n1(); ++k)
            CHECK(code_string(canonicalize_pair(rotate_annulus_indices(p, k), false)) == code);
    }
}

TEST_CASE("distinct fixtures have distinct codes") {
    std::set<std::string> codes;
    for (auto &id : fixture_ids())
        codes.insert(code_string(canonicalize_pair(fixture(id), true)));
    CHECK(codes.size() == fixture_ids().size());
}

TEST_CASE("flipping a torus vertex sign of fig3_1 breaks the parity rule") {
    GraphPair p = fixture("fig3_1");
    p.g2.sign[1] = Sign::plus;
    CHECK(has(check_parity_rule(p), "parity"));
    CHECK(has(validate_pair(p), "parity"));
}
