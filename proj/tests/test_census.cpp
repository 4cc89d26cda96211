#include <algorithm>
#include <set>
#include <tuple>

#include "doctest.h"

#include "fatgraph/census.hpp"
#include "fatgraph/fixtures.hpp"

using namespace fatgraph;

namespace {

SearchSpec cell(int n1, int n2, int delta, Profile profile = Profile::full) {
    SearchSpec s;
    s.n1 = n1;
    s.n2 = n2;
    s.delta = delta;
    s.profile = profile;
    s.time_budget = 120;
    return s;
}

std::set<std::string> codes(const CensusResult &r) {
    std::set<std::string> out;
    for (auto &s : r.survivors)
        out.insert(s.code);
    return out;
}

} // namespace

TEST_CASE("intrinsic slots are a bijection on each vertex") {
    for (int d_eff : {1, 2, 3}) {
        PointModel m{2, 3, 5, d_eff, {Sign::plus, Sign::minus}, {Sign::plus, Sign::plus, Sign::minus}};
        std::set<std::pair<int, int>> on_u, on_v;
        for (int p = 0; p < m.num_points(); ++p) {
            CHECK(on_u.insert({m.u_of(p), m.slot_u(p)}).second);
            CHECK(on_v.insert({m.v_of(p), m.slot_v(p)}).second);
            CHECK(m.slot_u(p) < m.n2 * m.delta);
            CHECK(m.slot_v(p) < m.n1 * m.delta);
        }
    }
}

TEST_CASE("jump and sense of the point model") {
    PointModel m{1, 1, 5, 2, {Sign::plus}, {Sign::plus}};
    CHECK(m.jump() == 2);
    int sense = m.sense();
    m.d_eff = 3;
    CHECK(m.jump() == 2);
    CHECK(m.sense() == -sense);
    m.d_eff = 1;
    CHECK(m.jump() == 1);
}

TEST_CASE("build_pair rejects a matching that is not an involution") {
    PointModel m{1, 1, 4, 1, {Sign::plus}, {Sign::minus}};
    CHECK_THROWS(build_pair(m, {1, 2, 3, 0}));
    CHECK_THROWS(build_pair(m, {0, 1, 2, 3}));
    CHECK_NOTHROW(build_pair(m, {2, 3, 0, 1}));
}

TEST_CASE("configuration text round-trips") {
    PointModel m{1, 2, 4, 3, {Sign::plus}, {Sign::plus, Sign::minus}};
    std::vector<int> sigma = {4, 5, -1, -1, 0, 1, -1, -1};
    DecodedConfig d = decode_config(encode_config(m, sigma));
    CHECK(d.model.n1 == 1);
    CHECK(d.model.n2 == 2);
    CHECK(d.model.delta == 4);
    CHECK(d.model.d_eff == 3);
    CHECK(d.model.sv == m.sv);
    CHECK(d.sigma == sigma);
    CHECK_FALSE(d.has_extras);
}

TEST_CASE("search specs are validated") {
    SearchSpec s = cell(1, 1, 4);
    CHECK_NOTHROW(check_spec(s));
    s.delta = 6;
    CHECK_THROWS_AS(check_spec(s), std::invalid_argument);
    s = cell(0, 1, 4);
    CHECK_THROWS_AS(check_spec(s), std::invalid_argument);
    s = cell(1, 1, 4);
    s.workers = 0;
    CHECK_THROWS_AS(check_spec(s), std::invalid_argument);
    s = cell(1, 1, 4);
    s.time_budget = 0;
    CHECK_THROWS_AS(check_spec(s), std::invalid_argument);
}

TEST_CASE("the one-vertex annulus cell at delta 4 yields exactly fig3_1") {
    CensusResult r = enumerate(cell(1, 2, 4));
    CHECK(r.exhaustive);
    REQUIRE(r.survivors.size() == 1);
    CHECK(r.survivors[0].code == code_string(canonicalize_pair(fixture("fig3_1"), true)));
    CHECK(evaluate(r.survivors[0].pair, Profile::full).survivor);
}

TEST_CASE("the census is deterministic across runs and worker counts") {
    SearchSpec s = cell(2, 2, 4);
    s.certificates = true;
    CensusResult a = enumerate(s);
    CensusResult b = enumerate(s);
    s.workers = 3;
    CensusResult c = enumerate(s);
    CHECK(codes(a) == codes(b));
    CHECK(codes(a) == codes(c));
    CHECK(a.nodes == b.nodes);
    CHECK(a.nodes == c.nodes);
    CHECK(certificate_digest(a.certificate) == certificate_digest(b.certificate));
    CHECK(certificate_digest(a.certificate) == certificate_digest(c.certificate));
}

TEST_CASE("the combinatorial profile keeps every full survivor") {
    for (auto [n1, n2, delta] : {std::tuple{1, 2, 4}, {2, 1, 4}, {2, 2, 4}, {1, 3, 5}}) {
        CensusResult full = enumerate(cell(n1, n2, delta, Profile::full));
        CensusResult comb = enumerate(cell(n1, n2, delta, Profile::combinatorial));
        std::set<std::string> cf = codes(full), cc = codes(comb);
        for (auto &c : cf)
            CHECK(cc.count(c) == 1);
    }
}

TEST_CASE("every certificate record replays to its recorded outcome") {
    for (auto [n1, n2] : {std::pair{1, 2}, {2, 1}}) {
        SearchSpec s = cell(n1, n2, 4);
        s.certificates = true;
        CensusResult r = enumerate(s);
        REQUIRE_FALSE(r.certificate.empty());
        for (auto &rec : r.certificate)
            CHECK_MESSAGE(replay(rec, s.profile) == rec.constraint, rec.node);
    }
}

TEST_CASE("pruned and naive searches agree") {
    for (auto [n1, n2, delta] : {std::tuple{1, 1, 4}, {1, 2, 4}, {2, 1, 4}, {1, 1, 5}}) {
        SearchSpec s = cell(n1, n2, delta);
        CHECK(codes(enumerate(s)) == codes(enumerate_naive(s)));
    }
}

TEST_CASE("a tiny node budget stops the search without claiming exhaustion") {
    SearchSpec s = cell(2, 2, 5);
    s.node_budget = 50;
    CensusResult r = enumerate(s);
    CHECK_FALSE(r.exhaustive);
}

TEST_CASE("summary rows have one field per header column") {
    CensusResult r = enumerate(cell(1, 1, 4));
    auto fields = [](const std::string &s) { return std::count(s.begin(), s.end(), '\t') + 1; };
    CHECK(fields(summary_row(r)) == fields(summary_header()));
}

TEST_CASE("derived results") {
    CHECK_FALSE(derived_results().empty());
    SearchSpec base;
    base.time_budget = 120;
    CHECK_THROWS_AS(verify_derived("no-such-result", 2, base), UnknownResult);
    DerivedReport r = verify_derived("single-vertex-annulus", 2, base);
    CHECK(r.pass);
    CHECK_FALSE(r.cells.empty());
}

TEST_CASE("mirror and oriented counts agree across the reflection switch") {
    for (auto [n1, n2, delta] : {std::tuple{1, 2, 4}, {2, 1, 4}, {2, 2, 4}, {2, 2, 5}}) {
        SearchSpec s = cell(n1, n2, delta);
        CensusResult with = enumerate(s);
        s.reflection = false;
        CensusResult without = enumerate(s);
        CHECK(with.mirror_classes == static_cast<int>(with.survivors.size()));
        CHECK(with.oriented_classes == static_cast<int>(without.survivors.size()));
        CHECK(without.mirror_classes == with.mirror_classes);
        CHECK(without.oriented_classes == with.oriented_classes);
    }
}
