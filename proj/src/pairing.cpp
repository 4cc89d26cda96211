#include "fatgraph/pairing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "fatgraph/labels.hpp"

namespace fatgraph {

namespace {

std::string uv(int u, int v) { return "u" + std::to_string(u + 1) + " v" + std::to_string(v + 1); }

int mod(int a, int m) { return ((a % m) + m) % m; }

// Intrinsic position of a slot: the index along the vertex's own direction.
int intrinsic_pos(const EmbeddedGraph &g, int vertex, int pos) {
    int m = static_cast<int>(g.rotation[vertex].size());
    return g.sign[vertex] == Sign::plus ? pos : mod(-pos, m);
}

} // namespace

std::vector<int> jumping_numbers(int delta) {
    if (delta <= 2)
        return {1};
    std::vector<int> out;
    for (int d = 1; 2 * d <= delta; ++d)
        if (std::gcd(d, delta) == 1)
            out.push_back(d);
    return out;
}

PairIndex index_pair(const GraphPair &p) {
    PairIndex ix;
    const int N = static_cast<int>(p.points.size());
    if (N != p.g1.num_darts() || N != p.g2.num_darts())
        throw MalformedGraph("point rows must cover every edge end of both graphs");
    ix.dart1.assign(N, -1);
    ix.dart2.assign(N, -1);
    ix.point1.assign(N, -1);
    ix.point2.assign(N, -1);
    for (int k = 0; k < N; ++k) {
        const PointRow &r = p.points[k];
        if (r.u < 0 || r.u >= p.n1() || r.v < 0 || r.v >= p.n2())
            throw MalformedGraph("point row names an unknown vertex");
        const auto &ru = p.g1.rotation[r.u];
        const auto &rv = p.g2.rotation[r.v];
        if (r.pos_u < 0 || r.pos_u >= static_cast<int>(ru.size()) || r.pos_v < 0 ||
            r.pos_v >= static_cast<int>(rv.size()))
            throw MalformedGraph("point row position out of range");
        int d1 = ru[r.pos_u], d2 = rv[r.pos_v];
        if (ix.point1[d1] >= 0 || ix.point2[d2] >= 0)
            throw MalformedGraph("a slot is named by two point rows");
        ix.dart1[k] = d1;
        ix.dart2[k] = d2;
        ix.point1[d1] = k;
        ix.point2[d2] = k;
    }
    const int E = N / 2;
    ix.edge2_of_edge1.assign(E, -1);
    ix.edge1_of_edge2.assign(E, -1);
    for (int e = 0; e < E; ++e) {
        int pa = ix.point1[2 * e], pb = ix.point1[2 * e + 1];
        int da = ix.dart2[pa], db = ix.dart2[pb];
        if (mate(da) == db) {
            ix.edge2_of_edge1[e] = edge_of(da);
            ix.edge1_of_edge2[edge_of(da)] = e;
        }
    }
    return ix;
}

PairReport check_parity_rule(const GraphPair &p) {
    PairReport out;
    PairIndex ix = index_pair(p);
    Topology t1 = analyze(p.g1), t2 = analyze(p.g2);
    for (int e = 0; e < t1.E; ++e) {
        int f = ix.edge2_of_edge1[e];
        if (f < 0)
            continue;
        if (edge_sign(p.g1, t1, e) == edge_sign(p.g2, t2, f))
            out.push_back({"parity", "edge " + std::to_string(e) + " has the same sign in both graphs"});
    }
    return out;
}

PairReport check_jumping_order(const GraphPair &p) {
    PairReport out;
    const int D = p.delta;
    if (D <= 0)
        return out;
    std::map<std::pair<int, int>, std::vector<int>> cells;
    for (int k = 0; k < static_cast<int>(p.points.size()); ++k)
        cells[{p.points[k].u, p.points[k].v}].push_back(k);
    for (auto &[key, pts] : cells) {
        if (static_cast<int>(pts.size()) != D)
            continue; // reported by delta-regularity
        auto rank_along = [&](bool on_u) {
            std::vector<std::pair<int, int>> keyed;
            for (int k : pts) {
                const PointRow &r = p.points[k];
                int ip = on_u ? intrinsic_pos(p.g1, r.u, r.pos_u) : intrinsic_pos(p.g2, r.v, r.pos_v);
                keyed.push_back({ip, k});
            }
            std::sort(keyed.begin(), keyed.end());
            std::map<int, int> rank;
            for (int i = 0; i < D; ++i)
                rank[keyed[i].second] = i;
            return rank;
        };
        auto a = rank_along(true), b = rank_along(false);
        int step = mod(p.sense * p.d, D);
        int c = mod(a[pts[0]] - step * b[pts[0]], D);
        bool ok = true;
        for (int k : pts)
            ok &= a[k] == mod(c + step * b[k], D);
        if (!ok)
            out.push_back({"jumping-order", uv(key.first, key.second)});
    }
    return out;
}

PairReport validate_pair(const GraphPair &p) {
    PairReport out;
    auto add = [&](const std::string &id, const std::string &w) { out.push_back({id, w}); };
    Topology t1, t2;
    try {
        t1 = analyze(p.g1);
    } catch (const MalformedGraph &e) {
        add("well-formed", std::string("annulus graph: ") + e.what());
        return out;
    }
    try {
        t2 = analyze(p.g2);
    } catch (const MalformedGraph &e) {
        add("well-formed", std::string("torus graph: ") + e.what());
        return out;
    }
    if (p.g1.surface != Surface::annulus || p.g2.surface != Surface::torus)
        add("surface", "expected an annulus graph and a torus graph");
    const int n1 = p.n1(), n2 = p.n2(), D = p.delta;
    if (D < 1 || D > 5)
        add("delta-range", "delta " + std::to_string(D));
    else {
        auto js = jumping_numbers(D);
        if (std::find(js.begin(), js.end(), p.d) == js.end())
            add("jump-range", "jumping number " + std::to_string(p.d) + " with delta " + std::to_string(D));
    }
    if (p.sense != 1 && p.sense != -1)
        add("sense", "sense must be +1 or -1");
    if (p.g1.n_opposite != n2 || p.g2.n_opposite != n1)
        add("label-range", "label counts must equal the opposite vertex counts");
    if (2 * t1.E != D * n1 * n2 || 2 * t2.E != D * n1 * n2)
        add("edge-count", "expected " + std::to_string(D * n1 * n2 / 2) + " edges in each graph");
    for (int u = 0; u < n1; ++u)
        if (static_cast<int>(p.g1.rotation[u].size()) != D * n2)
            add("valency", "u" + std::to_string(u + 1));
    for (int v = 0; v < n2; ++v)
        if (static_cast<int>(p.g2.rotation[v].size()) != D * n1)
            add("valency", "v" + std::to_string(v + 1));
    if (!out.empty())
        return out;
    PairIndex ix;
    try {
        ix = index_pair(p);
    } catch (const MalformedGraph &e) {
        add("point-rows", e.what());
        return out;
    }
    // labels: duality and cyclic order
    for (int k = 0; k < static_cast<int>(p.points.size()); ++k) {
        const PointRow &r = p.points[k];
        if (p.g1.label[ix.dart1[k]] != r.v + 1 || p.g2.label[ix.dart2[k]] != r.u + 1)
            add("label-duality", "point " + std::to_string(k) + " at " + uv(r.u, r.v));
    }
    auto cyclic = [&](const EmbeddedGraph &g, const char *name) {
        for (int x = 0; x < g.num_vertices(); ++x) {
            const auto &rot = g.rotation[x];
            for (int k = 0; k < static_cast<int>(rot.size()); ++k)
                if (g.label[rot[k]] != expected_label(g.sign[x], g.n_opposite, g.label[rot[0]], k)) {
                    add("label-cyclic", std::string(name) + std::to_string(x + 1));
                    break;
                }
        }
    };
    cyclic(p.g1, "u");
    cyclic(p.g2, "v");
    std::vector<int> cell(n1 * n2, 0);
    for (auto &r : p.points)
        ++cell[r.u * n2 + r.v];
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v)
            if (cell[u * n2 + v] != D)
                add("delta-regular", uv(u, v) + " meet " + std::to_string(cell[u * n2 + v]) + " times");
    for (int e = 0; e < t1.E; ++e)
        if (ix.edge2_of_edge1[e] < 0)
            add("endpoint-match", "annulus edge " + std::to_string(e) + " has no partner");
    for (int e = 0; e < t1.E; ++e)
        if (t1.vert[2 * e] == t1.vert[2 * e + 1] && is_trivial_loop(p.g1, t1, e))
            add("trivial-loop", "annulus edge " + std::to_string(e));
    for (int e = 0; e < t2.E; ++e)
        if (t2.vert[2 * e] == t2.vert[2 * e + 1] && is_trivial_loop(p.g2, t2, e))
            add("trivial-loop", "torus edge " + std::to_string(e));
    if (!out.empty())
        return out;
    for (auto &v : check_parity_rule(p))
        out.push_back(v);
    for (auto &v : check_jumping_order(p))
        out.push_back(v);
    return out;
}

namespace {

// Distances between points in one graph, measured in each vertex's own
// direction. side 0 reads the annulus graph, side 1 the torus graph.
struct Distances {
    const GraphPair &p;
    int side;
    int vertex(int k) const { return side == 0 ? p.points[k].u : p.points[k].v; }
    int other(int k) const { return side == 0 ? p.points[k].v : p.points[k].u; }
    int tau(int a, int b) const {
        const EmbeddedGraph &g = side == 0 ? p.g1 : p.g2;
        int pa = side == 0 ? p.points[a].pos_u : p.points[a].pos_v;
        int pb = side == 0 ? p.points[b].pos_u : p.points[b].pos_v;
        return rho(g, vertex(a), pa, pb);
    }
};

} // namespace

PairReport check_distance_transfer(const GraphPair &p) {
    PairReport out;
    const int N = static_cast<int>(p.points.size());
    for (int side = 0; side < 2; ++side) {
        Distances alpha{p, side}, beta{p, 1 - side};
        const char *tag = side == 0 ? "annulus to torus" : "torus to annulus";
        // case (i): P, Q share both vertices; R, S share both vertices
        std::map<int, std::pair<int, std::string>> seen;
        for (int P = 0; P < N; ++P)
            for (int Q = 0; Q < N; ++Q) {
                if (alpha.vertex(P) != alpha.vertex(Q) || alpha.other(P) != alpha.other(Q))
                    continue;
                int ta = alpha.tau(P, Q), tb = beta.tau(P, Q);
                std::string w = "points " + std::to_string(P) + "," + std::to_string(Q);
                auto [it, fresh] = seen.emplace(ta, std::make_pair(tb, w));
                if (!fresh && it->second.first != tb)
                    out.push_back({"distance-transfer",
                                   std::string(tag) + " same-cell: " + it->second.second + " vs " + w});
            }
        // case (ii): P in a,x; Q in a,y; R in b,x; S in b,y
        std::vector<std::vector<int>> by_cell;
        int na = side == 0 ? p.n1() : p.n2(), nx = side == 0 ? p.n2() : p.n1();
        by_cell.assign(na * nx, {});
        for (int k = 0; k < N; ++k)
            by_cell[alpha.vertex(k) * nx + alpha.other(k)].push_back(k);
        bool reported = false;
        for (int a = 0; a < na && !reported; ++a)
            for (int b = 0; b < na && !reported; ++b)
                for (int x = 0; x < nx && !reported; ++x)
                    for (int y = 0; y < nx && !reported; ++y)
                        for (int P : by_cell[a * nx + x])
                            for (int Q : by_cell[a * nx + y])
                                for (int R : by_cell[b * nx + x])
                                    for (int S : by_cell[b * nx + y]) {
                                        if (reported || alpha.tau(P, Q) != alpha.tau(R, S))
                                            continue;
                                        if (beta.tau(P, R) != beta.tau(Q, S)) {
                                            out.push_back({"distance-transfer",
                                                           std::string(tag) + " crossed: points " + std::to_string(P) +
                                                               "," + std::to_string(Q) + "," + std::to_string(R) +
                                                               "," + std::to_string(S)});
                                            reported = true;
                                        }
                                    }
    }
    return out;
}

PairReport check_equidistance_transfer(const GraphPair &p) {
    PairReport out;
    PairIndex ix = index_pair(p);
    Topology t1 = analyze(p.g1), t2 = analyze(p.g2);
    auto ends = [](const Topology &t, int e) {
        int a = t.vert[2 * e], b = t.vert[2 * e + 1];
        return std::make_pair(std::min(a, b), std::max(a, b));
    };
    for (int e1 = 0; e1 < t1.E; ++e1)
        for (int e2 = e1 + 1; e2 < t1.E; ++e2) {
            int f1 = ix.edge2_of_edge1[e1], f2 = ix.edge2_of_edge1[e2];
            if (f1 < 0 || f2 < 0)
                continue;
            if (ends(t1, e1) != ends(t1, e2) || ends(t2, f1) != ends(t2, f2))
                continue;
            bool a = is_equidistant_pair(p.g1, t1, e1, e2);
            bool b = is_equidistant_pair(p.g2, t2, f1, f2);
            if (a != b)
                out.push_back({"equidistance-transfer", "edges " + std::to_string(e1) + "," + std::to_string(e2) +
                                                            (a ? " equidistant only on the annulus"
                                                               : " equidistant only on the torus")});
        }
    return out;
}

std::string format_report(const PairReport &r) {
    std::ostringstream out;
    for (auto &v : r)
        out << v.constraint << ": " << v.witness << "\n";
    return out.str();
}

} // namespace fatgraph
