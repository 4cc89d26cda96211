#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fatgraph/disk_graphs.hpp"

namespace fatgraph {

const char *vertex_kind_name(VertexKind k) {
    switch (k) {
    case VertexKind::interior:
        return "interior";
    case VertexKind::boundary:
        return "boundary";
    case VertexKind::cut:
        return "cut";
    }
    return "?";
}

namespace {

int outer_region(const EmbeddedGraph &d, const Topology &t) {
    if (d.surface != Surface::disk || d.extras.marks.size() != 1)
        throw std::invalid_argument("expected a disk graph with one outer mark");
    if (t.num_components != 1)
        throw std::invalid_argument("disk graph must be connected");
    return t.region[t.corner_face(d.extras.marks[0])];
}

} // namespace

VertexKind classify_vertex(const EmbeddedGraph &d, const Topology &t, int v) {
    int outer = outer_region(d, t);
    const auto &r = d.rotation.at(v);
    if (r.empty())
        return VertexKind::boundary;
    int touching = 0;
    for (int pos = 0; pos < static_cast<int>(r.size()); ++pos)
        if (t.region[t.corner_face({v, pos})] == outer)
            ++touching;
    if (touching == 0)
        return VertexKind::interior;
    return touching == 1 ? VertexKind::boundary : VertexKind::cut;
}

VertexKind classify_vertex(const EmbeddedGraph &d, int v) { return classify_vertex(d, analyze(d), v); }

DiskStats disk_stats(const EmbeddedGraph &d) {
    Topology t = analyze(d);
    outer_region(d, t);
    if (t.E == 0)
        throw SingleVertex("disk graph is a single vertex");
    DiskStats s;
    for (int v = 0; v < t.V; ++v) {
        if (classify_vertex(d, t, v) != VertexKind::boundary)
            continue;
        switch (d.rotation[v].size()) {
        case 1:
            ++s.a1;
            break;
        case 2:
            ++s.a2;
            break;
        case 3:
            ++s.a3;
            break;
        default:
            break;
        }
    }
    for (int e = 0; e < t.E; ++e)
        if (t.vert[2 * e] == t.vert[2 * e + 1] && is_trivial_loop(d, t, e))
            ++s.l;
    for (auto &c : parallel_classes(d, t))
        s.p += c.cyclic ? c.size() : c.size() - 1;
    return s;
}

EmbeddedGraph subgraph(const EmbeddedGraph &g, const std::vector<char> &keep) {
    if (g.surface == Surface::torus)
        throw std::invalid_argument("subgraph is defined for planar surfaces only");
    Topology t = analyze(g);
    if (static_cast<int>(keep.size()) != t.E)
        throw std::invalid_argument("keep flags must cover every edge");
    std::vector<int> new_edge(t.E, -1);
    int E = 0;
    for (int e = 0; e < t.E; ++e)
        if (keep[e])
            new_edge[e] = E++;
    EmbeddedGraph h;
    h.surface = g.surface;
    h.n_opposite = g.n_opposite;
    h.sign = g.sign;
    h.label.assign(2 * E, 0);
    h.rotation.assign(t.V, {});
    std::vector<std::vector<int>> new_pos(t.V);
    for (int v = 0; v < t.V; ++v)
        for (int d : g.rotation[v]) {
            new_pos[v].push_back(static_cast<int>(h.rotation[v].size()) - 1);
            if (!keep[edge_of(d)])
                continue;
            int nd = 2 * new_edge[edge_of(d)] + (d & 1);
            h.rotation[v].push_back(nd);
            h.label[nd] = g.label[d];
            new_pos[v].back() = static_cast<int>(h.rotation[v].size()) - 1;
        }
    // corner (v, pos) lies after the last kept dart at or before pos
    auto carry = [&](Corner c) {
        int n = static_cast<int>(h.rotation[c.vertex].size());
        if (n == 0 || c.pos < 0)
            return Corner{c.vertex, n == 0 ? -1 : 0};
        int p = new_pos[c.vertex][c.pos];
        return Corner{c.vertex, p < 0 ? n - 1 : p};
    };
    for (auto &m : g.extras.marks)
        h.extras.marks.push_back(carry(m));
    // faces of g merged across deleted edges and existing joins
    UnionFind merged(t.F);
    for (int e = 0; e < t.E; ++e)
        if (!keep[e])
            merged.unite(t.face[2 * e], t.face[2 * e + 1]);
    for (int f = 0; f < t.F; ++f)
        for (int f2 = f + 1; f2 < t.F; ++f2)
            if (t.region[f] == t.region[f2])
                merged.unite(f, f2);
    Topology th = analyze(h, false);
    // one representative corner per (component, merged class)
    std::map<int, std::vector<std::pair<int, Corner>>> by_class;
    std::set<std::pair<int, int>> seen;
    for (int v = 0; v < t.V; ++v) {
        int n = static_cast<int>(g.rotation[v].size());
        for (int pos = (n ? 0 : -1); pos < std::max(n, 0); ++pos) {
            Corner c{v, pos};
            int cls = merged.find(t.corner_face(c));
            if (seen.insert({th.comp[v], cls}).second)
                by_class[cls].push_back({th.comp[v], carry(c)});
        }
    }
    for (auto &[cls, items] : by_class)
        for (size_t i = 1; i < items.size(); ++i)
            h.extras.joins.emplace_back(items[0].second, items[i].second);
    check_well_formed(h);
    return h;
}

namespace {

// Bare rotation systems used by the oracles. Dart 2e and 2e+1 form edge e.
struct Map {
    std::vector<std::vector<int>> rot;
    int darts() const {
        int n = 0;
        for (auto &r : rot)
            n += static_cast<int>(r.size());
        return n;
    }
};

struct MapData {
    std::vector<int> vert, pos, rho, face;
    std::vector<std::vector<int>> walks;
    int genus = 0;
};

MapData map_data(const Map &m) {
    MapData d;
    int D = m.darts();
    d.vert.assign(D, 0);
    d.pos.assign(D, 0);
    d.rho.assign(D, 0);
    d.face.assign(D, -1);
    for (int v = 0; v < static_cast<int>(m.rot.size()); ++v)
        for (int i = 0; i < static_cast<int>(m.rot[v].size()); ++i) {
            int x = m.rot[v][i];
            d.vert[x] = v;
            d.pos[x] = i;
            d.rho[x] = m.rot[v][(i + 1) % m.rot[v].size()];
        }
    for (int x = 0; x < D; ++x) {
        if (d.face[x] >= 0)
            continue;
        std::vector<int> w;
        for (int y = x; d.face[y] < 0; y = d.rho[y ^ 1]) {
            d.face[y] = static_cast<int>(d.walks.size());
            w.push_back(y);
        }
        d.walks.push_back(std::move(w));
    }
    int V = static_cast<int>(m.rot.size()), E = D / 2, F = std::max<int>(1, d.walks.size());
    d.genus = (2 - V + E - F) / 2;
    return d;
}

// Lexicographically least traversal code over all roots; face_weight adds
// per-face data (marks) to the code.
std::vector<int> map_code(const Map &m, const MapData &d, const std::vector<int> &face_weight) {
    int D = m.darts();
    if (D == 0)
        return {static_cast<int>(m.rot.size()), face_weight.empty() ? 0 : face_weight[0]};
    std::vector<int> best;
    for (int root = 0; root < D; ++root) {
        std::vector<int> num(D, -1), order{root}, code;
        num[root] = 0;
        auto visit = [&](int x) {
            if (num[x] < 0) {
                num[x] = static_cast<int>(order.size());
                order.push_back(x);
            }
            return num[x];
        };
        for (size_t i = 0; i < order.size(); ++i) {
            int x = order[i];
            code.push_back(visit(d.rho[x]));
            code.push_back(visit(x ^ 1));
            if (!face_weight.empty())
                code.push_back(face_weight[d.face[x]]);
        }
        if (best.empty() || code < best)
            best = std::move(code);
    }
    return best;
}

// All connected maps with at most max_v vertices, max_e edges and genus at
// most max_genus, up to orientation-preserving isomorphism, by edge count.
std::vector<std::vector<Map>> grow_maps(int max_v, int max_e, int max_genus) {
    std::vector<std::vector<Map>> layers(max_e + 1);
    layers[0].push_back(Map{{{}}});
    for (int e = 0; e < max_e; ++e) {
        std::set<std::vector<int>> seen;
        auto add = [&](Map m) {
            MapData d = map_data(m);
            if (d.genus > max_genus)
                return;
            if (seen.insert(map_code(m, d, {})).second)
                layers[e + 1].push_back(std::move(m));
        };
        int a = 2 * e, b = 2 * e + 1;
        for (const Map &m : layers[e]) {
            int V = static_cast<int>(m.rot.size());
            for (int v = 0; v < V; ++v) {
                int n = static_cast<int>(m.rot[v].size());
                for (int i = 0; i < std::max(n, 1); ++i) {
                    if (V < max_v) {
                        Map x = m;
                        x.rot[v].insert(x.rot[v].begin() + i, a);
                        x.rot.push_back({b});
                        add(std::move(x));
                    }
                    // loops: the second end goes into the grown rotation
                    for (int j = i + 1; j <= n + 1; ++j) {
                        Map x = m;
                        x.rot[v].insert(x.rot[v].begin() + i, a);
                        x.rot[v].insert(x.rot[v].begin() + j, b);
                        add(std::move(x));
                    }
                    for (int w = v + 1; w < V; ++w) {
                        int n2 = static_cast<int>(m.rot[w].size());
                        for (int k = 0; k < std::max(n2, 1); ++k) {
                            Map x = m;
                            x.rot[v].insert(x.rot[v].begin() + i, a);
                            x.rot[w].insert(x.rot[w].begin() + k, b);
                            add(std::move(x));
                        }
                    }
                }
            }
        }
    }
    return layers;
}

EmbeddedGraph to_graph(const Map &m, const MapData &d, Surface s) {
    EmbeddedGraph g;
    g.surface = s;
    g.rotation = m.rot;
    g.sign.assign(m.rot.size(), Sign::plus);
    g.label.assign(m.darts(), 0);
    (void)d;
    return g;
}

Corner face_corner(const Map &m, const MapData &d, int f) {
    if (d.walks.empty())
        return {0, -1};
    int y = d.walks[f].front();
    int v = d.vert[y], n = static_cast<int>(m.rot[v].size());
    return {v, (d.pos[y] - 1 + n) % n};
}

std::string describe(const EmbeddedGraph &g) {
    std::string s = write_graph(g);
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

// Faces without marks of length 1 or 2 (distinct edges) break reducedness.
bool reduced(const MapData &d, const std::vector<int> &marks_per_face) {
    for (size_t f = 0; f < d.walks.size(); ++f) {
        if (marks_per_face[f])
            continue;
        const auto &w = d.walks[f];
        if (w.size() == 1)
            return false;
        if (w.size() == 2 && (w[0] >> 1) != (w[1] >> 1))
            return false;
    }
    return true;
}

} // namespace

DiskOracleReport disk_oracle(int max_vertices, int max_edges) {
    if (max_vertices > 6 || max_edges > 9)
        throw CapsTooLarge("disk oracle caps are V <= 6, E <= 9");
    DiskOracleReport r;
    r.max_vertices = max_vertices;
    r.max_edges = max_edges;
    if (max_vertices < 1 || max_edges < 1)
        return r;
    auto layers = grow_maps(max_vertices, max_edges, 0);
    for (int e = 1; e <= max_edges; ++e)
        for (const Map &m : layers[e]) {
            MapData d = map_data(m);
            std::set<std::vector<int>> seen;
            for (int f = 0; f < static_cast<int>(d.walks.size()); ++f) {
                std::vector<int> weight(d.walks.size(), 0);
                weight[f] = 1;
                if (!seen.insert(map_code(m, d, weight)).second)
                    continue;
                ++r.graphs;
                EmbeddedGraph g = to_graph(m, d, Surface::disk);
                g.extras.marks.push_back(face_corner(m, d, f));
                Topology t = analyze(g);
                bool hypothesis = true, any_interior = false;
                int cut1 = 0, cut2 = 0, cut3 = 0;
                for (int v = 0; v < t.V; ++v) {
                    VertexKind k = classify_vertex(g, t, v);
                    int val = static_cast<int>(g.rotation[v].size());
                    if (k == VertexKind::interior) {
                        any_interior = true;
                        hypothesis = hypothesis && val >= 6;
                    }
                    if (k == VertexKind::cut && val <= 3)
                        ++(val == 1 ? cut1 : val == 2 ? cut2 : cut3);
                }
                if (!hypothesis)
                    continue;
                DiskStats s = disk_stats(g);
                DiskStats alt = s;
                alt.a1 += cut1;
                alt.a2 += cut2;
                alt.a3 += cut3;
                ++r.sigma_checked;
                if (s.sigma() < 6)
                    r.counterexamples.push_back("sigma " + std::to_string(s.sigma()) + ": " + describe(g));
                bool differs = (s.sigma() >= 6) != (alt.sigma() >= 6);
                if (!any_interior) {
                    ++r.tau_checked;
                    if (s.tau() < 2)
                        r.counterexamples.push_back("tau " + std::to_string(s.tau()) + ": " + describe(g));
                    differs = differs || (s.tau() >= 2) != (alt.tau() >= 2);
                }
                if (differs)
                    ++r.alternate_disagreements;
            }
        }
    return r;
}

BoundsOracleReport annulus_bounds_oracle(int max_vertices) {
    if (max_vertices > 3)
        throw CapsTooLarge("annulus oracle cap is V <= 3");
    BoundsOracleReport r;
    r.surface = Surface::annulus;
    r.max_vertices = max_vertices;
    if (max_vertices < 1)
        return r;
    auto layers = grow_maps(max_vertices, 3 * max_vertices - 1, 0);
    for (auto &layer : layers)
        for (const Map &m : layer) {
            int V = static_cast<int>(m.rot.size()), E = m.darts() / 2;
            if (E > 3 * V - 1)
                continue;
            MapData d = map_data(m);
            int F = std::max<int>(1, d.walks.size());
            std::set<std::vector<int>> seen;
            for (int f1 = 0; f1 < F; ++f1)
                for (int f2 = f1; f2 < F; ++f2) {
                    std::vector<int> weight(F, 0);
                    ++weight[f1];
                    ++weight[f2];
                    if (!reduced(d, weight) || !seen.insert(map_code(m, d, weight)).second)
                        continue;
                    ++r.maps;
                    int min_val = 1 << 20;
                    for (auto &rot : m.rot)
                        min_val = std::min<int>(min_val, rot.size());
                    if (E > 3 * V - 2 || min_val > 5) {
                        EmbeddedGraph g = to_graph(m, d, Surface::annulus);
                        g.extras.marks = {face_corner(m, d, f1), face_corner(m, d, f2)};
                        r.counterexamples.push_back("E " + std::to_string(E) + " min valency " +
                                                    std::to_string(min_val) + ": " + describe(g));
                    }
                }
        }
    return r;
}

BoundsOracleReport torus_bounds_oracle(int max_vertices) {
    if (max_vertices > 2)
        throw CapsTooLarge("torus oracle cap is V <= 2");
    BoundsOracleReport r;
    r.surface = Surface::torus;
    r.max_vertices = max_vertices;
    if (max_vertices < 1)
        return r;
    auto layers = grow_maps(max_vertices, 3 * max_vertices + 1, 1);
    for (auto &layer : layers)
        for (const Map &m : layer) {
            int V = static_cast<int>(m.rot.size()), E = m.darts() / 2;
            MapData d = map_data(m);
            if (d.genus != 1 || E > 3 * V + 1)
                continue;
            if (!reduced(d, std::vector<int>(d.walks.size(), 0)))
                continue;
            ++r.maps;
            if (E > 3 * V)
                r.counterexamples.push_back("E " + std::to_string(E) + ": " +
                                            describe(to_graph(m, d, Surface::torus)));
        }
    return r;
}

} // namespace fatgraph
