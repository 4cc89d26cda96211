#include "fatgraph/core_maps.hpp"

#include <algorithm>
#include <numeric>

#include "fatgraph/union_find.hpp"

namespace fatgraph {

const char *surface_name(Surface s) {
    switch (s) {
    case Surface::annulus:
        return "annulus";
    case Surface::torus:
        return "torus";
    case Surface::disk:
        return "disk";
    }
    return "?";
}

void check_well_formed(const EmbeddedGraph &g) {
    const int V = g.num_vertices();
    const int D = g.num_darts();
    if (D % 2 != 0)
        throw MalformedGraph("odd number of edge ends");
    if (static_cast<int>(g.sign.size()) != V)
        throw MalformedGraph("sign list does not match vertex count");
    std::vector<int> seen(D, 0);
    for (int v = 0; v < V; ++v)
        for (int d : g.rotation[v]) {
            if (d < 0 || d >= D)
                throw MalformedGraph("edge end out of range at vertex " + std::to_string(v));
            if (seen[d]++)
                throw MalformedGraph("edge end " + std::to_string(d) + " occupies two slots");
        }
    for (int d = 0; d < D; ++d)
        if (!seen[d])
            throw MalformedGraph("edge end " + std::to_string(d) + " has no slot");
    for (int d = 0; d < D; ++d) {
        int l = g.label[d];
        if (g.n_opposite == 0 ? l != 0 : (l < 1 || l > g.n_opposite))
            throw MalformedGraph("label out of range on edge end " + std::to_string(d));
    }
    auto check_corner = [&](const Corner &c) {
        if (c.vertex < 0 || c.vertex >= V)
            throw MalformedGraph("corner on unknown vertex");
        int m = static_cast<int>(g.rotation[c.vertex].size());
        if (m == 0 ? c.pos != -1 : (c.pos < 0 || c.pos >= m))
            throw MalformedGraph("corner position out of range");
    };
    for (auto &c : g.extras.marks)
        check_corner(c);
    for (auto &c : g.extras.handle)
        check_corner(c);
    for (auto &[a, b] : g.extras.joins) {
        check_corner(a);
        check_corner(b);
    }
}

int Topology::corner_face(const Corner &c) const {
    if (c.pos < 0)
        return vertex_face[c.vertex];
    return face[rho[rot[c.vertex][c.pos]]];
}

bool Topology::face_is_disk(int f) const {
    int r = region[f];
    return region_faces[r] == 1 && region_marks[r] == 0 && region_feet[r] == 0;
}

Topology analyze(const EmbeddedGraph &g) { return analyze(g, true); }

Topology analyze(const EmbeddedGraph &g, bool with_extras) {
    if (with_extras)
        check_well_formed(g);
    else {
        EmbeddedGraph bare = g;
        bare.extras = {};
        check_well_formed(bare);
    }
    Topology t;
    t.V = g.num_vertices();
    const int D = g.num_darts();
    t.E = D / 2;
    t.rot = g.rotation;
    t.vert.assign(D, -1);
    t.pos.assign(D, -1);
    t.rho.assign(D, -1);
    t.rho_inv.assign(D, -1);
    for (int v = 0; v < t.V; ++v) {
        const auto &r = g.rotation[v];
        int m = static_cast<int>(r.size());
        for (int k = 0; k < m; ++k) {
            t.vert[r[k]] = v;
            t.pos[r[k]] = k;
            t.rho[r[k]] = r[(k + 1) % m];
            t.rho_inv[r[(k + 1) % m]] = r[k];
        }
    }
    t.face.assign(D, -1);
    for (int d = 0; d < D; ++d) {
        if (t.face[d] >= 0)
            continue;
        FaceWalk w;
        int f = static_cast<int>(t.walks.size());
        for (int y = d; t.face[y] < 0; y = t.rho[mate(y)]) {
            t.face[y] = f;
            w.push_back(y);
        }
        t.walks.push_back(std::move(w));
    }
    t.vertex_face.assign(t.V, -1);
    for (int v = 0; v < t.V; ++v)
        if (g.rotation[v].empty()) {
            t.vertex_face[v] = static_cast<int>(t.walks.size());
            t.walks.emplace_back();
        }
    t.F = static_cast<int>(t.walks.size());

    UnionFind uf(t.V);
    for (int d = 0; d < D; d += 2)
        uf.unite(t.vert[d], t.vert[d + 1]);
    t.comp.assign(t.V, -1);
    std::vector<int> root_id(t.V, -1);
    for (int v = 0; v < t.V; ++v) {
        int r = uf.find(v);
        if (root_id[r] < 0)
            root_id[r] = t.num_components++;
        t.comp[v] = root_id[r];
    }
    std::vector<int> cv(t.num_components, 0), ce(t.num_components, 0), cf(t.num_components, 0);
    for (int v = 0; v < t.V; ++v)
        ++cv[t.comp[v]];
    for (int d = 0; d < D; d += 2)
        ++ce[t.comp[t.vert[d]]];
    t.face_comp.assign(t.F, -1);
    for (int f = 0; f < t.F; ++f) {
        int c = t.walks[f].empty() ? -1 : t.comp[t.vert[t.walks[f][0]]];
        if (c < 0)
            for (int v = 0; v < t.V; ++v)
                if (t.vertex_face[v] == f)
                    c = t.comp[v];
        t.face_comp[f] = c;
        ++cf[c];
    }
    t.comp_genus.assign(t.num_components, 0);
    t.genus = 0;
    for (int c = 0; c < t.num_components; ++c) {
        int chi = cv[c] - ce[c] + cf[c];
        if ((2 - chi) % 2 != 0 || chi > 2)
            throw MalformedGraph("inconsistent Euler characteristic");
        t.comp_genus[c] = (2 - chi) / 2;
        t.genus += t.comp_genus[c];
    }

    static const Extras none;
    const Extras &x = with_extras ? g.extras : none;
    if (with_extras) {
        // surface consistency
        switch (g.surface) {
        case Surface::annulus:
            if (t.genus != 0)
                throw MalformedGraph("annulus graph with nonplanar rotation");
            if (x.marks.size() != 2 || !x.handle.empty())
                throw MalformedGraph("annulus graph needs exactly two marks");
            break;
        case Surface::disk:
            if (t.genus != 0)
                throw MalformedGraph("disk graph with nonplanar rotation");
            if (x.marks.size() != 1 || !x.handle.empty())
                throw MalformedGraph("disk graph needs exactly one mark");
            break;
        case Surface::torus:
            if (t.genus > 1)
                throw MalformedGraph("torus graph with genus above one");
            if (!x.marks.empty())
                throw MalformedGraph("torus graph carries no marks");
            if (t.genus == 0 ? x.handle.size() != 2 : !x.handle.empty())
                throw MalformedGraph("torus handle must be given exactly when the rotation is planar");
            break;
        }
        if (static_cast<int>(x.joins.size()) != t.num_components - 1)
            throw MalformedGraph("joins must connect the components into a tree");
    }

    auto cface = [&](const Corner &c) { return t.corner_face(c); };
    UnionFind cuf(t.num_components);
    UnionFind fuf(t.F);
    for (auto &[a, b] : x.joins) {
        int fa = cface(a), fb = cface(b);
        int ca = t.face_comp[fa], cb = t.face_comp[fb];
        if (ca == cb || cuf.find(ca) == cuf.find(cb))
            throw MalformedGraph("joins must connect the components into a tree");
        cuf.unite(ca, cb);
        fuf.unite(fa, fb);
    }
    std::vector<int> rid(t.F, -1);
    t.region.assign(t.F, -1);
    for (int f = 0; f < t.F; ++f) {
        int r = fuf.find(f);
        if (rid[r] < 0)
            rid[r] = t.num_regions++;
        t.region[f] = rid[r];
    }
    t.region_faces.assign(t.num_regions, 0);
    t.region_marks.assign(t.num_regions, 0);
    t.region_feet.assign(t.num_regions, 0);
    for (int f = 0; f < t.F; ++f)
        ++t.region_faces[t.region[f]];
    for (auto &c : x.marks)
        ++t.region_marks[t.region[cface(c)]];
    for (auto &c : x.handle)
        ++t.region_feet[t.region[cface(c)]];
    if (x.handle.size() == 2)
        t.tube_joins_regions = t.region[cface(x.handle[0])] != t.region[cface(x.handle[1])];
    return t;
}

std::vector<FaceWalk> trace_faces(const EmbeddedGraph &g) { return analyze(g).walks; }

bool is_trivial_loop(const EmbeddedGraph &, const Topology &t, int edge) {
    int a = 2 * edge, b = a + 1;
    if (a >= static_cast<int>(t.vert.size()) || t.vert[a] != t.vert[b])
        throw NotALoop("edge " + std::to_string(edge) + " is not a loop");
    for (int d : {a, b}) {
        int f = t.face[d];
        if (t.walks[f].size() == 1 && t.face_is_disk(f))
            return true;
    }
    return false;
}

bool is_trivial_loop(const EmbeddedGraph &g, int edge) { return is_trivial_loop(g, analyze(g), edge); }

namespace {

// d and rho(d) belong to distinct edges cobounding a disk bigon face
bool bigon_after(const Topology &t, int d) {
    int n = t.rho[d];
    int f = t.face[n];
    if (t.walks[f].size() != 2 || !t.face_is_disk(f))
        return false;
    return edge_of(d) != edge_of(n);
}

} // namespace

std::vector<ParallelClass> parallel_classes(const EmbeddedGraph &, const Topology &t) {
    std::vector<ParallelClass> out;
    std::vector<char> done(t.E, 0);
    for (int e = 0; e < t.E; ++e) {
        if (done[e])
            continue;
        int start = 2 * e;
        // a fan may be entered from either end of e; pick the side that has a
        // bigon next to it, falling back to 2e
        int a = start;
        bool cyclic = false;
        if (!bigon_after(t, a) && !bigon_after(t, t.rho_inv[a])) {
            int b = start + 1;
            if (bigon_after(t, b) || bigon_after(t, t.rho_inv[b]))
                a = b;
        }
        int first = a;
        while (bigon_after(t, t.rho_inv[a])) {
            a = t.rho_inv[a];
            if (a == first) {
                cyclic = true;
                break;
            }
        }
        ParallelClass pc;
        pc.cyclic = cyclic;
        int x = a;
        while (true) {
            pc.edges.push_back(edge_of(x));
            pc.side_a.push_back(x);
            done[edge_of(x)] = 1;
            if (!bigon_after(t, x))
                break;
            x = t.rho[x];
            if (x == a)
                break;
        }
        out.push_back(std::move(pc));
    }
    return out;
}

std::vector<ParallelClass> parallel_classes(const EmbeddedGraph &g) { return parallel_classes(g, analyze(g)); }

ReducedGraph reduce(const EmbeddedGraph &g) {
    Topology t = analyze(g);
    auto classes = parallel_classes(g, t);
    std::sort(classes.begin(), classes.end(), [](const ParallelClass &a, const ParallelClass &b) {
        return *std::min_element(a.edges.begin(), a.edges.end()) < *std::min_element(b.edges.begin(), b.edges.end());
    });
    ReducedGraph r;
    r.class_of_edge.assign(t.E, -1);
    std::vector<int> keep_as(t.E, -1);
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
        for (int e : classes[c].edges)
            r.class_of_edge[e] = c;
        keep_as[classes[c].edges.front()] = c;
        r.multiplicity.push_back(classes[c].size());
    }
    EmbeddedGraph &h = r.graph;
    h.surface = g.surface;
    h.n_opposite = g.n_opposite;
    h.sign = g.sign;
    h.rotation.assign(g.num_vertices(), {});
    h.label.assign(2 * classes.size(), 0);
    std::vector<int> new_dart(g.num_darts(), -1);
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int d : g.rotation[v]) {
            int c = keep_as[edge_of(d)];
            if (c < 0)
                continue;
            int nd = 2 * c + (d & 1);
            new_dart[d] = nd;
            h.label[nd] = g.label[d];
            h.rotation[v].push_back(nd);
        }
    auto remap = [&](Corner c) {
        if (c.pos < 0)
            return c;
        int d = g.rotation[c.vertex][c.pos];
        while (new_dart[d] < 0)
            d = t.rho_inv[d];
        const auto &rot = h.rotation[c.vertex];
        c.pos = static_cast<int>(std::find(rot.begin(), rot.end(), new_dart[d]) - rot.begin());
        return c;
    };
    for (auto c : g.extras.marks)
        h.extras.marks.push_back(remap(c));
    for (auto c : g.extras.handle)
        h.extras.handle.push_back(remap(c));
    for (auto &[a, b] : g.extras.joins)
        h.extras.joins.emplace_back(remap(a), remap(b));
    return r;
}

namespace {

void glue_regions(const EmbeddedGraph &g, const Topology &t, UnionFind &uf) {
    auto cface = [&](const Corner &c) { return t.corner_face(c); };
    for (auto &[a, b] : g.extras.joins)
        uf.unite(cface(a), cface(b));
    if (g.extras.handle.size() == 2)
        uf.unite(cface(g.extras.handle[0]), cface(g.extras.handle[1]));
}

} // namespace

// Faces reachable from each other without crossing the edges in `cut`.
UnionFind sides_without(const EmbeddedGraph &g, const Topology &t, const std::vector<char> &on_cut) {
    UnionFind uf(t.F);
    glue_regions(g, t, uf);
    for (int v = 0; v < t.V; ++v) {
        const auto &rot = g.rotation[v];
        int m = static_cast<int>(rot.size());
        if (m == 0)
            continue;
        // corners between consecutive darts, split at darts on the cut
        int first_cut = -1;
        for (int k = 0; k < m; ++k)
            if (on_cut[edge_of(rot[k])]) {
                first_cut = k;
                break;
            }
        if (first_cut < 0) {
            for (int k = 1; k < m; ++k)
                uf.unite(t.corner_face_of_dart(rot[0]), t.corner_face_of_dart(rot[k]));
            continue;
        }
        int anchor = t.corner_face_of_dart(rot[first_cut]);
        for (int s = 1; s <= m; ++s) {
            int k = (first_cut + s) % m;
            if (on_cut[edge_of(rot[k])]) {
                anchor = t.corner_face_of_dart(rot[k]);
                continue;
            }
            uf.unite(anchor, t.corner_face_of_dart(rot[k]));
        }
    }
    return uf;
}

namespace {

void check_cycle(const Topology &t, const std::vector<int> &cycle) {
    if (cycle.empty())
        throw NotACycle("empty cycle");
    std::vector<char> seen_v(t.V, 0);
    std::vector<char> seen_e(t.E, 0);
    for (size_t i = 0; i < cycle.size(); ++i) {
        int d = cycle[i];
        if (d < 0 || d >= 2 * t.E)
            throw NotACycle("edge end out of range");
        int nxt = cycle[(i + 1) % cycle.size()];
        if (t.vert[mate(d)] != t.vert[nxt])
            throw NotACycle("walk is not closed");
        if (seen_v[t.vert[d]]++)
            throw NotACycle("walk repeats a vertex");
        if (seen_e[edge_of(d)]++)
            throw NotACycle("walk repeats an edge");
    }
}

} // namespace

bool is_essential_cycle(const EmbeddedGraph &g, const Topology &t, const std::vector<int> &cycle) {
    check_cycle(t, cycle);
    if (g.surface == Surface::disk)
        return false;
    std::vector<char> on_cut(t.E, 0);
    for (int d : cycle)
        on_cut[edge_of(d)] = 1;
    UnionFind uf = sides_without(g, t, on_cut);
    int d0 = cycle.front();
    int left = uf.find(t.face[d0]);
    int right = uf.find(t.corner_face_of_dart(d0));
    if (left == right)
        return true; // nonseparating; only possible through the tube
    if (g.surface == Surface::torus)
        return false;
    bool mark_left = false, mark_right = false;
    for (auto &c : g.extras.marks) {
        int s = uf.find(t.corner_face(c));
        mark_left |= s == left;
        mark_right |= s == right;
    }
    return mark_left && mark_right;
}

bool is_essential_cycle(const EmbeddedGraph &g, const std::vector<int> &cycle) {
    return is_essential_cycle(g, analyze(g), cycle);
}

std::vector<int> cycle_from_edges(const EmbeddedGraph &g, const std::vector<int> &edges) {
    return cycle_from_edges(g, analyze(g), edges);
}

std::vector<int> cycle_from_edges(const EmbeddedGraph &, const Topology &t, const std::vector<int> &edges) {
    if (edges.empty())
        return {};
    std::vector<int> cyc;
    std::vector<char> used(edges.size(), 0);
    int d = 2 * edges[0];
    cyc.push_back(d);
    used[0] = 1;
    int start_v = t.vert[d];
    while (t.vert[mate(d)] != start_v) {
        int at = t.vert[mate(d)];
        bool found = false;
        for (size_t i = 0; i < edges.size() && !found; ++i) {
            if (used[i])
                continue;
            for (int c : {2 * edges[i], 2 * edges[i] + 1})
                if (t.vert[c] == at) {
                    d = c;
                    used[i] = 1;
                    cyc.push_back(d);
                    found = true;
                    break;
                }
        }
        if (!found)
            return {};
    }
    if (cyc.size() != edges.size())
        return {};
    try {
        check_cycle(t, cyc);
    } catch (const NotACycle &) {
        return {};
    }
    return cyc;
}

bool is_essential_edge_set(const EmbeddedGraph &g, const Topology &t, const std::vector<int> &edges) {
    // H lies in a disk iff every cycle of H is inessential; fundamental
    // cycles of a spanning forest generate them all.
    UnionFind uf(t.V);
    std::vector<std::vector<std::pair<int, int>>> tree(t.V); // (neighbor, dart toward it)
    std::vector<int> extra;
    for (int e : edges) {
        int a = t.vert[2 * e], b = t.vert[2 * e + 1];
        if (uf.find(a) == uf.find(b)) {
            extra.push_back(e);
            continue;
        }
        uf.unite(a, b);
        tree[a].push_back({b, 2 * e});
        tree[b].push_back({a, 2 * e + 1});
    }
    for (int e : extra) {
        int a = t.vert[2 * e], b = t.vert[2 * e + 1];
        std::vector<int> cyc{2 * e};
        if (a != b) {
            // tree path from b back to a
            std::vector<int> parent_dart(t.V, -2);
            std::vector<int> stack{a};
            parent_dart[a] = -1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (auto [y, d] : tree[x])
                    if (parent_dart[y] == -2) {
                        parent_dart[y] = d;
                        stack.push_back(y);
                    }
            }
            std::vector<int> path;
            for (int x = b; x != a; x = t.vert[parent_dart[x]])
                path.push_back(mate(parent_dart[x]));
            cyc.insert(cyc.end(), path.begin(), path.end());
        }
        if (is_essential_cycle(g, t, cyc))
            return true;
    }
    return false;
}

BoundsReport check_reduced_bounds(const EmbeddedGraph &h) {
    Topology t = analyze(h);
    BoundsReport r;
    r.vertices = t.V;
    r.edges = t.E;
    std::vector<int> val(t.V, 0);
    for (int d = 0; d < 2 * t.E; ++d)
        ++val[t.vert[d]];
    r.min_valency = t.V ? *std::min_element(val.begin(), val.end()) : 0;
    if (h.surface == Surface::annulus) {
        r.bound = 3 * t.V - 2;
        r.min_valency_ok = t.V == 0 || r.min_valency <= 5;
    } else if (h.surface == Surface::torus) {
        r.bound = 3 * t.V;
    } else {
        r.bound = 3 * t.V - 2; // a disk graph is also an annulus graph
    }
    r.edge_bound_ok = t.E <= r.bound;
    return r;
}

BoundsReport check_reduced_bounds(const ReducedGraph &r) { return check_reduced_bounds(r.graph); }

} // namespace fatgraph
