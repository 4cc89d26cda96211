#include "fatgraph/lemmas.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fatgraph/labels.hpp"

namespace fatgraph {

namespace {

using P = Provenance;

const std::vector<Constraint> registry = {
    {"well-formed", P::structural, "rotations, darts, labels and extras are consistent"},
    {"surface", P::structural, "first graph on the annulus, second on the torus"},
    {"delta-range", P::structural, "intersection number between 1 and 5"},
    {"jump-range", P::structural, "jumping number coprime to delta and at most delta/2"},
    {"sense", P::structural, "jump sense is +1 or -1"},
    {"label-range", P::structural, "labels run over the opposite vertex set"},
    {"edge-count", P::structural, "each graph has delta*n1*n2/2 edges"},
    {"valency", P::structural, "vertex valency is delta times the opposite vertex count"},
    {"point-rows", P::structural, "point rows address every slot of both graphs once"},
    {"label-duality", P::structural, "a point on u_i and v_j is labeled j on u_i and i on v_j"},
    {"label-cyclic", P::structural, "labels run cyclically around each vertex in its own direction"},
    {"delta-regular", P::structural, "each pair u_i, v_j shares exactly delta points"},
    {"endpoint-match", P::structural, "the two graphs share the same edges"},
    {"trivial-loop", P::structural, "no loop bounds an empty disk face"},
    {"parity", P::structural, "an edge is positive in one graph iff negative in the other"},
    {"jumping-order", P::structural, "points of u_i and v_j interleave by the jumping number"},
    {"distance-transfer", P::combinatorial, "distances between points transfer between the graphs"},
    {"equidistance-transfer", P::combinatorial, "equidistant pairs are equidistant in both graphs"},
    {"parallel-in-both", P::topological_axiom, "no pair of edges is parallel in both graphs"},
    {"essential-family-cycles", P::topological_axiom,
     "n_beta consecutive parallel negative edges form disjoint essential cycles of equal length"},
    {"scharlemann-separating", P::combinatorial,
     "a Scharlemann cycle forces n_beta even and parity-alternating signs on the other graph"},
    {"scharlemann-essential", P::combinatorial, "Scharlemann edges form an essential subgraph of the other graph"},
    {"extended-scharlemann", P::topological_axiom, "no extended Scharlemann cycle when n_beta > 2"},
    {"long-annulus-family", P::topological_axiom,
     "an annulus family longer than n2 > 2 needs parallel torus vertices and a transitive permutation"},
    {"scharlemann-pair-parity", P::combinatorial,
     "disjoint Scharlemann label pairs on the annulus graph start at labels of equal parity"},
    {"annulus-positive-family-cap", P::combinatorial,
     "annulus positive families have at most n2/2 + 2 edges, the bound only when 4 divides n2"},
    {"repeated-label-scharlemann", P::combinatorial,
     "a label repeated in a positive family lies on a Scharlemann bigon of that family"},
    {"torus-scharlemann-pairs", P::topological_axiom, "all torus Scharlemann cycles share one label pair"},
    {"torus-positive-family-cap", P::combinatorial,
     "torus positive families have at most n1/2 + 1 edges, with a Scharlemann bigon at the bound"},
    {"torus-family-cap", P::combinatorial, "torus families have at most n1 edges"},
    {"torus-label-triple", P::combinatorial, "no three parallel torus edges carry a common label"},
    {"positive-cycle-scharlemann", P::combinatorial,
     "a positive i-edge cycle around an empty disk encloses a Scharlemann cycle"},
    {"reduced-bounds", P::combinatorial,
     "reduced annulus graph: E <= 3V - 2 and a vertex of valency <= 5; reduced torus graph: E <= 3V"},
    {"one-separable", P::topological_axiom, "a 1-separable annulus graph has a single vertex"},
    {"two-separable", P::topological_axiom, "a 2-separable annulus graph forces n1 = n2 = 2"},
    {"four-scharlemann-pairs", P::topological_axiom,
     "with n1 >= 3 and n2 = 4 the annulus graph lacks length-2 Scharlemann cycles on four distinct pairs"},
};

std::string edge_list(const std::vector<int> &edges) {
    std::string s;
    for (size_t i = 0; i < edges.size(); ++i)
        s += (i ? "," : "") + std::to_string(edges[i]);
    return s;
}

bool positive_edge(const EmbeddedGraph &g, const Topology &t, int e) {
    return g.sign[t.vert[2 * e]] == g.sign[t.vert[2 * e + 1]];
}

// {a, b} as a consecutive label pair {low, low+1 mod n}; 0 if it is not one.
int pair_low(int a, int b, int n) {
    if (a == b)
        return 0;
    bool ab = b == a % n + 1, ba = a == b % n + 1;
    if (ab && ba)
        return std::min(a, b);
    return ab ? a : ba ? b : 0;
}

// Everything the graph lemma checks read about one graph.
struct Side {
    const EmbeddedGraph &g;
    Topology t;
    std::vector<ParallelClass> classes;
    std::vector<int> class_of;
    std::vector<ScharlemannCycle> sch;
    std::map<int, int> sch_of_face;
    const char *name;

    Side(const EmbeddedGraph &graph, const char *n) : g(graph), t(analyze(graph)), name(n) {
        classes = parallel_classes(g, t);
        class_of.assign(t.E, -1);
        for (int c = 0; c < static_cast<int>(classes.size()); ++c)
            for (int e : classes[c].edges)
                class_of[e] = c;
        sch = find_scharlemann_cycles(g, t);
        for (int i = 0; i < static_cast<int>(sch.size()); ++i)
            sch_of_face[sch[i].face] = i;
    }

    // Scharlemann bigon between consecutive edges k, k+1 of class c
    const ScharlemannCycle *bigon(int c, int k) const {
        const auto &pc = classes[c];
        int f = t.corner_face_of_dart(pc.side_a[k]);
        auto it = sch_of_face.find(f);
        return it == sch_of_face.end() ? nullptr : &sch[it->second];
    }

    int bigon_count(int c) const {
        int s = classes[c].size();
        return classes[c].cyclic ? s : s - 1;
    }

    std::string tag(int c) const {
        return std::string(name) + " family {" + edge_list(classes[c].edges) + "}";
    }
};

} // namespace

const std::vector<Constraint> &constraint_registry() { return registry; }

const Constraint &find_constraint(std::string_view id) {
    for (auto &c : registry)
        if (c.id == id)
            return c;
    throw UnknownConstraint("unknown constraint '" + std::string(id) + "'");
}

bool active_in(const Constraint &c, Profile p) {
    return p == Profile::full || c.provenance != Provenance::topological_axiom;
}

const char *profile_name(Profile p) { return p == Profile::full ? "full" : "combinatorial"; }

Profile parse_profile(std::string_view s) {
    if (s == "full")
        return Profile::full;
    if (s == "combinatorial")
        return Profile::combinatorial;
    throw std::invalid_argument("profile must be 'full' or 'combinatorial'");
}

const char *provenance_name(Provenance p) {
    switch (p) {
    case Provenance::structural:
        return "structural";
    case Provenance::combinatorial:
        return "combinatorial";
    case Provenance::topological_axiom:
        return "topological-axiom";
    }
    return "?";
}

std::vector<ScharlemannCycle> find_scharlemann_cycles(const EmbeddedGraph &g, const Topology &t) {
    std::vector<ScharlemannCycle> out;
    const int n = g.n_opposite;
    if (n < 2)
        return out;
    for (int f = 0; f < t.F; ++f) {
        const auto &w = t.walks[f];
        if (w.size() < 2 || !t.face_is_disk(f))
            continue;
        ScharlemannCycle sc;
        sc.face = f;
        sc.darts = w;
        bool ok = true;
        std::set<int> seen;
        for (int d : w) {
            int e = edge_of(d);
            if (!seen.insert(e).second || !positive_edge(g, t, e)) {
                ok = false;
                break;
            }
            int low = pair_low(g.label[d], g.label[mate(d)], n);
            if (low == 0 || (sc.low != 0 && low != sc.low)) {
                ok = false;
                break;
            }
            sc.low = low;
            sc.edges.push_back(e);
        }
        if (!ok)
            continue;
        sc.high = sc.low % n + 1;
        out.push_back(std::move(sc));
    }
    return out;
}

std::vector<ScharlemannCycle> find_scharlemann_cycles(const EmbeddedGraph &g) {
    return find_scharlemann_cycles(g, analyze(g));
}

std::vector<ExtendedScharlemann> find_extended_scharlemann(const EmbeddedGraph &g, const Topology &t) {
    std::vector<ExtendedScharlemann> out;
    auto sch = find_scharlemann_cycles(g, t);
    std::map<int, int> by_face;
    for (int i = 0; i < static_cast<int>(sch.size()); ++i)
        by_face[sch[i].face] = i;
    for (auto &pc : parallel_classes(g, t)) {
        const int s = pc.size();
        if (s < 4)
            continue;
        for (int k = 0; k < s; ++k) {
            if (!pc.cyclic && (k < 1 || k + 2 >= s))
                continue;
            auto it = by_face.find(t.corner_face_of_dart(pc.side_a[k]));
            if (it == by_face.end())
                continue;
            ExtendedScharlemann x;
            x.outer_first = pc.edges[(k - 1 + s) % s];
            x.outer_second = pc.edges[(k + 2) % s];
            x.inner = sch[it->second];
            out.push_back(std::move(x));
        }
    }
    return out;
}

std::vector<ExtendedScharlemann> find_extended_scharlemann(const EmbeddedGraph &g) {
    return find_extended_scharlemann(g, analyze(g));
}

std::vector<std::vector<int>> essential_cut_sides(const EmbeddedGraph &g, const Topology &t) {
    // Regions and components form a tree (a component touches a region
    // through at most one face). A circle in region r cuts the tree at r.
    const int R = t.num_regions, C = t.num_components;
    std::vector<std::vector<int>> comps_of_region(R), regions_of_comp(C);
    for (int f = 0; f < t.F; ++f) {
        int r = t.region[f], c = t.face_comp[f];
        if (std::find(comps_of_region[r].begin(), comps_of_region[r].end(), c) == comps_of_region[r].end()) {
            comps_of_region[r].push_back(c);
            regions_of_comp[c].push_back(r);
        }
    }
    std::vector<int> mark_region;
    for (auto &m : g.extras.marks)
        mark_region.push_back(t.region[t.corner_face(m)]);
    std::set<std::vector<int>> sides;
    std::vector<int> all(t.V);
    for (int v = 0; v < t.V; ++v)
        all[v] = v;
    sides.insert({});
    sides.insert(all);
    if (mark_region.size() != 2)
        return {sides.begin(), sides.end()};

    // components beyond c as seen from region r, and whether a mark is there
    auto beyond = [&](int r0, int c0, std::vector<char> &comp_in, int &marks_seen) {
        std::vector<std::pair<int, int>> stack{{c0, r0}}; // (component, region it was entered from)
        while (!stack.empty()) {
            auto [c, from] = stack.back();
            stack.pop_back();
            comp_in[c] = 1;
            for (int r : regions_of_comp[c]) {
                if (r == from)
                    continue;
                for (int k = 0; k < 2; ++k)
                    if (mark_region[k] == r)
                        marks_seen |= 1 << k;
                for (int c2 : comps_of_region[r])
                    if (c2 != c)
                        stack.push_back({c2, r});
            }
        }
    };

    for (int r = 0; r < R; ++r) {
        // items: holes toward adjacent components, plus marks inside r
        const auto &holes = comps_of_region[r];
        const int h = static_cast<int>(holes.size());
        std::vector<std::vector<char>> hole_comps(h, std::vector<char>(C, 0));
        std::vector<int> hole_marks(h, 0);
        for (int i = 0; i < h; ++i)
            beyond(r, holes[i], hole_comps[i], hole_marks[i]);
        int here = 0;
        for (int k = 0; k < 2; ++k)
            if (mark_region[k] == r)
                here |= 1 << k;
        // every subset of holes goes to the first mark's side, with the
        // marks inside r placed freely
        for (int mask = 0; mask < (1 << h); ++mask)
            for (int inner = 0; inner < 4; ++inner) {
                if ((inner & ~here) != 0)
                    continue;
                int side1 = inner, side2 = here & ~inner;
                for (int i = 0; i < h; ++i)
                    (mask >> i & 1 ? side1 : side2) |= hole_marks[i];
                if (side1 != 1 || side2 != 2)
                    continue;
                std::vector<int> vs;
                for (int v = 0; v < t.V; ++v)
                    for (int i = 0; i < h; ++i)
                        if ((mask >> i & 1) && hole_comps[i][t.comp[v]]) {
                            vs.push_back(v);
                            break;
                        }
                sides.insert(vs);
            }
    }
    return {sides.begin(), sides.end()};
}

bool is_k_separable(const EmbeddedGraph &g, const Topology &t, int k) {
    auto sides = essential_cut_sides(g, t);
    for (auto &a : sides)
        for (auto &b : sides)
            if (static_cast<int>(b.size() - a.size()) == k && std::includes(b.begin(), b.end(), a.begin(), a.end()))
                return true;
    return false;
}

bool is_k_separable(const EmbeddedGraph &g, int k) { return is_k_separable(g, analyze(g), k); }

namespace {

void check_scharlemann_side(const Side &a, const Side &b, const PairIndex &ix, bool a_is_annulus, Profile profile,
                            PairReport &out) {
    const int nb = b.g.num_vertices();
    auto partner = [&](int e) { return a_is_annulus ? ix.edge2_of_edge1[e] : ix.edge1_of_edge2[e]; };
    if (!a.sch.empty()) {
        bool alternating = nb % 2 == 0;
        for (int v = 0; v < nb && alternating; ++v)
            alternating = (b.g.sign[v] == b.g.sign[0]) == (v % 2 == 0);
        if (!alternating)
            out.push_back({"scharlemann-separating", std::string(a.name) + " Scharlemann cycle on edges {" +
                                                         edge_list(a.sch.front().edges) + "}"});
    }
    for (auto &sc : a.sch) {
        std::vector<int> edges;
        for (int e : sc.edges)
            edges.push_back(partner(e));
        if (!is_essential_edge_set(b.g, b.t, edges))
            out.push_back({"scharlemann-essential", std::string(a.name) + " Scharlemann cycle on edges {" +
                                                        edge_list(sc.edges) + "} is inessential on the " + b.name});
    }
    if (profile == Profile::full && nb > 2)
        for (auto &x : find_extended_scharlemann(a.g, a.t))
            out.push_back({"extended-scharlemann", std::string(a.name) + " edges " + std::to_string(x.outer_first) +
                                                       "," + edge_list(x.inner.edges) + "," +
                                                       std::to_string(x.outer_second)});
}

void check_negative_family_cycles(const Side &a, const Side &b, const PairIndex &ix, bool a_is_annulus,
                                  PairReport &out) {
    const int nb = b.g.num_vertices();
    auto partner = [&](int e) { return a_is_annulus ? ix.edge2_of_edge1[e] : ix.edge1_of_edge2[e]; };
    for (int c = 0; c < static_cast<int>(a.classes.size()); ++c) {
        const auto &pc = a.classes[c];
        const int s = pc.size();
        if (s < nb || positive_edge(a.g, a.t, pc.edges[0]))
            continue;
        int windows = pc.cyclic ? s : s - nb + 1;
        for (int w = 0; w < windows; ++w) {
            std::vector<int> edges;
            for (int k = 0; k < nb; ++k)
                edges.push_back(partner(pc.edges[(w + k) % s]));
            UnionFind uf(nb);
            for (int f : edges)
                uf.unite(b.t.vert[2 * f], b.t.vert[2 * f + 1]);
            std::map<int, std::vector<int>> parts;
            for (int f : edges)
                parts[uf.find(b.t.vert[2 * f])].push_back(f);
            std::string why;
            int length = -1;
            for (auto &[root, part] : parts) {
                auto cyc = cycle_from_edges(b.g, b.t, part);
                if (cyc.empty()) {
                    why = "edges do not split into cycles";
                    break;
                }
                if (length >= 0 && static_cast<int>(cyc.size()) != length) {
                    why = "cycles of unequal length";
                    break;
                }
                length = static_cast<int>(cyc.size());
                if (!is_essential_cycle(b.g, b.t, cyc)) {
                    why = "cycle {" + edge_list(part) + "} is inessential";
                    break;
                }
            }
            if (!why.empty()) {
                out.push_back({"essential-family-cycles", a.tag(c) + ": " + why});
                break;
            }
        }
    }
}

// A label repeated in a positive family must sit on a Scharlemann bigon of
// that family.
void check_repeated_labels(const Side &a, PairReport &out) {
    for (int c = 0; c < static_cast<int>(a.classes.size()); ++c) {
        const auto &pc = a.classes[c];
        if (!positive_edge(a.g, a.t, pc.edges[0]))
            continue;
        std::map<int, int> count;
        for (int e : pc.edges) {
            ++count[a.g.label[2 * e]];
            ++count[a.g.label[2 * e + 1]];
        }
        for (auto [label, k] : count) {
            if (k < 2)
                continue;
            bool found = false;
            for (int j = 0; j < a.bigon_count(c) && !found; ++j)
                if (auto *sc = a.bigon(c, j))
                    found = sc->low == label || sc->high == label;
            if (!found) {
                out.push_back({"repeated-label-scharlemann", a.tag(c) + " repeats label " + std::to_string(label)});
                break;
            }
        }
    }
}

void check_positive_cycles(const Side &a, PairReport &out) {
    const EmbeddedGraph &g = a.g;
    const Topology &t = a.t;
    for (int i = 1; i <= g.n_opposite; ++i) {
        std::vector<char> cut(t.E, 0);
        bool any = false;
        for (int e = 0; e < t.E; ++e)
            if (positive_edge(g, t, e) && (g.label[2 * e] == i || g.label[2 * e + 1] == i))
                cut[e] = 1, any = true;
        if (!any)
            continue;
        UnionFind uf = sides_without(g, t, cut);
        auto next_cut = [&](int d) {
            int x = t.rho[d];
            while (!cut[edge_of(x)])
                x = t.rho[x];
            return x;
        };
        // boundary walks of the subgraph, grouped by the piece they bound
        std::map<int, std::vector<std::vector<int>>> walks_of;
        std::vector<char> seen(2 * t.E, 0);
        for (int d = 0; d < 2 * t.E; ++d) {
            if (!cut[edge_of(d)] || seen[d])
                continue;
            std::vector<int> w;
            for (int y = d; !seen[y]; y = next_cut(mate(y))) {
                seen[y] = 1;
                w.push_back(y);
            }
            walks_of[uf.find(t.face[t.rho[mate(d)]])].push_back(std::move(w));
        }
        std::set<int> blocked; // pieces holding marks, feet or free vertices
        for (auto &c : g.extras.marks)
            blocked.insert(uf.find(t.corner_face(c)));
        for (auto &c : g.extras.handle)
            blocked.insert(uf.find(t.corner_face(c)));
        for (int v = 0; v < t.V; ++v) {
            bool on_cut = false;
            for (int d : g.rotation[v])
                on_cut |= cut[edge_of(d)] != 0;
            if (!on_cut)
                blocked.insert(uf.find(g.rotation[v].empty() ? t.vertex_face[v] : t.face[g.rotation[v][0]]));
        }
        std::map<int, int> faces_in, edges_in;
        std::set<int> nondisk;
        for (int f = 0; f < t.F; ++f) {
            ++faces_in[uf.find(f)];
            if (!t.face_is_disk(f))
                nondisk.insert(uf.find(f));
        }
        for (int e = 0; e < t.E; ++e)
            if (!cut[e])
                ++edges_in[uf.find(t.face[2 * e])];
        for (auto &[piece, ws] : walks_of) {
            if (ws.size() != 1 || blocked.count(piece) || nondisk.count(piece))
                continue;
            if (faces_in[piece] - edges_in[piece] != 1)
                continue;
            const auto &w = ws.front();
            std::set<int> verts;
            bool tails = true, heads = true;
            for (int y : w) {
                verts.insert(t.vert[y]);
                tails &= g.label[y] == i;
                heads &= g.label[mate(y)] == i;
            }
            if (verts.size() != w.size() || !(tails || heads))
                continue;
            bool inside = false;
            for (auto &sc : a.sch)
                inside |= uf.find(sc.face) == piece;
            if (!inside) {
                std::vector<int> edges;
                for (int y : w)
                    edges.push_back(edge_of(y));
                out.push_back({"positive-cycle-scharlemann", std::string(a.name) + " " + std::to_string(i) +
                                                                 "-edge cycle {" + edge_list(edges) + "}"});
            }
        }
    }
}

} // namespace

PairReport check_graph_lemmas(const GraphPair &p, Profile profile) {
    PairReport out;
    const bool full = profile == Profile::full;
    PairIndex ix = index_pair(p);
    Side s1(p.g1, "annulus"), s2(p.g2, "torus");
    const int n1 = p.n1(), n2 = p.n2();

    if (full) {
        std::map<std::pair<int, int>, int> first;
        std::set<std::pair<int, int>> reported;
        for (int e = 0; e < s1.t.E; ++e) {
            std::pair<int, int> key{s1.class_of[e], s2.class_of[ix.edge2_of_edge1[e]]};
            auto [it, fresh] = first.emplace(key, e);
            if (!fresh && reported.insert(key).second)
                out.push_back({"parallel-in-both", "edges " + std::to_string(it->second) + "," + std::to_string(e)});
        }
        check_negative_family_cycles(s1, s2, ix, true, out);
        check_negative_family_cycles(s2, s1, ix, false, out);
    }
    check_scharlemann_side(s1, s2, ix, true, profile, out);
    check_scharlemann_side(s2, s1, ix, false, profile, out);

    // annulus families
    for (int c = 0; c < static_cast<int>(s1.classes.size()); ++c) {
        const auto &pc = s1.classes[c];
        const int s = pc.size();
        bool pos = positive_edge(p.g1, s1.t, pc.edges[0]);
        if (full && n2 > 2 && s > n2) {
            bool all_parallel = std::all_of(p.g2.sign.begin(), p.g2.sign.end(),
                                            [&](Sign x) { return x == p.g2.sign[0]; });
            bool transitive = false;
            if (!pos) {
                auto phi = family_permutation(p.g1, s1.t, pc);
                transitive = phi.total() && phi.orbits.size() == 1;
            }
            if (pos || !all_parallel || !transitive)
                out.push_back({"long-annulus-family", s1.tag(c)});
        }
        if (pos && n2 > 2 && (2 * s > n2 + 4 || (2 * s == n2 + 4 && n2 % 4 != 0)))
            out.push_back({"annulus-positive-family-cap", s1.tag(c) + " has " + std::to_string(s) + " edges"});
    }
    for (size_t a = 0; a < s1.sch.size(); ++a)
        for (size_t b = a + 1; b < s1.sch.size(); ++b) {
            const auto &x = s1.sch[a], &y = s1.sch[b];
            bool disjoint = x.low != y.low && x.low != y.high && x.high != y.low && x.high != y.high;
            if (disjoint && (x.low - y.low) % 2 != 0)
                out.push_back({"scharlemann-pair-parity", "pairs {" + std::to_string(x.low) + "," +
                                                              std::to_string(x.high) + "} and {" +
                                                              std::to_string(y.low) + "," + std::to_string(y.high) +
                                                              "}"});
        }
    check_repeated_labels(s1, out);
    check_repeated_labels(s2, out);

    // torus families
    if (full)
        for (size_t a = 1; a < s2.sch.size(); ++a)
            if (s2.sch[a].low != s2.sch[0].low) {
                out.push_back({"torus-scharlemann-pairs", "pairs starting at " + std::to_string(s2.sch[0].low) +
                                                              " and " + std::to_string(s2.sch[a].low)});
                break;
            }
    for (int c = 0; c < static_cast<int>(s2.classes.size()); ++c) {
        const auto &pc = s2.classes[c];
        const int s = pc.size();
        if (positive_edge(p.g2, s2.t, pc.edges[0])) {
            bool over = 2 * s > n1 + 2;
            if (2 * s == n1 + 2) {
                bool has = false;
                for (int j = 0; j < s2.bigon_count(c) && !has; ++j)
                    has = s2.bigon(c, j) != nullptr;
                over = !has;
            }
            if (over)
                out.push_back({"torus-positive-family-cap", s2.tag(c) + " has " + std::to_string(s) + " edges"});
        }
        if (s > n1)
            out.push_back({"torus-family-cap", s2.tag(c) + " has " + std::to_string(s) + " edges"});
        std::map<int, int> count;
        for (int e : pc.edges) {
            int a = p.g2.label[2 * e], b = p.g2.label[2 * e + 1];
            ++count[a];
            if (b != a)
                ++count[b];
        }
        for (auto [label, k] : count)
            if (k >= 3) {
                out.push_back({"torus-label-triple", s2.tag(c) + " has " + std::to_string(k) + " edges labeled " +
                                                         std::to_string(label)});
                break;
            }
    }

    check_positive_cycles(s1, out);
    check_positive_cycles(s2, out);

    auto r1 = check_reduced_bounds(reduce(p.g1));
    if (!r1.ok())
        out.push_back({"reduced-bounds", "annulus reduced graph: V=" + std::to_string(r1.vertices) +
                                             " E=" + std::to_string(r1.edges) +
                                             " min valency=" + std::to_string(r1.min_valency)});
    auto r2 = check_reduced_bounds(reduce(p.g2));
    if (!r2.ok())
        out.push_back({"reduced-bounds", "torus reduced graph: V=" + std::to_string(r2.vertices) +
                                             " E=" + std::to_string(r2.edges)});
    return out;
}

PairReport check_topological_axioms(const GraphPair &p, Profile profile) {
    PairReport out;
    if (profile != Profile::full || p.delta < 4)
        return out;
    const int n1 = p.n1(), n2 = p.n2();
    Topology t1 = analyze(p.g1);
    auto sides = essential_cut_sides(p.g1, t1);
    auto separable = [&](int k) {
        for (auto &a : sides)
            for (auto &b : sides)
                if (static_cast<int>(b.size() - a.size()) == k &&
                    std::includes(b.begin(), b.end(), a.begin(), a.end()))
                    return true;
        return false;
    };
    if (n1 != 1 && separable(1))
        out.push_back({"one-separable", "annulus graph with " + std::to_string(n1) + " vertices"});
    if (n1 >= 2 && n2 >= 2 && !(n1 == 2 && n2 == 2) && separable(2))
        out.push_back({"two-separable", "n1=" + std::to_string(n1) + " n2=" + std::to_string(n2)});
    if (n1 >= 3 && n2 == 4) {
        std::set<int> lows;
        for (auto &sc : find_scharlemann_cycles(p.g1, t1))
            if (sc.length() == 2)
                lows.insert(sc.low);
        if (lows.size() == 4)
            out.push_back({"four-scharlemann-pairs", "length-2 Scharlemann cycles on all four label pairs"});
    }
    return out;
}

Evaluation evaluate(const GraphPair &p, Profile profile) {
    Evaluation ev;
    PairReport v = validate_pair(p);
    bool structural_only = std::any_of(v.begin(), v.end(), [](const Violation &x) {
        return x.constraint != "parity" && x.constraint != "jumping-order";
    });
    if (!structural_only) {
        for (auto &x : check_distance_transfer(p))
            v.push_back(x);
        for (auto &x : check_equidistance_transfer(p))
            v.push_back(x);
        for (auto &x : check_graph_lemmas(p, profile))
            v.push_back(x);
        for (auto &x : check_topological_axioms(p, profile))
            v.push_back(x);
    }
    std::sort(v.begin(), v.end());
    ev.violations = std::move(v);
    ev.survivor = ev.violations.empty();
    return ev;
}

} // namespace fatgraph
