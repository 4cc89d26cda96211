#include <algorithm>
#include <functional>
#include <set>

#include "fatgraph/census.hpp"
#include "fatgraph/disk_graphs.hpp"
#include "fatgraph/fixtures.hpp"

namespace fatgraph {

namespace {

struct Cell {
    int n1, n2, delta;
};

using Check = std::function<std::optional<std::string>(const GraphPair &)>;

struct Entry {
    DerivedResult result;
    std::function<std::vector<Cell>(int max_n)> cells;
    Check check; // failure description for a survivor that breaks the statement
};

std::vector<Cell> grid(int n1_lo, int n1_hi, int n2_lo, int n2_hi) {
    std::vector<Cell> out;
    for (int a = n1_lo; a <= n1_hi; ++a)
        for (int b = n2_lo; b <= n2_hi; ++b)
            for (int d : {4, 5})
                out.push_back({a, b, d});
    return out;
}

bool all_parallel(const std::vector<Sign> &s) {
    return std::all_of(s.begin(), s.end(), [&](Sign x) { return x == s.front(); });
}

std::string code_of(const GraphPair &p) { return code_string(canonicalize_pair(p, true)); }

bool matches_fixture(const GraphPair &p, const std::string &id) { return code_of(p) == code_of(fixture(id)); }

std::string size_text(const GraphPair &p) {
    return "(" + std::to_string(p.n1()) + ", " + std::to_string(p.n2()) + ", " + std::to_string(p.delta) + ")";
}

// loop multiplicity per torus vertex and sizes of the other families
struct TorusFamilies {
    std::vector<int> loops;
    std::vector<int> links;
};

TorusFamilies torus_families(const EmbeddedGraph &g2) {
    ReducedGraph r = reduce(g2);
    Topology t = analyze(r.graph);
    TorusFamilies f;
    f.loops.assign(g2.num_vertices(), 0);
    for (int e = 0; e < t.E; ++e) {
        if (t.vert[2 * e] == t.vert[2 * e + 1])
            f.loops[t.vert[2 * e]] += r.multiplicity[e];
        else
            f.links.push_back(r.multiplicity[e]);
    }
    std::sort(f.links.rbegin(), f.links.rend());
    return f;
}

bool positive_dart(const EmbeddedGraph &g, const Topology &t, int d) {
    return g.sign[t.vert[d]] == g.sign[t.vert[d ^ 1]];
}

// every edge at u is positive
std::vector<int> full_vertices(const EmbeddedGraph &g1) {
    Topology t = analyze(g1);
    std::vector<int> out;
    for (int u = 0; u < t.V; ++u)
        if (std::all_of(g1.rotation[u].begin(), g1.rotation[u].end(),
                        [&](int d) { return positive_dart(g1, t, d); }))
            out.push_back(u);
    return out;
}

// Positive subgraph of the annulus graph and, per vertex, whether it touches
// a face holding a boundary circle (no interior position).
struct PositivePart {
    EmbeddedGraph graph;
    std::vector<char> on_boundary;
    std::vector<int> comp;
};

PositivePart positive_part(const EmbeddedGraph &g1) {
    Topology t = analyze(g1);
    std::vector<char> keep(t.E, 0);
    for (int e = 0; e < t.E; ++e)
        keep[e] = positive_dart(g1, t, 2 * e);
    PositivePart p;
    p.graph = subgraph(g1, keep);
    Topology th = analyze(p.graph);
    p.on_boundary.assign(th.V, 0);
    p.comp = th.comp;
    for (int v = 0; v < th.V; ++v) {
        int n = static_cast<int>(p.graph.rotation[v].size());
        for (int pos = n ? 0 : -1; pos < std::max(n, 0); ++pos)
            if (th.region_marks[th.region[th.corner_face({v, pos})]] > 0)
                p.on_boundary[v] = 1;
    }
    return p;
}

int negative_degree(const EmbeddedGraph &g1, const Topology &t, int u) {
    int n = 0;
    for (int d : g1.rotation[u])
        n += !positive_dart(g1, t, d);
    return n;
}

const std::vector<Entry> &entries() {
    static const std::vector<Entry> list = [] {
        std::vector<Entry> v;
        v.push_back({{"single-vertex-annulus",
                      "one vertex in the annulus graph forces two torus vertices, intersection 4, and the "
                      "fig3_1 pair"},
                     [](int m) { return grid(1, 1, 1, m); },
                     [](const GraphPair &p) -> std::optional<std::string> {
                         if (p.n2() != 2 || p.delta != 4 || !matches_fixture(p, "fig3_1"))
                             return "survivor at " + size_text(p) + " is not the fig3_1 pair";
                         return std::nullopt;
                     }});
        v.push_back({{"single-vertex-torus",
                      "one vertex in the torus graph forces two annulus vertices, intersection 4, and the "
                      "fig3_3 pair"},
                     [](int m) { return grid(1, m, 1, 1); },
                     [](const GraphPair &p) -> std::optional<std::string> {
                         if (p.n1() != 2 || p.delta != 4 || !matches_fixture(p, "fig3_3"))
                             return "survivor at " + size_text(p) + " is not the fig3_3 pair";
                         return std::nullopt;
                     }});
        v.push_back({{"parallel-torus-vertices",
                      "if all torus vertices are parallel then both graphs have two vertices and the annulus "
                      "graph is 2-separable"},
                     [](int m) { return grid(2, m, 2, m); },
                     [](const GraphPair &p) -> std::optional<std::string> {
                         if (!all_parallel(p.g2.sign))
                             return std::nullopt;
                         if (p.n1() != 2 || p.n2() != 2 || !is_k_separable(p.g1, 2))
                             return "parallel torus vertices at " + size_text(p);
                         return std::nullopt;
                     }});
        v.push_back({{"two-torus-vertices-antiparallel",
                      "with two torus vertices, the two are antiparallel"},
                     [](int m) { return grid(2, m, 2, 2); },
                     [](const GraphPair &p) -> std::optional<std::string> {
                         if (p.g2.sign[0] == p.g2.sign[1])
                             return "parallel torus vertices at " + size_text(p);
                         return std::nullopt;
                     }});
        v.push_back({{"torus-link-families-full",
                      "with two torus vertices, the two largest families joining them each have n1 edges"},
                     [](int m) { return grid(2, m, 2, 2); },
                     [](const GraphPair &p) -> std::optional<std::string> {
                         auto f = torus_families(p.g2);
                         if (f.links.size() < 2 || f.links[0] != p.n1() || f.links[1] != p.n1())
                             return "joining families below n1 at " + size_text(p);
                         return std::nullopt;
                     }});
        v.push_back({{"torus-loop-families-balanced",
                      "with two torus vertices and n1 >= 2, the loop families at the two vertices are equal "
                      "and nonempty"},
                     [](int m) { return grid(2, m, 2, 2); },
                     [](const GraphPair &p) -> std::optional<std::string> {
                         auto f = torus_families(p.g2);
                         if (f.loops[0] != f.loops[1] || f.loops[0] == 0)
                             return "loop families " + std::to_string(f.loops[0]) + ", " +
                                    std::to_string(f.loops[1]) + " at " + size_text(p);
                         return std::nullopt;
                     }});
        v.push_back({{"two-torus-vertices-separable",
                      "with two torus vertices and n1 > 2, the annulus graph is 2-separable"},
                     [](int m) { return grid(3, m, 2, 2); },
                     [](const GraphPair &p) -> std::optional<std::string> {
                         if (!is_k_separable(p.g1, 2))
                             return "not 2-separable at " + size_text(p);
                         return std::nullopt;
                     }});
        v.push_back({{"separable-forces-two-torus-vertices",
                      "a 2-separable annulus graph forces two torus vertices (both sides at least 2)"},
                     [](int m) { return grid(2, m, 2, m); },
                     [](const GraphPair &p) -> std::optional<std::string> {
                         if (is_k_separable(p.g1, 2) && p.n2() != 2)
                             return "2-separable with " + std::to_string(p.n2()) + " torus vertices";
                         return std::nullopt;
                     }});
        v.push_back({{"separable-torus-shapes",
                      "a 2-separable annulus graph comes with the torus graph of fig5_d or fig5_e (both sides at "
                      "least 2)"},
                     [](int m) { return grid(2, m, 2, m); },
                     [](const GraphPair &p) -> std::optional<std::string> {
                         if (!is_k_separable(p.g1, 2))
                             return std::nullopt;
                         auto shape = [](const EmbeddedGraph &g) { return code_string(canonicalize(g, true)); };
                         std::string s = shape(p.g2);
                         if (s != shape(fixture("fig5_d").g2) && s != shape(fixture("fig5_e").g2))
                             return "torus graph at " + size_text(p) + " matches neither shape";
                         return std::nullopt;
                     }});
        v.push_back({{"three-torus-vertices",
                      "three torus vertices and at least three annulus vertices force intersection at most 3"},
                     [](int m) { return grid(3, m, 3, 3); },
                     [](const GraphPair &p) -> std::optional<std::string> {
                         return "survivor at " + size_text(p);
                     }});
        auto large = [](int m) { return grid(3, m, 4, m); };
        v.push_back({{"full-vertex-valency",
                      "a full annulus vertex has at least 6 reduced edges"},
                     large,
                     [](const GraphPair &p) -> std::optional<std::string> {
                         ReducedGraph r = reduce(p.g1);
                         for (int u : full_vertices(p.g1))
                             if (r.graph.rotation[u].size() < 6)
                                 return "full vertex " + std::to_string(u) + " at " + size_text(p);
                         return std::nullopt;
                     }});
        v.push_back({{"full-vertex-one-boundary",
                      "the positive component of a full vertex has at most one vertex on the boundary"},
                     large,
                     [](const GraphPair &p) -> std::optional<std::string> {
                         auto full = full_vertices(p.g1);
                         if (full.empty())
                             return std::nullopt;
                         PositivePart pp = positive_part(p.g1);
                         for (int u : full) {
                             int n = 0;
                             for (size_t w = 0; w < pp.comp.size(); ++w)
                                 n += pp.comp[w] == pp.comp[u] && pp.on_boundary[w];
                             if (n > 1)
                                 return "component of full vertex " + std::to_string(u) + " at " + size_text(p);
                         }
                         return std::nullopt;
                     }});
        v.push_back({{"no-full-vertices", "the annulus graph has no full vertex"},
                     large,
                     [](const GraphPair &p) -> std::optional<std::string> {
                         if (!full_vertices(p.g1).empty())
                             return "full vertex at " + size_text(p);
                         return std::nullopt;
                     }});
        v.push_back({{"boundary-positive-part",
                      "if every positive vertex reaches the boundary then n2 and the intersection are both 4"},
                     large,
                     [](const GraphPair &p) -> std::optional<std::string> {
                         PositivePart pp = positive_part(p.g1);
                         bool none_inside = std::all_of(pp.on_boundary.begin(), pp.on_boundary.end(),
                                                        [](char b) { return b != 0; });
                         if (none_inside && (p.n2() != 4 || p.delta != 4))
                             return "no interior positive vertex at " + size_text(p);
                         return std::nullopt;
                     }});
        v.push_back({{"many-negative-separable",
                      "with no interior positive vertex and three vertices carrying 8 negative edges, the "
                      "annulus graph is 2-separable"},
                     large,
                     [](const GraphPair &p) -> std::optional<std::string> {
                         PositivePart pp = positive_part(p.g1);
                         bool none_inside = std::all_of(pp.on_boundary.begin(), pp.on_boundary.end(),
                                                        [](char b) { return b != 0; });
                         Topology t = analyze(p.g1);
                         int heavy = 0;
                         for (int u = 0; u < t.V; ++u)
                             heavy += negative_degree(p.g1, t, u) == 8;
                         if (none_inside && heavy >= 3 && !is_k_separable(p.g1, 2))
                             return "not 2-separable at " + size_text(p);
                         return std::nullopt;
                     }});
        v.push_back({{"no-full-separable",
                      "without full vertices the annulus graph is 2-separable"},
                     large,
                     [](const GraphPair &p) -> std::optional<std::string> {
                         if (full_vertices(p.g1).empty() && !is_k_separable(p.g1, 2))
                             return "not 2-separable at " + size_text(p);
                         return std::nullopt;
                     }});
        v.push_back({{"classification",
                      "every surviving pair is one of the four fixtures"},
                     [](int m) { return grid(1, m, 1, m); },
                     [](const GraphPair &p) -> std::optional<std::string> {
                         for (auto &id : fixture_ids())
                             if (matches_fixture(p, id))
                                 return std::nullopt;
                         return "survivor at " + size_text(p) + " is not a fixture";
                     }});
        return v;
    }();
    return list;
}

const Entry &find_entry(const std::string &id) {
    for (auto &e : entries())
        if (e.result.id == id)
            return e;
    throw UnknownResult("unknown derived result '" + id + "'");
}

} // namespace

const std::vector<DerivedResult> &derived_results() {
    static const std::vector<DerivedResult> list = [] {
        std::vector<DerivedResult> out;
        for (auto &e : entries())
            out.push_back(e.result);
        return out;
    }();
    return list;
}

DerivedReport verify_derived(const std::string &id, int max_n, const SearchSpec &base) {
    const Entry &e = find_entry(id);
    DerivedReport report;
    report.id = id;
    for (const Cell &c : e.cells(max_n)) {
        SearchSpec s = base;
        s.n1 = c.n1;
        s.n2 = c.n2;
        s.delta = c.delta;
        CensusResult r = enumerate(s);
        report.cells.push_back(summary_row(r));
        if (!r.exhaustive) {
            report.pass = false;
            report.witnesses.push_back("budget exceeded at (" + std::to_string(c.n1) + ", " +
                                       std::to_string(c.n2) + ", " + std::to_string(c.delta) + ")");
        }
        for (auto &sv : r.survivors)
            if (auto w = e.check(sv.pair)) {
                report.pass = false;
                report.witnesses.push_back(*w);
            }
    }
    return report;
}

} // namespace fatgraph
