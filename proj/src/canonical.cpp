#include <algorithm>
#include <deque>
#include <sstream>

#include "fatgraph/core_maps.hpp"
#include "fatgraph/pairing.hpp"

namespace fatgraph {

namespace {

EmbeddedGraph mirrored(const EmbeddedGraph &g) {
    EmbeddedGraph h = g;
    std::vector<int> size(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::reverse(h.rotation[v].begin(), h.rotation[v].end());
        size[v] = static_cast<int>(g.rotation[v].size());
    }
    auto flip_corner = [&](Corner c) {
        if (c.pos >= 0) {
            int m = size[c.vertex];
            c.pos = ((m - 2 - c.pos) % m + m) % m;
        }
        return c;
    };
    for (auto &c : h.extras.marks)
        c = flip_corner(c);
    for (auto &c : h.extras.handle)
        c = flip_corner(c);
    for (auto &[a, b] : h.extras.joins) {
        a = flip_corner(a);
        b = flip_corner(b);
    }
    return h;
}

// Serialization of one traversal. Units are darts; isolated vertices get a
// single token. Region and vertex ids are numbered by first discovery.
struct Walker {
    const EmbeddedGraph &g;
    const Topology &t;
    bool mirror;
    std::vector<int> dart_num, vertex_num, region_num;
    std::vector<int> order; // darts in numbering order
    int next_vertex = 0, next_region = 0;
    int base_label = 0;
    Sign base_sign = Sign::plus;
    CanonicalCode body;

    Walker(const EmbeddedGraph &g_, const Topology &t_, bool m)
        : g(g_), t(t_), mirror(m), dart_num(g_.num_darts(), -1), vertex_num(g_.num_vertices(), -1),
          region_num(t_.num_regions, -1) {}

    int rel_label(int d) const {
        if (g.n_opposite == 0)
            return 0;
        int diff = mirror ? base_label - g.label[d] : g.label[d] - base_label;
        return ((diff % g.n_opposite) + g.n_opposite) % g.n_opposite;
    }
    int region_id(int f) {
        int r = t.region[f];
        if (region_num[r] < 0)
            region_num[r] = next_region++;
        return region_num[r];
    }
    int vertex_id(int v) {
        if (vertex_num[v] < 0)
            vertex_num[v] = next_vertex++;
        return vertex_num[v];
    }
    void number(int d, std::deque<int> &q) {
        if (dart_num[d] < 0) {
            dart_num[d] = static_cast<int>(order.size());
            order.push_back(d);
            q.push_back(d);
        }
    }
    // traverse the component containing dart s (or isolated vertex iv)
    void component(int s, int iv) {
        body.push_back(-1);
        if (s < 0) {
            body.push_back(0);
            body.push_back(vertex_id(iv));
            body.push_back(g.sign[iv] == base_sign ? 1 : 0);
            body.push_back(region_id(t.vertex_face[iv]));
            return;
        }
        std::deque<int> q;
        size_t before = order.size();
        number(s, q);
        while (!q.empty()) {
            int d = q.front();
            q.pop_front();
            number(mate(d), q);
            number(t.rho[d], q);
        }
        body.push_back(static_cast<int>(order.size() - before));
    }
};

struct Candidate {
    int dart;
    int vertex; // for isolated vertices
};

// Emit tokens for all darts numbered since `from`.
void emit(Walker &w, size_t from) {
    for (size_t k = from; k < w.order.size(); ++k) {
        int d = w.order[k];
        w.body.push_back(w.dart_num[mate(d)]);
        w.body.push_back(w.dart_num[w.t.rho[d]]);
        w.body.push_back(w.vertex_id(w.t.vert[d]));
        w.body.push_back(w.g.sign[w.t.vert[d]] == w.base_sign ? 1 : 0);
        w.body.push_back(w.rel_label(d));
        w.body.push_back(w.region_id(w.t.face[d]));
    }
}

void best_completion(Walker w, CanonicalCode &best, bool &have) {
    // candidates: undiscovered components touching an already numbered region
    std::vector<Candidate> cands;
    std::vector<char> comp_done(w.t.num_components, 0);
    for (int v = 0; v < w.t.V; ++v)
        if (w.vertex_num[v] >= 0)
            comp_done[w.t.comp[v]] = 1;
    bool all = true;
    for (int c = 0; c < w.t.num_components; ++c)
        all &= comp_done[c] != 0;
    if (all) {
        CanonicalCode full = w.body;
        full.push_back(-2);
        std::vector<std::pair<int, int>> regs(w.next_region);
        for (int r = 0; r < w.t.num_regions; ++r)
            if (w.region_num[r] >= 0)
                regs[w.region_num[r]] = {w.t.region_marks[r], w.t.region_feet[r]};
        for (auto [m, f] : regs) {
            full.push_back(m);
            full.push_back(f);
        }
        if (!have || full < best) {
            best = std::move(full);
            have = true;
        }
        return;
    }
    for (int f = 0; f < w.t.F; ++f) {
        int c = w.t.face_comp[f];
        if (comp_done[c] || w.region_num[w.t.region[f]] < 0)
            continue;
        if (w.t.walks[f].empty()) {
            for (int v = 0; v < w.t.V; ++v)
                if (w.t.vertex_face[v] == f)
                    cands.push_back({-1, v});
        } else {
            for (int d : w.t.walks[f])
                cands.push_back({d, -1});
        }
    }
    for (auto &cand : cands) {
        Walker next = w;
        size_t from = next.order.size();
        if (cand.dart >= 0) {
            next.component(cand.dart, -1);
            emit(next, from);
        } else {
            next.component(-1, cand.vertex);
        }
        best_completion(std::move(next), best, have);
    }
}

} // namespace

CanonicalCode canonicalize(const EmbeddedGraph &g, bool allow_reflection) {
    std::vector<EmbeddedGraph> variants{g};
    if (allow_reflection)
        variants.push_back(mirrored(g));
    CanonicalCode best;
    bool have = false;
    for (size_t vi = 0; vi < variants.size(); ++vi) {
        const EmbeddedGraph &h = variants[vi];
        Topology t = analyze(h);
        bool mirror = vi == 1;
        std::vector<Candidate> starts;
        for (int d = 0; d < h.num_darts(); ++d)
            starts.push_back({d, -1});
        for (int v = 0; v < h.num_vertices(); ++v)
            if (h.rotation[v].empty())
                starts.push_back({-1, v});
        for (auto &s : starts) {
            Walker w(h, t, mirror);
            if (s.dart >= 0) {
                w.base_label = h.label[s.dart];
                w.base_sign = h.sign[t.vert[s.dart]];
                w.component(s.dart, -1);
                emit(w, 0);
            } else {
                w.base_sign = h.sign[s.vertex];
                w.component(-1, s.vertex);
            }
            best_completion(std::move(w), best, have);
        }
    }
    std::vector<int> degrees;
    for (auto &r : g.rotation)
        degrees.push_back(static_cast<int>(r.size()));
    std::sort(degrees.begin(), degrees.end());
    CanonicalCode head{static_cast<int>(g.surface), g.num_vertices(), g.num_edges(), g.n_opposite};
    head.insert(head.end(), degrees.begin(), degrees.end());
    head.push_back(-3);
    head.insert(head.end(), best.begin(), best.end());
    return head;
}

namespace {

struct PairWalker {
    const GraphPair &p;
    const PairIndex &ix;
    const Topology &t1, &t2;
    bool mirror1, mirror2;
    int N;

    int step(int k, bool on_u) const {
        const PointRow &r = p.points[k];
        const EmbeddedGraph &g = on_u ? p.g1 : p.g2;
        int x = on_u ? r.u : r.v, pos = on_u ? r.pos_u : r.pos_v;
        int m = static_cast<int>(g.rotation[x].size());
        int s = sign_value(g.sign[x]) * ((on_u ? mirror1 : mirror2) ? -1 : 1);
        int d = g.rotation[x][((pos + s) % m + m) % m];
        return on_u ? ix.point1[d] : ix.point2[d];
    }
    int corner_region(int k, bool on_u) const {
        const PointRow &r = p.points[k];
        const EmbeddedGraph &g = on_u ? p.g1 : p.g2;
        const Topology &t = on_u ? t1 : t2;
        int x = on_u ? r.u : r.v, pos = on_u ? r.pos_u : r.pos_v;
        int m = static_cast<int>(g.rotation[x].size());
        bool after = (g.sign[x] == Sign::plus) != (on_u ? mirror1 : mirror2);
        Corner c{x, after ? pos : ((pos - 1) % m + m) % m};
        return t.region[t.corner_face(c)];
    }

    CanonicalCode code_from(int start) const {
        std::vector<int> num(N, -1), order;
        auto visit = [&](int k) {
            if (num[k] < 0) {
                num[k] = static_cast<int>(order.size());
                order.push_back(k);
            }
        };
        visit(start);
        std::vector<int> reg1(t1.num_regions, -1), reg2(t2.num_regions, -1);
        int next1 = 0, next2 = 0;
        Sign su = p.g1.sign[p.points[start].u], sv = p.g2.sign[p.points[start].v];
        CanonicalCode code;
        for (size_t i = 0; i < order.size(); ++i) {
            int k = order[i];
            int s = ix.point1[mate(ix.dart1[k])];
            int a = step(k, true), b = step(k, false);
            visit(s);
            visit(a);
            visit(b);
            int r1 = corner_region(k, true), r2 = corner_region(k, false);
            if (reg1[r1] < 0)
                reg1[r1] = next1++;
            if (reg2[r2] < 0)
                reg2[r2] = next2++;
            code.push_back(num[s]);
            code.push_back(num[a]);
            code.push_back(num[b]);
            code.push_back(p.g1.sign[p.points[k].u] == su ? 1 : 0);
            code.push_back(p.g2.sign[p.points[k].v] == sv ? 1 : 0);
            code.push_back(reg1[r1]);
            code.push_back(reg2[r2]);
        }
        code.push_back(-2);
        auto regions = [&](const Topology &t, const std::vector<int> &ids, int count) {
            std::vector<int> inv(count, -1);
            for (int r = 0; r < t.num_regions; ++r)
                if (ids[r] >= 0)
                    inv[ids[r]] = r;
            for (int r : inv) {
                code.push_back(t.region_marks[r]);
                code.push_back(t.region_feet[r]);
                code.push_back(t.region_faces[r]);
            }
        };
        regions(t1, reg1, next1);
        code.push_back(-3);
        regions(t2, reg2, next2);
        return code;
    }
};

} // namespace

CanonicalCode canonicalize_pair(const GraphPair &p, bool allow_reflection) {
    PairIndex ix = index_pair(p);
    Topology t1 = analyze(p.g1), t2 = analyze(p.g2);
    const int N = static_cast<int>(p.points.size());
    CanonicalCode best;
    bool have = false;
    // reflection acts on each surface separately: reversing one surface's
    // orientation also flips the sense of the pair
    for (int m = 0; m < (allow_reflection ? 4 : 1); ++m) {
        PairWalker w{p, ix, t1, t2, (m & 1) != 0, (m & 2) != 0, N};
        for (int k = 0; k < N; ++k) {
            CanonicalCode c = w.code_from(k);
            if (!have || c < best) {
                best = std::move(c);
                have = true;
            }
        }
    }
    CanonicalCode head{p.delta, p.n1(), p.n2(), -1};
    head.insert(head.end(), best.begin(), best.end());
    return head;
}

int oriented_classes(const GraphPair &p) {
    PairIndex ix = index_pair(p);
    Topology t1 = analyze(p.g1), t2 = analyze(p.g2);
    const int N = static_cast<int>(p.points.size());
    std::vector<CanonicalCode> mins;
    for (int m = 0; m < 4; ++m) {
        PairWalker w{p, ix, t1, t2, (m & 1) != 0, (m & 2) != 0, N};
        CanonicalCode best;
        for (int k = 0; k < N; ++k) {
            CanonicalCode c = w.code_from(k);
            if (k == 0 || c < best)
                best = std::move(c);
        }
        mins.push_back(std::move(best));
    }
    std::sort(mins.begin(), mins.end());
    return static_cast<int>(std::unique(mins.begin(), mins.end()) - mins.begin());
}

std::string code_string(const CanonicalCode &c) {
    std::ostringstream out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i)
            out << ',';
        out << c[i];
    }
    return out.str();
}

} // namespace fatgraph
