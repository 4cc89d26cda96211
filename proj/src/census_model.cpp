#include <algorithm>
#include <set>
#include <sstream>

#include "fatgraph/census.hpp"

namespace fatgraph {

int PointModel::pos_u(int p) const {
    int m = n2 * delta, s = slot_u(p);
    return su[u_of(p)] == Sign::plus ? s : (m - s) % m;
}

int PointModel::pos_v(int p) const {
    int m = n1 * delta, s = slot_v(p);
    return sv[v_of(p)] == Sign::plus ? s : (m - s) % m;
}

int PointModel::jump() const { return 2 * d_eff <= delta ? d_eff : delta - d_eff; }

int PointModel::sense() const { return 2 * d_eff <= delta ? 1 : -1; }

GraphPair build_pair(const PointModel &m, const std::vector<int> &sigma) {
    const int N = m.num_points();
    if (static_cast<int>(sigma.size()) != N)
        throw std::invalid_argument("matching size differs from the point count");
    GraphPair p;
    p.delta = m.delta;
    p.d = m.jump();
    p.sense = m.sense();
    EmbeddedGraph &g1 = p.g1, &g2 = p.g2;
    g1.surface = Surface::annulus;
    g2.surface = Surface::torus;
    g1.n_opposite = m.n2;
    g2.n_opposite = m.n1;
    g1.sign = m.su;
    g2.sign = m.sv;
    g1.rotation.assign(m.n1, std::vector<int>(m.n2 * m.delta, -1));
    g2.rotation.assign(m.n2, std::vector<int>(m.n1 * m.delta, -1));
    g1.label.assign(N, 0);
    g2.label.assign(N, 0);
    std::vector<int> dart(N, -1);
    int e = 0;
    for (int x = 0; x < N; ++x) {
        int y = sigma[x];
        if (y < 0 || y >= N || y == x || sigma[y] != x)
            throw std::invalid_argument("matching is not a fixed-point-free involution");
        if (x < y) {
            dart[x] = 2 * e;
            dart[y] = 2 * e + 1;
            ++e;
        }
    }
    for (int x = 0; x < N; ++x) {
        g1.rotation[m.u_of(x)][m.pos_u(x)] = dart[x];
        g2.rotation[m.v_of(x)][m.pos_v(x)] = dart[x];
        g1.label[dart[x]] = m.v_of(x) + 1;
        g2.label[dart[x]] = m.u_of(x) + 1;
        p.points.push_back({m.u_of(x), m.pos_u(x), m.v_of(x), m.pos_v(x)});
    }
    return p;
}

GraphPair build_pair(const PointModel &m, const std::vector<int> &sigma, const Extras &x1, const Extras &x2) {
    GraphPair p = build_pair(m, sigma);
    p.g1.extras = x1;
    p.g2.extras = x2;
    return p;
}

namespace {

Corner face_corner(const Topology &t, int f) {
    const auto &w = t.walks[f];
    if (w.empty()) {
        for (int v = 0; v < t.V; ++v)
            if (t.vertex_face[v] == f)
                return {v, -1};
    }
    int y = w.front();
    return {t.vert[y], t.pos[t.rho_inv[y]]};
}

} // namespace

std::vector<Extras> extras_choices(const EmbeddedGraph &bare, bool skip_trivial_loops) {
    std::vector<Extras> out;
    Topology t = analyze(bare, false);
    int need_marks = 0, need_feet = 0;
    int root = 0;
    switch (bare.surface) {
    case Surface::annulus:
        if (t.genus > 0)
            return out;
        need_marks = 2;
        break;
    case Surface::disk:
        if (t.genus > 0)
            return out;
        need_marks = 1;
        break;
    case Surface::torus:
        if (t.genus > 1)
            return out;
        if (t.genus == 0)
            need_feet = 2;
        else
            for (int c = 0; c < t.num_components; ++c)
                if (t.comp_genus[c] == 1)
                    root = c;
        break;
    }
    const int C = t.num_components;
    std::vector<std::vector<int>> faces_of(C);
    for (int f = 0; f < t.F; ++f)
        faces_of[t.face_comp[f]].push_back(f);
    std::vector<int> others;
    for (int c = 0; c < C; ++c)
        if (c != root)
            others.push_back(c);

    std::set<std::pair<std::vector<int>, std::vector<int>>> seen; // (region of each face, extras regions)
    std::vector<int> parent(C, -1);
    std::vector<std::pair<int, int>> joins; // faces
    // loop faces must not stay disks when trivial loops are skipped
    std::vector<int> cover(t.F, 0);
    std::vector<char> required(t.F, 0);
    int uncovered = 0;
    if (skip_trivial_loops)
        for (int f = 0; f < t.F; ++f)
            if (t.walks[f].size() == 1) {
                required[f] = 1;
                ++uncovered;
            }
    auto touch = [&](int f, int delta) {
        if (required[f] && (cover[f] == 0) != (cover[f] + delta == 0))
            uncovered -= delta;
        cover[f] += delta;
    };

    auto emit = [&]() {
        UnionFind uf(t.F);
        for (auto [a, b] : joins)
            uf.unite(a, b);
        std::vector<int> rid(t.F, -1), region(t.F);
        int R = 0;
        for (int f = 0; f < t.F; ++f) {
            int r = uf.find(f);
            if (rid[r] < 0)
                rid[r] = R++;
            region[f] = rid[r];
        }
        std::vector<int> rep(R, -1);
        for (int f = 0; f < t.F; ++f)
            if (rep[region[f]] < 0)
                rep[region[f]] = f;
        int k = need_marks + need_feet;
        std::vector<char> needs_pick(R, 0);
        std::vector<int> region_size(R, 0);
        for (int f = 0; f < t.F; ++f)
            ++region_size[region[f]];
        for (int f = 0; f < t.F; ++f)
            if (required[f] && region_size[region[f]] == 1)
                needs_pick[region[f]] = 1;
        std::vector<int> pick(k, 0);
        // multisets of k regions
        auto place = [&](auto &&self, int i, int from) -> void {
            if (i == k) {
                std::vector<char> got(R, 0);
                for (int r : pick)
                    got[r] = 1;
                for (int r = 0; r < R; ++r)
                    if (needs_pick[r] && !got[r])
                        return;
                if (!seen.insert({region, pick}).second)
                    return;
                Extras x;
                for (auto [a, b] : joins)
                    x.joins.emplace_back(face_corner(t, a), face_corner(t, b));
                for (int j = 0; j < k; ++j)
                    (j < need_marks ? x.marks : x.handle).push_back(face_corner(t, rep[pick[j]]));
                out.push_back(std::move(x));
                return;
            }
            for (int r = from; r < R; ++r) {
                pick[i] = r;
                self(self, i + 1, r);
            }
        };
        place(place, 0, 0);
    };

    auto acyclic = [&]() {
        for (int c : others) {
            int steps = 0;
            for (int x = c; x != root; x = parent[x])
                if (++steps > C)
                    return false;
        }
        return true;
    };

    auto assign = [&](auto &&self, size_t i) -> void {
        if (i == others.size()) {
            if (uncovered > need_marks + need_feet)
                return;
            if (acyclic())
                emit();
            return;
        }
        if (uncovered > 2 * static_cast<int>(others.size() - i) + need_marks + need_feet)
            return;
        int c = others[i];
        for (int p = 0; p < C; ++p) {
            if (p == c)
                continue;
            parent[c] = p;
            for (int fp : faces_of[p])
                for (int fc : faces_of[c]) {
                    joins.push_back({fp, fc});
                    touch(fp, 1);
                    touch(fc, 1);
                    self(self, i + 1);
                    touch(fp, -1);
                    touch(fc, -1);
                    joins.pop_back();
                }
        }
        parent[c] = -1;
    };
    assign(assign, 0);
    return out;
}

namespace {

std::string extras_text(const Extras &x) {
    std::ostringstream out;
    bool first = true;
    auto sep = [&]() {
        if (!first)
            out << ',';
        first = false;
    };
    for (auto &c : x.marks) {
        sep();
        out << "m " << c.vertex << ' ' << c.pos;
    }
    for (auto &c : x.handle) {
        sep();
        out << "h " << c.vertex << ' ' << c.pos;
    }
    for (auto &[a, b] : x.joins) {
        sep();
        out << "j " << a.vertex << ' ' << a.pos << ' ' << b.vertex << ' ' << b.pos;
    }
    return out.str();
}

Extras parse_extras(const std::string &s) {
    Extras x;
    std::istringstream items(s);
    std::string item;
    while (std::getline(items, item, ',')) {
        std::istringstream in(item);
        std::string kind;
        if (!(in >> kind))
            continue;
        Corner a, b;
        in >> a.vertex >> a.pos;
        if (kind == "m")
            x.marks.push_back(a);
        else if (kind == "h")
            x.handle.push_back(a);
        else if (kind == "j") {
            in >> b.vertex >> b.pos;
            x.joins.emplace_back(a, b);
        } else
            throw std::invalid_argument("bad extras item '" + item + "'");
        if (!in)
            throw std::invalid_argument("bad extras item '" + item + "'");
    }
    return x;
}

std::string sign_text(const std::vector<Sign> &s) {
    std::string out;
    for (Sign x : s)
        out += x == Sign::plus ? '+' : '-';
    return out;
}

std::vector<Sign> parse_signs(const std::string &s) {
    std::vector<Sign> out;
    for (char c : s) {
        if (c != '+' && c != '-')
            throw std::invalid_argument("bad sign string '" + s + "'");
        out.push_back(c == '+' ? Sign::plus : Sign::minus);
    }
    return out;
}

} // namespace

// n1 n2 delta d_eff su sv | sigma (-1 unmatched) [| extras1 | extras2]
std::string encode_config(const PointModel &m, const std::vector<int> &sigma, const Extras *x1, const Extras *x2) {
    std::ostringstream out;
    out << m.n1 << ' ' << m.n2 << ' ' << m.delta << ' ' << m.d_eff << ' ' << sign_text(m.su) << ' '
        << sign_text(m.sv) << " |";
    for (int s : sigma)
        out << ' ' << s;
    if (x1 && x2)
        out << " | " << extras_text(*x1) << " | " << extras_text(*x2);
    return out.str();
}

DecodedConfig decode_config(const std::string &s) {
    DecodedConfig d;
    std::vector<std::string> parts;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, '|'))
        parts.push_back(part);
    if (parts.size() != 2 && parts.size() != 4)
        throw std::invalid_argument("bad configuration text");
    std::istringstream head(parts[0]);
    std::string su, sv;
    PointModel &m = d.model;
    if (!(head >> m.n1 >> m.n2 >> m.delta >> m.d_eff >> su >> sv))
        throw std::invalid_argument("bad configuration header");
    m.su = parse_signs(su);
    m.sv = parse_signs(sv);
    if (static_cast<int>(m.su.size()) != m.n1 || static_cast<int>(m.sv.size()) != m.n2)
        throw std::invalid_argument("sign strings do not match the vertex counts");
    std::istringstream sig(parts[1]);
    int x;
    while (sig >> x)
        d.sigma.push_back(x);
    if (static_cast<int>(d.sigma.size()) != m.num_points())
        throw std::invalid_argument("matching length differs from the point count");
    if (parts.size() == 4) {
        d.has_extras = true;
        d.x1 = parse_extras(parts[2]);
        d.x2 = parse_extras(parts[3]);
    }
    return d;
}

} // namespace fatgraph
