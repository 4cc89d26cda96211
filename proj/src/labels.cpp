#include "fatgraph/labels.hpp"

#include <algorithm>
#include <numeric>

namespace fatgraph {

int label_at(const EmbeddedGraph &g, const EndpointRef &slot) {
    if (slot.vertex < 0 || slot.vertex >= g.num_vertices())
        throw SlotNotOnVertex("no such vertex");
    const auto &rot = g.rotation[slot.vertex];
    if (slot.pos < 0 || slot.pos >= static_cast<int>(rot.size()))
        throw SlotNotOnVertex("position outside the rotation");
    return g.label[rot[slot.pos]];
}

int expected_label(Sign s, int n_opposite, int label_at_zero, int pos) {
    int step = s == Sign::plus ? pos : -pos;
    return ((label_at_zero - 1 + step) % n_opposite + n_opposite) % n_opposite + 1;
}

int rho(const EmbeddedGraph &g, int vertex, int pos_p, int pos_q) {
    if (vertex < 0 || vertex >= g.num_vertices())
        throw SlotNotOnVertex("no such vertex");
    int m = static_cast<int>(g.rotation[vertex].size());
    if (pos_p < 0 || pos_p >= m || pos_q < 0 || pos_q >= m)
        throw SlotNotOnVertex("position outside the rotation");
    int k = (pos_q - pos_p) * sign_value(g.sign[vertex]);
    return ((k % m) + m) % m;
}

int rho_darts(const EmbeddedGraph &g, const Topology &t, int dart_p, int dart_q) {
    if (t.vert[dart_p] != t.vert[dart_q])
        throw SlotNotOnVertex("edge ends lie on different vertices");
    return rho(g, t.vert[dart_p], t.pos[dart_p], t.pos[dart_q]);
}

EdgeSign edge_sign(const EmbeddedGraph &g, const Topology &t, int edge) {
    int a = t.vert[2 * edge], b = t.vert[2 * edge + 1];
    return g.sign[a] == g.sign[b] ? EdgeSign::positive : EdgeSign::negative;
}

EdgeSign edge_sign(const EmbeddedGraph &g, int edge) { return edge_sign(g, analyze(g), edge); }

bool is_equidistant_pair(const EmbeddedGraph &g, const Topology &t, int e1, int e2, int choice) {
    int a1 = 2 * e1, b1 = a1 + 1, a2 = 2 * e2, b2 = a2 + 1;
    int u1 = t.vert[a1], v1 = t.vert[b1], u2 = t.vert[a2], v2 = t.vert[b2];
    bool loops = u1 == v1 && u2 == v2;
    if (loops) {
        if (u1 != u2)
            throw EndpointsMismatch("loops at different vertices");
        int p1 = (choice & 1) ? b1 : a1, q1 = mate(p1);
        int p2 = (choice & 2) ? b2 : a2, q2 = mate(p2);
        return rho_darts(g, t, p1, p2) == rho_darts(g, t, q2, q1);
    }
    // orient e2 so its first end sits on e1's first vertex
    if (u2 != u1)
        std::swap(a2, b2);
    if (t.vert[a2] != u1 || t.vert[b2] != v1)
        throw EndpointsMismatch("edges do not join the same vertices");
    return rho_darts(g, t, a1, a2) == rho_darts(g, t, b2, b1);
}

bool is_equidistant_pair(const EmbeddedGraph &g, int e1, int e2) { return is_equidistant_pair(g, analyze(g), e1, e2); }

bool PermutationPhi::total() const {
    for (int i = 1; i <= n; ++i)
        if (map[i] == 0)
            return false;
    return n > 0;
}

PermutationPhi PermutationPhi::inverse() const {
    PermutationPhi r;
    r.n = n;
    r.map.assign(n + 1, 0);
    for (int i = 1; i <= n; ++i)
        if (map[i])
            r.map[map[i]] = i;
    r.orbits = orbits;
    for (auto &o : r.orbits)
        if (o.size() > 1)
            std::reverse(o.begin() + 1, o.end());
    r.orbit_length = orbit_length;
    return r;
}

PermutationPhi family_permutation(const EmbeddedGraph &g, const Topology &t, const ParallelClass &c) {
    if (c.edges.empty())
        throw std::invalid_argument("empty family");
    if (edge_sign(g, t, c.edges.front()) == EdgeSign::positive)
        throw PositiveFamily("the family joins parallel vertices");
    PermutationPhi phi;
    phi.n = g.n_opposite;
    phi.map.assign(phi.n + 1, 0);
    for (int d : c.side_a) {
        int from = g.label[d], to = g.label[mate(d)];
        if (phi.map[from] != 0 && phi.map[from] != to)
            throw std::invalid_argument("labels of the family are inconsistent");
        phi.map[from] = to;
    }
    if (!phi.total())
        return phi;
    std::vector<char> seen(phi.n + 1, 0);
    for (int i = 1; i <= phi.n; ++i) {
        if (seen[i])
            continue;
        std::vector<int> orbit;
        for (int x = i; !seen[x]; x = phi.map[x]) {
            seen[x] = 1;
            orbit.push_back(x);
        }
        phi.orbits.push_back(std::move(orbit));
    }
    phi.orbit_length = static_cast<int>(phi.orbits.front().size());
    for (auto &o : phi.orbits)
        if (static_cast<int>(o.size()) != phi.orbit_length)
            phi.orbit_length = 0;
    return phi;
}

PermutationPhi family_permutation(const EmbeddedGraph &g, const ParallelClass &c) {
    return family_permutation(g, analyze(g), c);
}

} // namespace fatgraph
