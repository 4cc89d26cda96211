#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "fatgraph/census.hpp"

namespace fatgraph {

void check_spec(const SearchSpec &s) {
    if (s.n1 < 1 || s.n2 < 1)
        throw std::invalid_argument("vertex counts must be positive");
    if (s.delta < 1 || s.delta > 5)
        throw std::invalid_argument("delta must lie in 1..5");
    if (s.node_budget == 0 || s.time_budget <= 0)
        throw std::invalid_argument("budgets must be positive");
    if (s.workers < 1)
        throw std::invalid_argument("workers must be positive");
}

namespace {

constexpr int INF = 1 << 20;

// Static data of one configuration (d_eff and vertex signs). Graph index 0 is
// the annulus graph, 1 the torus graph.
struct Context {
    PointModel m;
    Profile profile;
    int N = 0;
    int nv[2] = {0, 0}, mval[2] = {0, 0};
    std::vector<int> vert[2], slot[2], rho[2], rho_inv[2], label[2];
    std::vector<std::vector<int>> at[2], cycle[2];
    std::vector<int> sgn[2];
    int cap_pos[2] = {INF, INF}, cap_neg[2] = {INF, INF};
    bool scharlemann_allowed[2] = {false, false};

    Context(const PointModel &model, Profile p) : m(model), profile(p) {
        N = m.num_points();
        nv[0] = m.n1;
        nv[1] = m.n2;
        mval[0] = m.n2 * m.delta;
        mval[1] = m.n1 * m.delta;
        for (int a = 0; a < 2; ++a) {
            vert[a].assign(N, 0);
            slot[a].assign(N, 0);
            rho[a].assign(N, 0);
            label[a].assign(N, 0);
            at[a].assign(nv[a], std::vector<int>(mval[a], -1));
        }
        for (Sign s : m.su)
            sgn[0].push_back(sign_value(s));
        for (Sign s : m.sv)
            sgn[1].push_back(sign_value(s));
        for (int p = 0; p < N; ++p) {
            vert[0][p] = m.u_of(p);
            vert[1][p] = m.v_of(p);
            slot[0][p] = m.slot_u(p);
            slot[1][p] = m.slot_v(p);
            label[0][p] = m.v_of(p) + 1;
            label[1][p] = m.u_of(p) + 1;
            at[0][vert[0][p]][slot[0][p]] = p;
            at[1][vert[1][p]][slot[1][p]] = p;
        }
        for (int a = 0; a < 2; ++a)
            for (int p = 0; p < N; ++p) {
                int x = vert[a][p], mv = mval[a];
                rho[a][p] = at[a][x][((slot[a][p] + sgn[a][x]) % mv + mv) % mv];
            }
        for (int a = 0; a < 2; ++a) {
            rho_inv[a].assign(N, 0);
            for (int p = 0; p < N; ++p)
                rho_inv[a][rho[a][p]] = p;
        }
        for (int a = 0; a < 2; ++a)
            for (int x = 0; x < nv[a]; ++x) {
                cycle[a].emplace_back();
                int p = at[a][x][0];
                do {
                    cycle[a][x].push_back(p);
                    p = rho[a][p];
                } while (p != at[a][x][0]);
            }
        const bool full = profile == Profile::full;
        // Scharlemann cycles in graph a need an even, sign-alternating other side
        for (int a = 0; a < 2; ++a) {
            const auto &s = sgn[1 - a];
            int n = nv[1 - a];
            bool alt = n >= 2 && n % 2 == 0;
            for (int j = 0; j < n && alt; ++j)
                alt = (s[j] == s[0]) == (j % 2 == 0);
            scharlemann_allowed[a] = alt;
        }
        const int n1 = m.n1, n2 = m.n2;
        // a positive family without a Scharlemann bigon repeats no label
        if (!scharlemann_allowed[0])
            cap_pos[0] = std::max(1, n2 / 2);
        else if (n2 > 2)
            cap_pos[0] = n2 % 4 == 0 ? n2 / 2 + 2 : n2 / 2 + 1;
        bool v_parallel = std::all_of(sgn[1].begin(), sgn[1].end(), [&](int s) { return s == sgn[1][0]; });
        if (full && n2 > 2 && !v_parallel)
            cap_neg[0] = n2;
        cap_pos[1] = scharlemann_allowed[1] ? n1 / 2 + 1 : std::max(1, n1 / 2);
        cap_neg[1] = n1;
        build_symmetries();
    }

    // Index rotations that fix both sign vectors. Rotating the u indices by
    // one sends (i, j, k) to (i + 1, j, k), carrying k + 1 past the last
    // vertex; every slot then moves by a constant at its vertex, so the
    // rotation systems, labels and signs are preserved up to relabeling.
    void build_symmetries() {
        const int n1 = m.n1, n2 = m.n2, D = m.delta;
        int dinv = 0;
        for (int x = 1; x < D; ++x)
            if ((m.d_eff * x) % D == 1)
                dinv = x;
        auto point = [&](int i, int j, int k) { return (i * n2 + j) * D + k; };
        std::vector<int> shift_u(N), shift_v(N);
        for (int p = 0; p < N; ++p) {
            int i = m.u_of(p), j = m.v_of(p), k = m.k_of(p);
            shift_u[p] = i + 1 < n1 ? point(i + 1, j, k) : point(0, j, (k + 1) % D);
            shift_v[p] = j + 1 < n2 ? point(i, j + 1, k) : point(i, 0, (k + dinv) % D);
        }
        auto period = [](const std::vector<int> &s) {
            const int n = static_cast<int>(s.size());
            for (int r = 1; r < n; ++r) {
                bool fixed = true;
                for (int i = 0; i < n && fixed; ++i)
                    fixed = s[i] == s[(i + r) % n];
                if (fixed)
                    return r;
            }
            return n;
        };
        auto power = [&](const std::vector<int> &g, int e) {
            std::vector<int> out(N);
            std::iota(out.begin(), out.end(), 0);
            for (int t = 0; t < e; ++t)
                for (int &x : out)
                    x = g[x];
            return out;
        };
        const int pu = period(sgn[0]), pv = period(sgn[1]);
        for (int a = 0; a < n1; a += pu)
            for (int b = 0; b < n2; b += pv) {
                if (a == 0 && b == 0)
                    continue;
                std::vector<int> h = power(shift_u, a), g = power(shift_v, b), inv(N);
                for (int &x : h)
                    x = g[x];
                for (int p = 0; p < N; ++p)
                    inv[h[p]] = p;
                sym.push_back(std::move(h));
                sym_inv.push_back(std::move(inv));
            }
    }

    // True when a symmetry maps every completion of sig to a matching that
    // is lexicographically smaller, so this subtree repeats another one.
    bool dominated(const std::vector<int> &sig) const {
        for (size_t g = 0; g < sym.size(); ++g) {
            const auto &h = sym[g], &inv = sym_inv[g];
            for (int x = 0; x < N; ++x) {
                int a = sig[x], y = sig[inv[x]];
                if (a < 0 || y < 0)
                    break;
                int b = h[y];
                if (b < a)
                    return true;
                if (b > a)
                    break;
            }
        }
        return false;
    }

    std::vector<std::vector<int>> sym, sym_inv;

    bool positive(int a, int p, int q) const { return sgn[a][vert[a][p]] == sgn[a][vert[a][q]]; }
};

// Faces and components of the partial map on the matched points. Face f
// walks the darts walk_flat[walk_begin[f] .. walk_begin[f + 1]).
struct MapState {
    std::vector<int> next_matched, face, angle_face;
    std::vector<int> walk_flat, walk_begin;
    std::vector<char> closed;
    std::vector<int> comp;
    int components = 0, genus = 0, F = 0;

    int walk_size(int f) const { return walk_begin[f + 1] - walk_begin[f]; }
    int walk_at(int f, int i) const { return walk_flat[walk_begin[f] + i]; }
};

void compute_state(const Context &c, int a, const std::vector<int> &sig, MapState &S) {
    const int N = c.N, nv = c.nv[a];
    const auto &V = c.vert[a];
    const auto &R = c.rho[a];
    S.next_matched.assign(N, -1);
    S.face.assign(N, -1);
    S.angle_face.assign(N, -1);
    S.walk_flat.clear();
    S.walk_begin.assign(1, 0);
    S.closed.clear();
    // walking each rotation backwards twice gives the next matched dart
    for (int x = 0; x < nv; ++x) {
        const auto &cy = c.cycle[a][x];
        const int m = static_cast<int>(cy.size());
        int next = -1;
        for (int i = 2 * m - 1; i >= 0; --i) {
            int p = cy[i % m];
            S.next_matched[p] = next;
            if (sig[p] >= 0)
                next = p;
        }
    }
    for (int p = 0; p < N; ++p) {
        if (sig[p] < 0 || S.face[p] >= 0)
            continue;
        bool closed = true;
        const int f = static_cast<int>(S.closed.size());
        for (int y = p; S.face[y] < 0;) {
            S.face[y] = f;
            S.walk_flat.push_back(y);
            int s = sig[y], nx = S.next_matched[s];
            if (R[s] != nx)
                closed = false;
            y = nx;
        }
        S.walk_begin.push_back(static_cast<int>(S.walk_flat.size()));
        S.closed.push_back(closed);
    }
    S.F = static_cast<int>(S.closed.size());
    UnionFind uf(nv);
    for (int p = 0; p < N; ++p)
        if (sig[p] >= 0)
            uf.unite(V[p], V[sig[p]]);
    S.comp.assign(nv, -1);
    S.components = 0;
    std::vector<int> root(nv, -1), cv(nv, 0), ce(nv, 0), cf(nv, 0);
    std::vector<char> has(nv, 0);
    for (int x = 0; x < nv; ++x) {
        int r = uf.find(x);
        if (root[r] < 0)
            root[r] = S.components++;
        S.comp[x] = root[r];
    }
    for (int p = 0; p < N; ++p)
        if (sig[p] >= 0) {
            has[V[p]] = 1;
            if (p < sig[p])
                ++ce[S.comp[V[p]]];
        }
    for (int x = 0; x < nv; ++x) {
        ++cv[S.comp[x]];
        if (!has[x])
            ++cf[S.comp[x]];
    }
    for (int f = 0; f < S.F; ++f)
        ++cf[S.comp[V[S.walk_at(f, 0)]]];
    S.genus = 0;
    for (int k = 0; k < S.components; ++k)
        S.genus += (2 - cv[k] + ce[k] - cf[k]) / 2;
    for (int p = 0; p < N; ++p)
        if (sig[p] < 0) {
            int q = S.next_matched[p];
            S.angle_face[p] = q >= 0 ? S.face[q] : -1 - V[p];
        }
}

// Bit L is set when L slots from s, with partner run from slot t0 of y, may
// form one family under the label rules: a label repeated in a positive
// family sits on a Scharlemann bigon of it, no torus family has a label
// three times, and a torus positive family at its cap has a Scharlemann bigon.
std::uint64_t label_runs(const Context &c, int a, int x, int s, int y, int t0, int eps, int first, int top) {
    std::uint64_t fit = ~std::uint64_t{0};
    if (y < 0 || y == x || top <= first)
        return fit;
    const int m = c.mval[a], n = c.nv[1 - a];
    const bool pos = c.sgn[a][x] == c.sgn[a][y];
    const auto &A = c.at[a][x], &B = c.at[a][y];
    thread_local std::vector<int> lx, ly, twice, thrice;
    thread_local std::vector<char> covered;
    lx.resize(top);
    ly.resize(top);
    twice.assign(n + 1, 0);
    thrice.assign(n + 1, 0);
    covered.assign(n + 1, 0);
    int bigons = 0;
    for (int L = 1; L <= top; ++L) {
        const int r = L - 1;
        lx[r] = c.label[a][A[(s + r) % m]];
        ly[r] = c.label[a][B[((t0 + r * eps) % m + m) % m]];
        ++twice[lx[r]];
        ++twice[ly[r]];
        ++thrice[lx[r]];
        if (ly[r] != lx[r])
            ++thrice[ly[r]];
        if (r > 0 && pos) {
            int p = lx[r - 1], q = ly[r - 1];
            bool same = std::min(p, q) == std::min(lx[r], ly[r]) && std::max(p, q) == std::max(lx[r], ly[r]);
            bool ab = q == p % n + 1, ba = p == q % n + 1;
            if (same && p != q && (ab || ba)) {
                covered[p] = covered[q] = 1;
                ++bigons;
            }
        }
        if (L <= first || L >= 64)
            continue;
        bool good = true;
        for (int l = 1; l <= n && good; ++l) {
            if (pos && twice[l] >= 2 && !covered[l])
                good = false;
            if (a == 1 && thrice[l] >= 3)
                good = false;
        }
        if (a == 1 && pos && 2 * L == c.m.n1 + 2 && bigons == 0)
            good = false;
        if (!good)
            fit &= ~(std::uint64_t{1} << L);
    }
    return fit;
}

// Fewest families the slots of vertex x can split into in any completion.
int min_families(const Context &c, int a, int x, const std::vector<int> &sig) {
    const int m = c.mval[a];
    const auto &A = c.at[a][x];
    const int loose_cap = std::max(c.cap_pos[a], c.cap_neg[a]);
    auto wrap = [m](int v) { return (v % m + m) % m; };
    // reach[s]: longest run of slots from s that can still be one family
    // (consecutive matched ends land consecutively on a single vertex);
    // fits[s] narrows the lengths by labels
    thread_local std::vector<int> reach, best;
    thread_local std::vector<std::uint64_t> fits;
    reach.assign(m, 0);
    fits.assign(m, ~std::uint64_t{0});
    for (int s = 0; s < m; ++s) {
        int y = -1, t0 = 0, eps = 0, cap = loose_cap, L = 0, first = 0;
        auto partner_free = [&](int r) {
            int q = c.at[a][y][wrap(t0 + r * eps)];
            return sig[q] < 0 && q != A[(s + r) % m];
        };
        for (; L < m && L < cap; ++L) {
            int p = A[(s + L) % m];
            if (sig[p] < 0) {
                if (y >= 0 && !partner_free(L))
                    break;
                continue;
            }
            int q = sig[p], yy = c.vert[a][q], t = c.slot[a][q];
            if (y < 0) {
                y = yy;
                first = L;
                eps = -c.sgn[a][x] * c.sgn[a][yy];
                t0 = wrap(t - L * eps);
                cap = c.sgn[a][x] == c.sgn[a][y] ? c.cap_pos[a] : c.cap_neg[a];
                bool earlier = L < cap;
                for (int r = 0; r < L && earlier; ++r)
                    earlier = partner_free(r);
                if (!earlier) {
                    // only the unmatched slots before p fit
                    cap = loose_cap;
                    y = -1;
                    break;
                }
            } else if (yy != y || wrap(t0 + L * eps) != t) {
                break;
            }
        }
        reach[s] = std::min(L, cap);
        fits[s] = label_runs(c, a, x, s, y, t0, eps, first, reach[s]);
    }
    int start = -1;
    for (int s = 0; s < m && start < 0; ++s)
        if (reach[s] < 2)
            start = (s + 1) % m;
    auto dp = [&](int st) {
        best.assign(m + 1, INF);
        best[0] = 0;
        for (int i = 0; i < m; ++i) {
            if (best[i] >= INF)
                continue;
            const int at = (st + i) % m, top = std::min(reach[at], m - i);
            for (int L = 1; L <= top; ++L)
                if ((L >= 64 || ((fits[at] >> L) & 1)))
                    best[i + L] = std::min(best[i + L], best[i] + 1);
        }
        return best[m];
    };
    if (start >= 0)
        return dp(start);
    // some family of an optimal split covers slot 0: it starts at 0 or wraps
    int b = dp(0);
    for (int s = 1; s < m; ++s)
        if (s + reach[s] > m)
            b = std::min(b, dp(s));
    return b;
}

struct Outcome {
    std::optional<Violation> violation;
    bool complete = false;
    int branch = -1;
    std::vector<int> options;
};

std::string id_list(const std::vector<int> &v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// Sets of closed faces at least one of which must end up non-disk (hold a
// mark, a handle foot or a join). Faces are tagged (graph, face).
struct Witness {
    std::vector<std::pair<int, int>> faces;
    const char *constraint;
};

std::optional<Violation> pack_witnesses(const Context &c, const std::vector<int> &sig, const MapState S[2]) {
    const bool full = c.profile == Profile::full;
    std::vector<Witness> single[2], multi;
    // label pair of a closed face all of whose edges are positive with a
    // constant consecutive pair; 0 otherwise
    auto scharlemann_low = [&](int a, int f) {
        const int size = S[a].walk_size(f), n = c.nv[1 - a];
        if (!S[a].closed[f] || size < 2 || n < 2)
            return 0;
        int low = 0;
        for (int i = 0; i < size; ++i) {
            int y = S[a].walk_at(f, i);
            for (int k = 0; k < i; ++k) {
                int z = S[a].walk_at(f, k);
                if (std::min(z, sig[z]) == std::min(y, sig[y]))
                    return 0;
            }
            if (!c.positive(a, y, sig[y]))
                return 0;
            int l1 = c.label[a][y], l2 = c.label[a][sig[y]];
            int l = 0;
            if (l1 != l2) {
                bool ab = l2 == l1 % n + 1, ba = l1 == l2 % n + 1;
                l = ab && ba ? std::min(l1, l2) : ab ? l1 : ba ? l2 : 0;
            }
            if (l == 0 || (low && l != low))
                return 0;
            low = l;
        }
        return low;
    };
    std::vector<int> sch_low[2];
    for (int a = 0; a < 2; ++a) {
        sch_low[a].assign(S[a].F, 0);
        for (int f = 0; f < S[a].F; ++f) {
            if (!S[a].closed[f])
                continue;
            if (S[a].walk_size(f) == 1) {
                single[a].push_back({{{a, f}}, "trivial-loop"});
                continue;
            }
            sch_low[a][f] = scharlemann_low(a, f);
            if (sch_low[a][f] && !c.scharlemann_allowed[a])
                single[a].push_back({{{a, f}}, "scharlemann-separating"});
        }
    }
    // closed bigon between consecutive darts y, rho(y)
    auto bigon_after = [&](int a, int y) {
        int z = c.rho[a][y];
        if (sig[z] < 0)
            return -1;
        int f = S[a].face[z];
        if (!S[a].closed[f] || S[a].walk_size(f) != 2)
            return -1;
        if (std::min(y, sig[y]) == std::min(z, sig[z]))
            return -1;
        return f;
    };
    if (full) {
        std::map<std::pair<int, int>, int> bigon1;
        for (int f = 0; f < S[0].F; ++f) {
            if (!S[0].closed[f] || S[0].walk_size(f) != 2)
                continue;
            int w0 = S[0].walk_at(f, 0), w1 = S[0].walk_at(f, 1);
            int e = std::min(w0, sig[w0]), g = std::min(w1, sig[w1]);
            if (e != g)
                bigon1[{std::min(e, g), std::max(e, g)}] = f;
        }
        for (int f = 0; f < S[1].F; ++f) {
            if (!S[1].closed[f] || S[1].walk_size(f) != 2)
                continue;
            int w0 = S[1].walk_at(f, 0), w1 = S[1].walk_at(f, 1);
            int e = std::min(w0, sig[w0]), g = std::min(w1, sig[w1]);
            auto it = bigon1.find({std::min(e, g), std::max(e, g)});
            if (e != g && it != bigon1.end())
                multi.push_back({{{0, it->second}, {1, f}}, "parallel-in-both"});
        }
        for (int a = 0; a < 2; ++a) {
            if (c.nv[1 - a] <= 2)
                continue;
            for (int y = 0; y < c.N; ++y) {
                if (sig[y] < 0)
                    continue;
                int y1 = c.rho[a][y], y2 = c.rho[a][y1];
                int b0 = bigon_after(a, y), b1 = b0 >= 0 ? bigon_after(a, y1) : -1,
                    b2 = b1 >= 0 ? bigon_after(a, y2) : -1;
                if (b2 >= 0 && sch_low[a][b1])
                    multi.push_back({{{a, b0}, {a, b1}, {a, b2}}, "extended-scharlemann"});
            }
        }
        std::vector<int> sch2;
        for (int f = 0; f < S[1].F; ++f)
            if (sch_low[1][f])
                sch2.push_back(f);
        for (size_t i = 0; i < sch2.size(); ++i)
            for (size_t j = i + 1; j < sch2.size(); ++j)
                if (sch_low[1][sch2[i]] != sch_low[1][sch2[j]])
                    multi.push_back({{{1, sch2[i]}, {1, sch2[j]}}, "torus-scharlemann-pairs"});
        if (c.m.n1 >= 3 && c.m.n2 == 4 && c.m.delta >= 4) {
            std::map<int, int> by_pair;
            for (int f = 0; f < S[0].F; ++f)
                if (sch_low[0][f] && S[0].walk_size(f) == 2)
                    by_pair.emplace(sch_low[0][f], f);
            if (by_pair.size() == 4) {
                Witness w{{}, "four-scharlemann-pairs"};
                for (auto [l, f] : by_pair)
                    w.faces.push_back({0, f});
                multi.push_back(w);
            }
        }
    }
    {
        std::vector<int> sch1;
        for (int f = 0; f < S[0].F; ++f)
            if (sch_low[0][f])
                sch1.push_back(f);
        const int n = c.m.n2;
        for (size_t i = 0; i < sch1.size(); ++i)
            for (size_t j = i + 1; j < sch1.size(); ++j) {
                int x = sch_low[0][sch1[i]], y = sch_low[0][sch1[j]];
                int xh = x % n + 1, yh = y % n + 1;
                bool disjoint = x != y && x != yh && xh != y && xh != yh;
                if (disjoint && (x - y) % 2 != 0)
                    multi.push_back({{{0, sch1[i]}, {0, sch1[j]}}, "scharlemann-pair-parity"});
            }
    }

    int budget[2];
    budget[0] = 2 * S[0].components;
    budget[1] = S[1].genus >= 1 ? 2 * (S[1].components - 1) : 2 * S[1].components;
    std::set<std::pair<int, int>> used;
    int count[2] = {0, 0}, shared = 0;
    for (int a = 0; a < 2; ++a)
        for (auto &w : single[a]) {
            if (!used.insert(w.faces[0]).second)
                continue;
            if (++count[a] > budget[a])
                return Violation{w.constraint, std::string(a ? "torus" : "annulus") + " needs " +
                                                   std::to_string(count[a]) + " non-disk faces, at most " +
                                                   std::to_string(budget[a]) + " available"};
        }
    for (auto &w : multi) {
        bool free = std::all_of(w.faces.begin(), w.faces.end(), [&](auto &f) { return !used.count(f); });
        if (!free)
            continue;
        for (auto &f : w.faces)
            used.insert(f);
        bool only0 = std::all_of(w.faces.begin(), w.faces.end(), [](auto &f) { return f.first == 0; });
        bool only1 = std::all_of(w.faces.begin(), w.faces.end(), [](auto &f) { return f.first == 1; });
        if (only0)
            ++count[0];
        else if (only1)
            ++count[1];
        else
            ++shared;
        if (count[0] > budget[0] || count[1] > budget[1] || count[0] + count[1] + shared > budget[0] + budget[1])
            return Violation{w.constraint, "witness faces exceed the " + std::to_string(budget[0] + budget[1]) +
                                               " non-disk faces available"};
    }
    return std::nullopt;
}

Outcome examine(const Context &c, const std::vector<int> &sig) {
    Outcome out;
    MapState S[2];
    compute_state(c, 0, sig, S[0]);
    compute_state(c, 1, sig, S[1]);
    if (S[0].genus > 0 || S[1].genus > 1) {
        out.violation = Violation{"well-formed", "partial map exceeds the surface genus"};
        return out;
    }
    for (int a = 0; a < 2; ++a) {
        int total = 0, least = INF;
        std::vector<int> per;
        for (int x = 0; x < c.nv[a]; ++x) {
            int b = min_families(c, a, x, sig);
            per.push_back(b);
            total += b;
            least = std::min(least, b);
        }
        if (least >= INF) {
            out.violation = Violation{"reduced-bounds", std::string(a ? "torus" : "annulus") +
                                                            " vertex slots admit no family split within the caps"};
            return out;
        }
        bool over = a == 0 ? total > 2 * (3 * c.nv[0] - 2) || least >= 6 : total > 6 * c.nv[1];
        if (over) {
            out.violation = Violation{"reduced-bounds", std::string(a ? "torus" : "annulus") +
                                                            " needs at least " + std::to_string(total / 2) +
                                                            " reduced edges; families per vertex " + id_list(per)};
            return out;
        }
    }
    if (auto v = pack_witnesses(c, sig, S)) {
        out.violation = v;
        return out;
    }
    // branch on a point next to the most matched annulus darts, then on the
    // fewest partners; counting for a point stops once it cannot win
    auto admissible = [&](int p, int q) {
        if (q == p || sig[q] >= 0 || c.positive(0, p, q) == c.positive(1, p, q))
            return 0;
        int u = c.vert[0][p], uq = c.vert[0][q];
        if (S[0].comp[u] == S[0].comp[uq] && S[0].angle_face[p] != S[0].angle_face[q])
            return 1;
        int v = c.vert[1][p], vq = c.vert[1][q];
        if (S[1].genus >= 1 && S[1].comp[v] == S[1].comp[vq] && S[1].angle_face[p] != S[1].angle_face[q])
            return 1;
        return 2;
    };
    bool any = false;
    int best = INF, best_near = -1;
    for (int p = 0; p < c.N; ++p) {
        if (sig[p] >= 0)
            continue;
        any = true;
        const int near = (sig[c.rho[0][p]] >= 0) + (sig[c.rho_inv[0][p]] >= 0);
        int count = 0;
        bool parity_ok = false;
        for (int q = 0; q < c.N && (count == 0 || near > best_near || (near == best_near && count < best)); ++q) {
            int k = admissible(p, q);
            parity_ok = parity_ok || k > 0;
            count += k == 2;
        }
        if (count == 0) {
            out.violation = parity_ok ? Violation{"well-formed", "point " + std::to_string(p) +
                                                                     " has no partner keeping the surfaces"}
                                      : Violation{"parity", "point " + std::to_string(p) +
                                                                " has no partner of opposite signs"};
            return out;
        }
        if (near > best_near || (near == best_near && count < best)) {
            best = count;
            best_near = near;
            out.branch = p;
        }
    }
    if (any)
        for (int q = 0; q < c.N; ++q)
            if (admissible(out.branch, q) == 2)
                out.options.push_back(q);
    out.complete = !any;
    return out;
}

// Sign vectors up to rotation and global negation.
bool canonical_signs(int n, int mask) {
    auto bit = [&](int m, int i) { return (m >> (i % n)) & 1; };
    for (int r = 0; r < n; ++r)
        for (int neg = 0; neg < 2; ++neg) {
            int v = 0;
            for (int i = 0; i < n; ++i)
                v |= (bit(mask, i + r) ^ neg) << i;
            if ((v & 1) == 0 && v < mask)
                return false;
        }
    return true;
}

std::vector<Sign> signs_of(int n, int mask) {
    std::vector<Sign> s(n);
    for (int i = 0; i < n; ++i)
        s[i] = (mask >> i) & 1 ? Sign::minus : Sign::plus;
    return s;
}

std::vector<PointModel> configurations(const SearchSpec &spec, bool reduce_symmetry) {
    std::vector<PointModel> out;
    for (int d = 1; d < std::max(2, spec.delta); ++d) {
        if (std::gcd(d, spec.delta) != 1)
            continue;
        // mirroring the torus side flips the sense, so one sense suffices
        // when mirror images are identified
        if (reduce_symmetry && spec.reflection && d > spec.delta - d)
            continue;
        for (int mu = 0; mu < (1 << spec.n1); ++mu)
            for (int mv = 0; mv < (1 << spec.n2); ++mv) {
                if (reduce_symmetry && ((mu & 1) || (mv & 1) || !canonical_signs(spec.n1, mu) ||
                                        !canonical_signs(spec.n2, mv)))
                    continue;
                PointModel m;
                m.n1 = spec.n1;
                m.n2 = spec.n2;
                m.delta = spec.delta;
                m.d_eff = spec.delta == 1 ? 0 : d;
                m.su = signs_of(spec.n1, mu);
                m.sv = signs_of(spec.n2, mv);
                out.push_back(m);
            }
    }
    return out;
}

struct Shared {
    const SearchSpec &spec;
    std::chrono::steady_clock::time_point start;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> exceeded{false};
    explicit Shared(const SearchSpec &s) : spec(s), start(std::chrono::steady_clock::now()) {}

    bool charge() {
        std::uint64_t n = ++nodes;
        if (n > spec.node_budget)
            exceeded = true;
        if ((n & 255) == 0) {
            double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (el > spec.time_budget)
                exceeded = true;
        }
        return !exceeded;
    }
};

struct Partial {
    std::map<std::string, Survivor> survivors;
    std::uint64_t nodes = 0, leaves = 0, pairs = 0;
    std::map<std::string, std::uint64_t> eliminations;
    std::vector<CertificateRecord> certificate;
};

std::optional<Violation> trivial_loop(const EmbeddedGraph &g) {
    Topology t = analyze(g);
    for (int e = 0; e < t.E; ++e)
        if (t.vert[2 * e] == t.vert[2 * e + 1] && is_trivial_loop(g, t, e))
            return Violation{"trivial-loop", std::string(surface_name(g.surface)) + " edge " + std::to_string(e)};
    return std::nullopt;
}

bool has_loop_face(const EmbeddedGraph &bare) {
    Topology t = analyze(bare, false);
    return std::any_of(t.walks.begin(), t.walks.end(), [](const FaceWalk &w) { return w.size() == 1; });
}

class Evaluator {
  public:
    Evaluator(const SearchSpec &spec, const PointModel &m, Partial &out, const std::string &tag)
        : spec_(spec), m_(m), out_(out), tag_(tag) {}

    // prune_loops: arrangements leaving a loop face a disk are skipped as a
    // group instead of being evaluated one by one.
    void leaf(const std::vector<int> &sigma, bool prune_loops) {
        ++out_.leaves;
        GraphPair bare = build_pair(m_, sigma);
        std::vector<Extras> good1, good2;
        if (prune_loops) {
            bool loop_faces = has_loop_face(bare.g1) || has_loop_face(bare.g2);
            if (loop_faces)
                eliminate(sigma, nullptr, nullptr,
                          {"trivial-loop", "arrangements leaving a face bounded by one loop a disk"});
            good1 = extras_choices(bare.g1, true);
            good2 = extras_choices(bare.g2, true);
            if ((good1.empty() || good2.empty()) && !loop_faces)
                eliminate(sigma, nullptr, nullptr, {"well-formed", "no embedding extras fit the surfaces"});
        } else {
            auto x1s = extras_choices(bare.g1), x2s = extras_choices(bare.g2);
            if (x1s.empty() || x2s.empty()) {
                eliminate(sigma, nullptr, nullptr, {"well-formed", "no embedding extras fit the surfaces"});
                return;
            }
            for (auto &x : x1s) {
                EmbeddedGraph g = bare.g1;
                g.extras = x;
                if (auto v = trivial_loop(g))
                    eliminate(sigma, &x, &x2s.front(), *v);
                else
                    good1.push_back(x);
            }
            for (auto &x : x2s) {
                EmbeddedGraph g = bare.g2;
                g.extras = x;
                if (auto v = trivial_loop(g))
                    eliminate(sigma, &x1s.front(), &x, *v, !good1.empty());
                else
                    good2.push_back(x);
            }
        }
        for (auto &x1 : good1)
            for (auto &x2 : good2) {
                GraphPair p = bare;
                p.g1.extras = x1;
                p.g2.extras = x2;
                ++out_.pairs;
                Evaluation ev = evaluate(p, spec_.profile);
                if (!ev.survivor) {
                    eliminate(sigma, &x1, &x2, ev.violations.front());
                    continue;
                }
                std::string code = code_string(canonicalize_pair(p, spec_.reflection));
                out_.survivors.emplace(code, Survivor{code, p});
                if (spec_.certificates)
                    out_.certificate.push_back(
                        {node_name(), encode_config(m_, sigma, &x1, &x2), code, "survivor", "", ""});
            }
    }

    void eliminate(const std::vector<int> &sigma, const Extras *x1, const Extras *x2, const Violation &v,
                   bool count = true) {
        if (!count)
            return;
        ++out_.eliminations[v.constraint];
        if (spec_.certificates)
            out_.certificate.push_back(
                {node_name(), encode_config(m_, sigma, x1, x2), "", "eliminated", v.constraint, v.witness});
    }

    std::string node_name() { return tag_ + "." + std::to_string(serial_++); }

  private:
    const SearchSpec &spec_;
    const PointModel &m_;
    Partial &out_;
    std::string tag_;
    std::uint64_t serial_ = 0;
};

void search_subtree(const SearchSpec &spec, const PointModel &m, Shared &shared, Partial &out,
                    const std::string &tag) {
    Context c(m, spec.profile);
    Evaluator ev(spec, m, out, tag);
    std::vector<int> sig(c.N, -1);
    std::function<void()> rec = [&]() {
        if (!shared.charge())
            return;
        ++out.nodes;
        Outcome o = examine(c, sig);
        if (o.violation) {
            ev.eliminate(sig, nullptr, nullptr, *o.violation);
            return;
        }
        if (o.complete) {
            ev.leaf(sig, true);
            return;
        }
        int p = o.branch;
        for (int q : o.options) {
            sig[p] = q;
            sig[q] = p;
            if (!c.dominated(sig))
                rec();
            sig[p] = sig[q] = -1;
            if (shared.exceeded)
                return;
        }
    };
    rec();
}

void naive_subtree(const SearchSpec &spec, const PointModel &m, Shared &shared, Partial &out,
                   const std::string &tag) {
    Evaluator ev(spec, m, out, tag);
    const int N = m.num_points();
    std::vector<int> sig(N, -1);
    std::function<void()> rec = [&]() {
        int p = 0;
        while (p < N && sig[p] >= 0)
            ++p;
        if (p == N) {
            if (!shared.charge())
                return;
            ++out.nodes;
            ev.leaf(sig, false);
            return;
        }
        for (int q = p + 1; q < N && !shared.exceeded; ++q) {
            if (sig[q] >= 0)
                continue;
            sig[p] = q;
            sig[q] = p;
            rec();
            sig[p] = sig[q] = -1;
        }
    };
    rec();
}

CensusResult run(const SearchSpec &spec, bool naive) {
    check_spec(spec);
    auto configs = configurations(spec, !naive);
    Shared shared(spec);
    std::vector<Partial> parts(configs.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (size_t i = next++; i < configs.size(); i = next++) {
            if (shared.exceeded)
                break;
            std::string tag = "c" + std::to_string(i);
            if (naive)
                naive_subtree(spec, configs[i], shared, parts[i], tag);
            else
                search_subtree(spec, configs[i], shared, parts[i], tag);
        }
    };
    int workers = std::min<int>(spec.workers, std::max<size_t>(1, configs.size()));
    if (workers <= 1)
        work();
    else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto &t : pool)
            t.join();
    }
    CensusResult r;
    r.spec = spec;
    std::map<std::string, Survivor> merged;
    for (auto &p : parts) {
        for (auto &[code, s] : p.survivors)
            merged.emplace(code, s);
        r.nodes += p.nodes;
        r.leaves += p.leaves;
        r.pairs_evaluated += p.pairs;
        for (auto &[k, v] : p.eliminations)
            r.eliminations[k] += v;
        for (auto &c : p.certificate)
            r.certificate.push_back(std::move(c));
    }
    std::set<std::string> mirrored;
    for (auto &[code, s] : merged) {
        r.survivors.push_back(s);
        mirrored.insert(spec.reflection ? code : code_string(canonicalize_pair(s.pair, true)));
        if (spec.reflection)
            r.oriented_classes += oriented_classes(s.pair);
    }
    r.mirror_classes = static_cast<int>(mirrored.size());
    if (!spec.reflection)
        r.oriented_classes = static_cast<int>(r.survivors.size());
    r.exhaustive = !shared.exceeded;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - shared.start).count();
    return r;
}

} // namespace

std::optional<Violation> check_partial(const PointModel &m, const std::vector<int> &sigma, Profile profile) {
    Context c(m, profile);
    return examine(c, sigma).violation;
}

CensusResult enumerate(const SearchSpec &spec) { return run(spec, false); }

CensusResult enumerate_naive(const SearchSpec &spec) { return run(spec, true); }

std::string replay(const CertificateRecord &r, Profile profile) {
    DecodedConfig d = decode_config(r.config);
    if (!d.has_extras) {
        bool complete = std::none_of(d.sigma.begin(), d.sigma.end(), [](int s) { return s < 0; });
        if (!complete) {
            auto v = check_partial(d.model, d.sigma, profile);
            return v ? v->constraint : "";
        }
        auto v = check_partial(d.model, d.sigma, profile);
        if (v)
            return v->constraint;
        GraphPair bare = build_pair(d.model, d.sigma);
        if (extras_choices(bare.g1).empty() || extras_choices(bare.g2).empty())
            return "well-formed";
        return has_loop_face(bare.g1) || has_loop_face(bare.g2) ? "trivial-loop" : "";
    }
    Evaluation ev = evaluate(build_pair(d.model, d.sigma, d.x1, d.x2), profile);
    return ev.survivor ? "" : ev.violations.front().constraint;
}

std::string certificate_digest(const std::vector<CertificateRecord> &c) {
    // FNV-1a over the serialized records
    std::uint64_t h = 1469598103934665603ull;
    for (auto &r : c) {
        for (unsigned char ch : to_line(r)) {
            h ^= ch;
            h *= 1099511628211ull;
        }
        h ^= '\n';
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string summary_header() { return "n1\tn2\tdelta\tprofile\tsurvivors\tmirror_classes\toriented_classes\tnodes\tleaves\tpairs\texhaustive\tseconds\teliminations"; }

std::string summary_row(const CensusResult &r) {
    std::ostringstream out;
    out << r.spec.n1 << '\t' << r.spec.n2 << '\t' << r.spec.delta << '\t' << profile_name(r.spec.profile) << '\t'
        << r.survivors.size() << '\t' << r.mirror_classes << '\t' << r.oriented_classes << '\t' << r.nodes << '\t' << r.leaves << '\t' << r.pairs_evaluated << '\t'
        << (r.exhaustive ? "yes" : "no") << '\t';
    out.setf(std::ios::fixed);
    out.precision(2);
    out << r.seconds << '\t';
    bool first = true;
    for (auto &[k, v] : r.eliminations) {
        out << (first ? "" : ",") << k << '=' << v;
        first = false;
    }
    return out.str();
}

} // namespace fatgraph
