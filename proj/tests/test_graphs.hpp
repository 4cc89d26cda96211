#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fatgraph/core_maps.hpp"

namespace fatgraph::testing {

// Two nested loops at one vertex; the marks sit outside and inside.
inline EmbeddedGraph two_loops_annulus() {
    return read_graph("graph\nsurface annulus\nlabels 0\n"
                      "vertex 0 + 4 : 0.0 1.0 1.1 0.1\n"
                      "mark 0 3\nmark 0 1\nend\n");
}

inline EmbeddedGraph torus_figure_eight() {
    return read_graph("graph\nsurface torus\nlabels 0\n"
                      "vertex 0 + 4 : 0.0 1.0 0.1 1.1\nend\n");
}

inline EmbeddedGraph theta_graph() {
    return read_graph("graph\nsurface disk\nlabels 0\n"
                      "vertex 0 + 3 : 0.0 1.0 2.0\n"
                      "vertex 1 + 3 : 2.1 1.1 0.1\n"
                      "mark 0 0\nend\n");
}

// Loop 0 bounds an empty disk; loop 1 encloses a boundary circle.
inline EmbeddedGraph trivial_loop_graph() {
    return read_graph("graph\nsurface annulus\nlabels 0\n"
                      "vertex 0 + 4 : 0.0 0.1 1.0 1.1\n"
                      "mark 0 2\nmark 0 3\nend\n");
}

// Two vertices with one loop each, the loops nested between the two boundary
// circles.
inline EmbeddedGraph nested_loops_annulus() {
    return read_graph("graph\nsurface annulus\nlabels 0\n"
                      "vertex 0 + 2 : 0.0 0.1\n"
                      "vertex 1 + 2 : 1.0 1.1\n"
                      "mark 0 0\nmark 1 1\njoin 0 1 1 0\nend\n");
}

inline EmbeddedGraph disk_graph(const std::string &body) {
    return read_graph("graph\nsurface disk\nlabels 0\n" + body + "end\n");
}

// Deterministic generator for property tests.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed * 6364136223846793005ull + 1442695040888963407ull) {}
    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  private:
    std::uint64_t state_;
};

// perm[old] = new vertex id
inline EmbeddedGraph relabel(const EmbeddedGraph &g, const std::vector<int> &perm) {
    EmbeddedGraph h = g;
    for (int v = 0; v < g.num_vertices(); ++v) {
        h.rotation[perm[v]] = g.rotation[v];
        h.sign[perm[v]] = g.sign[v];
    }
    auto fix = [&](Corner &c) { c.vertex = perm[c.vertex]; };
    for (auto &c : h.extras.marks)
        fix(c);
    for (auto &c : h.extras.handle)
        fix(c);
    for (auto &[a, b] : h.extras.joins) {
        fix(a);
        fix(b);
    }
    return h;
}

} // namespace fatgraph::testing
