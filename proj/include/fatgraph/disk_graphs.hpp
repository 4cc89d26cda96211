#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fatgraph/core_maps.hpp"

namespace fatgraph {

class SingleVertex : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class CapsTooLarge : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

enum class VertexKind { interior, boundary, cut };

const char *vertex_kind_name(VertexKind k);

// D is a connected graph on a disk: surface disk, one mark on the outer face.
VertexKind classify_vertex(const EmbeddedGraph &d, int v);
VertexKind classify_vertex(const EmbeddedGraph &d, const Topology &t, int v);

struct DiskStats {
    int a1 = 0, a2 = 0, a3 = 0; // boundary vertices of valency 1, 2, 3
    int l = 0;                  // trivial loops
    int p = 0;                  // adjacent parallel pairs
    int sigma() const { return 3 * a1 + 2 * a2 + a3 + 4 * l + 2 * p; }
    int tau() const { return a1 + a2 + l + p; }
};

DiskStats disk_stats(const EmbeddedGraph &d);

// Keeps the flagged edges (per edge) and carries marks over to the corners
// they fall in; components that come apart are joined along the faces they
// share. Annulus and disk graphs only.
EmbeddedGraph subgraph(const EmbeddedGraph &g, const std::vector<char> &keep);

struct DiskOracleReport {
    int max_vertices = 0, max_edges = 0;
    long graphs = 0;            // disk graphs enumerated, up to isomorphism
    long sigma_checked = 0;     // interior valency >= 6
    long tau_checked = 0;       // no interior vertex
    std::vector<std::string> counterexamples;
    // a_i also counting cut vertices: graphs where the verdict would change
    long alternate_disagreements = 0;
};

// Enumerates connected disk graphs and checks sigma >= 6 and tau >= 2.
DiskOracleReport disk_oracle(int max_vertices, int max_edges);

struct BoundsOracleReport {
    Surface surface = Surface::annulus;
    int max_vertices = 0;
    long maps = 0;              // reduced maps enumerated, up to isomorphism
    std::vector<std::string> counterexamples;
};

// Reduced annulus maps (V <= max_vertices, E <= 3V - 1) against E <= 3V - 2
// and min valency <= 5; reduced cellular torus maps (E <= 3V + 1) against
// E <= 3V. Connected maps only.
BoundsOracleReport annulus_bounds_oracle(int max_vertices);
BoundsOracleReport torus_bounds_oracle(int max_vertices);

} // namespace fatgraph
