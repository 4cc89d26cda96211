#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fatgraph/union_find.hpp"

namespace fatgraph {

enum class Surface { annulus, torus, disk };

enum class Sign : int8_t { plus = 1, minus = -1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }
inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

// A slot on a vertex: position `pos` in the stored rotation. As a face
// reference it names the corner between slot pos and slot pos+1; pos = -1 is
// the only corner of a vertex without edges.
struct Corner {
    int vertex = 0;
    int pos = -1;
    auto operator<=>(const Corner &) const = default;
};

using EndpointRef = Corner;

// Data that the rotation system alone does not determine.
struct Extras {
    std::vector<Corner> marks;  // annulus: the two boundary circles; disk: the outer face
    std::vector<Corner> handle; // torus with planar rotation: the two feet of the tube
    std::vector<std::pair<Corner, Corner>> joins; // faces of distinct components sharing a region
    bool operator==(const Extras &) const = default;
};

// Edge e owns darts 2e and 2e+1. Rotations list darts in the direction of the
// global surface orientation.
struct EmbeddedGraph {
    Surface surface = Surface::annulus;
    int n_opposite = 0; // 0 for unlabeled graphs
    std::vector<Sign> sign;
    std::vector<std::vector<int>> rotation;
    std::vector<int> label; // per dart, in 1..n_opposite (0 if unlabeled)
    Extras extras;

    int num_vertices() const { return static_cast<int>(rotation.size()); }
    int num_darts() const { return static_cast<int>(label.size()); }
    int num_edges() const { return num_darts() / 2; }
    bool operator==(const EmbeddedGraph &) const = default;
};

inline int mate(int dart) { return dart ^ 1; }
inline int edge_of(int dart) { return dart >> 1; }

class MalformedGraph : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NotALoop : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class NotACycle : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

using FaceWalk = std::vector<int>; // darts; the walk leaves each dart along its edge

// Everything derived from the rotation system and the extras.
struct Topology {
    int V = 0, E = 0, F = 0;
    std::vector<std::vector<int>> rot;        // copy of the rotations
    std::vector<int> vert, pos, rho, rho_inv; // per dart, rho in global direction
    std::vector<int> face;                    // per dart: the face walk leaving it
    std::vector<FaceWalk> walks;              // faces of isolated vertices have empty walks
    std::vector<int> vertex_face;             // per vertex: its face if isolated, else -1
    std::vector<int> comp;                    // per vertex
    int num_components = 0;
    std::vector<int> comp_genus;
    int genus = 0;
    std::vector<int> face_comp;
    // regions of the surface: faces glued by joins and the handle tube
    std::vector<int> region; // per face
    int num_regions = 0;
    std::vector<int> region_faces, region_marks, region_feet;
    bool tube_joins_regions = false; // handle feet sit in two different regions

    int corner_face(const Corner &c) const;
    int corner_face_of_dart(int d) const { return face[rho[d]]; } // corner after dart d
    bool face_is_disk(int f) const;
    int other_end_vertex(int d) const { return vert[d ^ 1]; }
};

// Builds the topology; throws MalformedGraph on structural errors.
Topology analyze(const EmbeddedGraph &g);
// with_extras = false ignores marks, handle and joins: every face is its own region.
Topology analyze(const EmbeddedGraph &g, bool with_extras);
void check_well_formed(const EmbeddedGraph &g);

std::vector<FaceWalk> trace_faces(const EmbeddedGraph &g);

bool is_trivial_loop(const EmbeddedGraph &g, const Topology &t, int edge);
bool is_trivial_loop(const EmbeddedGraph &g, int edge);

struct ParallelClass {
    std::vector<int> edges;   // in fan order
    std::vector<int> side_a;  // dart of each edge on the first side of the fan
    bool cyclic = false;      // the fan closes up on itself
    int size() const { return static_cast<int>(edges.size()); }
};

std::vector<ParallelClass> parallel_classes(const EmbeddedGraph &g, const Topology &t);
std::vector<ParallelClass> parallel_classes(const EmbeddedGraph &g);

struct ReducedGraph {
    EmbeddedGraph graph;             // one edge per class
    std::vector<int> multiplicity;   // per reduced edge
    std::vector<int> class_of_edge;  // per original edge
};

ReducedGraph reduce(const EmbeddedGraph &g);

// cycle: one dart per edge, consecutive darts chained head to tail.
bool is_essential_cycle(const EmbeddedGraph &g, const Topology &t, const std::vector<int> &cycle);
bool is_essential_cycle(const EmbeddedGraph &g, const std::vector<int> &cycle);
// Edge set version used for subgraphs: essential iff not contained in a disk.
bool is_essential_edge_set(const EmbeddedGraph &g, const Topology &t, const std::vector<int> &edges);

// Orders the darts of a closed walk given as an unordered edge set; empty if
// the edges do not form a single cycle through distinct vertices.
// Faces grouped into the pieces of the surface left after cutting along the
// edges flagged in on_cut (per edge). Regions and the handle tube stay glued.
UnionFind sides_without(const EmbeddedGraph &g, const Topology &t, const std::vector<char> &on_cut);

std::vector<int> cycle_from_edges(const EmbeddedGraph &g, const std::vector<int> &edges);
std::vector<int> cycle_from_edges(const EmbeddedGraph &g, const Topology &t, const std::vector<int> &edges);

using CanonicalCode = std::vector<int>;
CanonicalCode canonicalize(const EmbeddedGraph &g, bool allow_reflection);
std::string code_string(const CanonicalCode &c);

struct BoundsReport {
    int vertices = 0, edges = 0, bound = 0, min_valency = 0;
    bool edge_bound_ok = true;
    bool min_valency_ok = true;
    bool ok() const { return edge_bound_ok && min_valency_ok; }
};

BoundsReport check_reduced_bounds(const ReducedGraph &r);
BoundsReport check_reduced_bounds(const EmbeddedGraph &reduced);

std::string write_graph(const EmbeddedGraph &g);
EmbeddedGraph read_graph(const std::string &text);

const char *surface_name(Surface s);

} // namespace fatgraph
