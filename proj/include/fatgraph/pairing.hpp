#pragma once

#include <string>
#include <vector>

#include "fatgraph/core_maps.hpp"

namespace fatgraph {

struct Violation {
    std::string constraint;
    std::string witness;
    bool operator==(const Violation &) const = default;
    auto operator<=>(const Violation &) const = default;
};

using PairReport = std::vector<Violation>;

// A shared endpoint: slot pos_u on u-vertex u of the annulus graph and slot
// pos_v on v-vertex v of the torus graph.
struct PointRow {
    int u = 0, pos_u = 0, v = 0, pos_v = 0;
    bool operator==(const PointRow &) const = default;
};

struct GraphPair {
    int delta = 0;
    int d = 1;
    int sense = 1;
    EmbeddedGraph g1; // annulus, vertices u_1..u_{n1}
    EmbeddedGraph g2; // torus, vertices v_1..v_{n2}
    std::vector<PointRow> points;

    int n1() const { return g1.num_vertices(); }
    int n2() const { return g2.num_vertices(); }
    bool operator==(const GraphPair &) const = default;
};

// Dart lookups between the two graphs through the shared points.
struct PairIndex {
    std::vector<int> dart1, dart2;       // per point
    std::vector<int> point1, point2;     // per dart of g1 / g2
    std::vector<int> edge2_of_edge1;     // -1 if the endpoints do not match
    std::vector<int> edge1_of_edge2;
};

// Throws MalformedGraph if the rows do not address every slot exactly once.
PairIndex index_pair(const GraphPair &p);

PairReport validate_pair(const GraphPair &p);
PairReport check_parity_rule(const GraphPair &p);
PairReport check_jumping_order(const GraphPair &p);
PairReport check_distance_transfer(const GraphPair &p);
PairReport check_equidistance_transfer(const GraphPair &p);

// Valid jumping numbers for delta: 1 <= d <= delta/2, coprime to delta
// (d = 1 when delta <= 2).
std::vector<int> jumping_numbers(int delta);

CanonicalCode canonicalize_pair(const GraphPair &p, bool allow_reflection);
// Number of orientation-preserving classes among the mirror images of p
// (each surface reversed independently): 1 when p is amphichiral.
int oriented_classes(const GraphPair &p);

std::string write_pair(const GraphPair &p);
GraphPair read_pair(const std::string &text);

std::string format_report(const PairReport &r);

} // namespace fatgraph
