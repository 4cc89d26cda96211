#pragma once

#include <stdexcept>
#include <vector>

#include "fatgraph/core_maps.hpp"

namespace fatgraph {

class SlotNotOnVertex : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

class EndpointsMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class PositiveFamily : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

enum class EdgeSign { positive, negative };

int label_at(const EmbeddedGraph &g, const EndpointRef &slot);

// The label a well-formed vertex carries at `pos`, given the label at slot 0:
// ascending in the global direction at + vertices, descending at - vertices.
int expected_label(Sign s, int n_opposite, int label_at_zero, int pos);

// Distance from slot p to slot q measured in the vertex's own direction
// (global direction at + vertices, reversed at - vertices).
int rho(const EmbeddedGraph &g, int vertex, int pos_p, int pos_q);
int rho_darts(const EmbeddedGraph &g, const Topology &t, int dart_p, int dart_q);

EdgeSign edge_sign(const EmbeddedGraph &g, int edge);
EdgeSign edge_sign(const EmbeddedGraph &g, const Topology &t, int edge);

// For loops both endpoint choices are evaluated; `choice` selects which end
// of each loop plays P_i (0 uses dart 2e, 1 uses dart 2e+1).
bool is_equidistant_pair(const EmbeddedGraph &g, int e1, int e2);
bool is_equidistant_pair(const EmbeddedGraph &g, const Topology &t, int e1, int e2, int choice = 0);

struct PermutationPhi {
    int n = 0;
    std::vector<int> map;                 // map[i] for labels 1..n; 0 where undetermined
    std::vector<std::vector<int>> orbits; // only when map is a full permutation
    int orbit_length = 0;                 // common orbit length, 0 if unequal or partial
    bool total() const;
    PermutationPhi inverse() const;
};

// Labels read at the end of the class recorded in side_a map to the labels at
// the other end.
PermutationPhi family_permutation(const EmbeddedGraph &g, const Topology &t, const ParallelClass &c);
PermutationPhi family_permutation(const EmbeddedGraph &g, const ParallelClass &c);

} // namespace fatgraph
