#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fatgraph/core_maps.hpp"
#include "fatgraph/pairing.hpp"

namespace fatgraph {

// combinatorial: constraints read off the graph data and the labeled-graph
// lemmas proved from it. full: adds the topological axioms.
enum class Profile { combinatorial, full };

enum class Provenance { structural, combinatorial, topological_axiom };

struct Constraint {
    std::string id;
    Provenance provenance;
    std::string summary;
};

class UnknownConstraint : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

const std::vector<Constraint> &constraint_registry();
const Constraint &find_constraint(std::string_view id); // throws UnknownConstraint
bool active_in(const Constraint &c, Profile p);

const char *profile_name(Profile p);
Profile parse_profile(std::string_view s);
const char *provenance_name(Provenance p);

struct ScharlemannCycle {
    std::vector<int> darts; // the face walk
    std::vector<int> edges;
    int face = -1;
    int low = 0;  // label pair {low, low + 1 mod n}
    int high = 0;
    int length() const { return static_cast<int>(edges.size()); }
};

std::vector<ScharlemannCycle> find_scharlemann_cycles(const EmbeddedGraph &g, const Topology &t);
std::vector<ScharlemannCycle> find_scharlemann_cycles(const EmbeddedGraph &g);

// Two edges parallel and adjacent to the edges of a length-2 Scharlemann
// cycle, on its outside.
struct ExtendedScharlemann {
    int outer_first = -1, outer_second = -1;
    ScharlemannCycle inner;
};

std::vector<ExtendedScharlemann> find_extended_scharlemann(const EmbeddedGraph &g, const Topology &t);
std::vector<ExtendedScharlemann> find_extended_scharlemann(const EmbeddedGraph &g);

// The vertex sets that can lie on the first boundary side of an essential
// circle in the annulus avoiding g (always includes the empty set and all).
std::vector<std::vector<int>> essential_cut_sides(const EmbeddedGraph &g, const Topology &t);
bool is_k_separable(const EmbeddedGraph &g, int k);
bool is_k_separable(const EmbeddedGraph &g, const Topology &t, int k);

PairReport check_graph_lemmas(const GraphPair &p, Profile profile);
PairReport check_topological_axioms(const GraphPair &p, Profile profile);

struct Evaluation {
    bool survivor = false;
    PairReport violations; // sorted
};

// Structural checks, parity, jumping order, transfers, labeled-graph
// constraints and, under the full profile, the axioms.
Evaluation evaluate(const GraphPair &p, Profile profile);

// One line of the certificate stream (JSON per line).
struct CertificateRecord {
    std::string node;       // search path
    std::string config;     // replayable configuration
    std::string code;       // canonical code when the node is a complete pair
    std::string status;     // survivor | eliminated
    std::string constraint; // empty for survivors
    std::string witness;
    bool operator==(const CertificateRecord &) const = default;
};

std::string to_line(const CertificateRecord &r);
CertificateRecord parse_record(const std::string &line);

} // namespace fatgraph
