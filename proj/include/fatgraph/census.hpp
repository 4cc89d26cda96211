#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fatgraph/lemmas.hpp"
#include "fatgraph/pairing.hpp"

namespace fatgraph {

struct SearchSpec {
    int n1 = 1, n2 = 1, delta = 4;
    Profile profile = Profile::full;
    bool reflection = true;             // identify mirror images
    std::uint64_t node_budget = 100000000;
    double time_budget = 600;           // seconds
    int workers = 1;
    bool certificates = false;
};

// validates ranges; throws std::invalid_argument
void check_spec(const SearchSpec &s);

// Points of a configuration: p = (i*n2 + j)*delta + k is the k-th point
// shared by u_i and v_j. Intrinsic slots: j + n2*((d_eff*k) mod delta) on
// u_i and i + n1*k on v_j. d_eff is a unit mod delta encoding both the
// jumping number and its sense.
struct PointModel {
    int n1 = 1, n2 = 1, delta = 1, d_eff = 1;
    std::vector<Sign> su, sv;

    int num_points() const { return n1 * n2 * delta; }
    int u_of(int p) const { return p / (n2 * delta); }
    int v_of(int p) const { return (p / delta) % n2; }
    int k_of(int p) const { return p % delta; }
    int slot_u(int p) const { return v_of(p) + n2 * ((d_eff * k_of(p)) % delta); }
    int slot_v(int p) const { return u_of(p) + n1 * k_of(p); }
    int pos_u(int p) const;  // global rotation position
    int pos_v(int p) const;
    int jump() const;        // d
    int sense() const;       // +1 or -1
};

// sigma: fixed-point-free involution on the points.
GraphPair build_pair(const PointModel &m, const std::vector<int> &sigma);
GraphPair build_pair(const PointModel &m, const std::vector<int> &sigma, const Extras &x1, const Extras &x2);

// Marks, handle feet and joins that complete a bare graph into one on its
// surface, one representative per arrangement of faces. skip_trivial_loops
// drops the arrangements that leave a face bounded by one loop a disk.
std::vector<Extras> extras_choices(const EmbeddedGraph &bare, bool skip_trivial_loops = false);

// Compact text for a configuration and a (possibly partial) matching, plus
// optional extras; used by certificates.
std::string encode_config(const PointModel &m, const std::vector<int> &sigma, const Extras *x1 = nullptr,
                          const Extras *x2 = nullptr);
struct DecodedConfig {
    PointModel model;
    std::vector<int> sigma;
    bool has_extras = false;
    Extras x1, x2;
};
DecodedConfig decode_config(const std::string &s);

// Checks that decide a partial matching: nullopt if the node stays open.
std::optional<Violation> check_partial(const PointModel &m, const std::vector<int> &sigma, Profile profile);

struct Survivor {
    std::string code;
    GraphPair pair;
};

struct CensusResult {
    SearchSpec spec;
    std::vector<Survivor> survivors; // sorted by code, unique
    // survivor counts with and without identifying mirror images
    int mirror_classes = 0, oriented_classes = 0;
    std::uint64_t nodes = 0, leaves = 0, pairs_evaluated = 0;
    bool exhaustive = true;
    std::map<std::string, std::uint64_t> eliminations;
    std::vector<CertificateRecord> certificate;
    double seconds = 0;
};

CensusResult enumerate(const SearchSpec &spec);
// No pruning: every matching passing the parity rule is completed and
// evaluated.
CensusResult enumerate_naive(const SearchSpec &spec);

// Re-evaluates a certificate record; returns the constraint it triggers
// (empty for a survivor).
std::string replay(const CertificateRecord &r, Profile profile);

std::string certificate_digest(const std::vector<CertificateRecord> &c);
std::string summary_row(const CensusResult &r);
std::string summary_header();

// Derived results re-checked on census output.
struct DerivedReport {
    std::string id;
    bool pass = true;
    std::vector<std::string> cells;     // one line per census cell run
    std::vector<std::string> witnesses; // failures
};

struct DerivedResult {
    std::string id;
    std::string statement;
};

class UnknownResult : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

const std::vector<DerivedResult> &derived_results();
// max_n caps n1 and n2 for statements quantified over sizes.
DerivedReport verify_derived(const std::string &id, int max_n, const SearchSpec &base);

} // namespace fatgraph
