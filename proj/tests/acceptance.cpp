#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fatgraph/census.hpp"
#include "fatgraph/disk_graphs.hpp"
#include "fatgraph/fixtures.hpp"

using namespace fatgraph;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int number;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

GraphPair load_fixture(const std::string &id) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + id + ".pair");
    if (!in)
        throw std::runtime_error("missing fixture file " + id + ".pair");
    std::ostringstream s;
    s << in.rdbuf();
    return read_pair(s.str());
}

std::string fixture_code(const std::string &id) { return code_string(canonicalize_pair(load_fixture(id), true)); }

SearchSpec cell(int n1, int n2, int delta, double budget) {
    SearchSpec s;
    s.n1 = n1;
    s.n2 = n2;
    s.delta = delta;
    s.time_budget = budget;
    return s;
}

std::string cell_name(int n1, int n2, int delta) {
    return "(" + std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(delta) + ")";
}

// Runs the cells; expected maps a cell to the fixture it must reproduce,
// every other cell must come out empty.
Outcome census_cells(const std::vector<std::tuple<int, int, int>> &cells,
                     const std::map<std::tuple<int, int, int>, std::string> &expected, double per_cell) {
    Outcome o;
    std::ostringstream detail;
    for (auto [n1, n2, delta] : cells) {
        CensusResult r = enumerate(cell(n1, n2, delta, per_cell));
        std::string name = cell_name(n1, n2, delta);
        detail << name << ' ' << r.survivors.size() << " in " << static_cast<int>(r.seconds + 0.5) << "s; ";
        if (!r.exhaustive) {
            o.pass = false;
            detail << name << " budget exceeded; ";
            continue;
        }
        auto it = expected.find({n1, n2, delta});
        if (it == expected.end()) {
            o.pass = o.pass && r.survivors.empty();
        } else {
            bool match = r.survivors.size() == 1 && r.survivors[0].code == fixture_code(it->second);
            if (!match)
                detail << name << " does not match " << it->second << "; ";
            o.pass = o.pass && match;
        }
    }
    o.detail = detail.str();
    return o;
}

std::vector<Criterion> criteria() {
    std::vector<Criterion> out;
    out.push_back({1, "fixture validation", 1, [] {
                       Outcome o;
                       std::map<std::string, int> jump = {{"fig3_1", 1}, {"fig3_3", 1}, {"fig5_d", 1}, {"fig5_e", 2}};
                       for (auto &[id, d] : jump) {
                           GraphPair p = load_fixture(id);
                           Evaluation ev = evaluate(p, Profile::full);
                           o.detail += id + " " + std::to_string(ev.violations.size()) + " violations; ";
                           o.pass = o.pass && ev.survivor && p.d == d && p == fixture(id);
                       }
                       return o;
                   }});
    out.push_back({2, "single annulus vertex census", 60, [] {
                       std::vector<std::tuple<int, int, int>> cells;
                       for (int n2 = 1; n2 <= 4; ++n2)
                           for (int delta : {4, 5})
                               cells.emplace_back(1, n2, delta);
                       return census_cells(cells, {{{1, 2, 4}, "fig3_1"}}, 60);
                   }});
    out.push_back({3, "single torus vertex census", 60, [] {
                       std::vector<std::tuple<int, int, int>> cells;
                       for (int n1 = 1; n1 <= 4; ++n1)
                           for (int delta : {4, 5})
                               cells.emplace_back(n1, 1, delta);
                       return census_cells(cells, {{{2, 1, 4}, "fig3_3"}}, 60);
                   }});
    out.push_back({4, "two by two census", 300, [] {
                       return census_cells({{2, 2, 4}, {2, 2, 5}}, {{{2, 2, 4}, "fig5_d"}, {{2, 2, 5}, "fig5_e"}},
                                           300);
                   }});
    out.push_back({5, "two torus vertices are empty beyond two annulus vertices", 4 * 600, [] {
                       return census_cells({{3, 2, 4}, {3, 2, 5}, {4, 2, 4}, {4, 2, 5}}, {}, 600);
                   }});
    out.push_back({6, "three or four vertices on both sides are empty", 8 * 600, [] {
                       std::vector<std::tuple<int, int, int>> cells;
                       for (int n1 : {3, 4})
                           for (int n2 : {3, 4})
                               for (int delta : {4, 5})
                                   cells.emplace_back(n1, n2, delta);
                       return census_cells(cells, {}, 600);
                   }});
    out.push_back({7, "reduced map bounds oracle", 60, [] {
                       BoundsOracleReport a = annulus_bounds_oracle(3), t = torus_bounds_oracle(2);
                       return Outcome{a.counterexamples.empty() && t.counterexamples.empty() && a.maps > 0 && t.maps > 0,
                                      "annulus maps " + std::to_string(a.maps) + ", torus maps " +
                                          std::to_string(t.maps) + ", counterexamples " +
                                          std::to_string(a.counterexamples.size() + t.counterexamples.size())};
                   }});
    out.push_back({8, "disk graph sigma and tau oracle", 300, [] {
                       DiskOracleReport r = disk_oracle(5, 8);
                       return Outcome{r.counterexamples.empty() && r.graphs > 0,
                                      "graphs " + std::to_string(r.graphs) + ", sigma checked " +
                                          std::to_string(r.sigma_checked) + ", tau checked " +
                                          std::to_string(r.tau_checked) + ", counterexamples " +
                                          std::to_string(r.counterexamples.size())};
                   }});
    out.push_back({9, "transfer scans on the fixtures", 60, [] {
                       Outcome o;
                       size_t total = 0;
                       for (auto &id : fixture_ids()) {
                           GraphPair p = load_fixture(id);
                           total += check_distance_transfer(p).size() + check_equidistance_transfer(p).size();
                       }
                       o.pass = total == 0;
                       o.detail = std::to_string(total) + " violations";
                       return o;
                   }});
    out.push_back({10, "certificate replay at (2,2,5)", 300, [] {
                       SearchSpec s = cell(2, 2, 5, 300);
                       s.certificates = true;
                       CensusResult r = enumerate(s);
                       size_t ok = 0;
                       for (auto &rec : r.certificate)
                           if (replay(rec, s.profile) == rec.constraint)
                               ++ok;
                       return Outcome{r.exhaustive && !r.certificate.empty() && ok == r.certificate.size(),
                                      std::to_string(ok) + "/" + std::to_string(r.certificate.size()) +
                                          " records replayed"};
                   }});
    out.push_back({11, "naive and pruned searches agree", 300, [] {
                       Outcome o;
                       for (int delta : {4, 5}) {
                           SearchSpec s = cell(1, 2, delta, 300);
                           CensusResult a = enumerate(s), b = enumerate_naive(s);
                           std::set<std::string> ca, cb;
                           for (auto &x : a.survivors)
                               ca.insert(x.code);
                           for (auto &x : b.survivors)
                               cb.insert(x.code);
                           o.pass = o.pass && a.exhaustive && b.exhaustive && ca == cb;
                           o.detail += cell_name(1, 2, delta) + " pruned " + std::to_string(ca.size()) + ", naive " +
                                       std::to_string(cb.size()) + " (" + std::to_string(b.pairs_evaluated) +
                                       " pairs); ";
                       }
                       return o;
                   }});
    return out;
}

} // namespace

int main(int argc, char **argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::atoi(argv[i]));
    int failures = 0;
    for (auto &c : criteria()) {
        if (!only.empty() && !only.count(c.number))
            continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("error: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = secs < c.limit_seconds;
        bool pass = o.pass && in_time;
        failures += !pass;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, c.limit_seconds);
        std::cout << "criterion " << c.number << " " << (pass ? "PASS" : "FAIL") << " [" << timing << "] " << c.name
                  << ": " << o.detail << (in_time ? "" : "(over time)") << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
