#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fatgraph/census.hpp"
#include "fatgraph/disk_graphs.hpp"
#include "fatgraph/fixtures.hpp"
#include "fatgraph/render.hpp"

using namespace fatgraph;
namespace fs = std::filesystem;

namespace {

constexpr int exit_clean = 0, exit_found = 1, exit_usage = 2, exit_budget = 3;

struct Range {
    int lo = 1, hi = 1;
};

Range parse_range(const std::string &s) {
    Range r;
    auto dash = s.find('-');
    try {
        if (dash == std::string::npos) {
            r.lo = r.hi = std::stoi(s);
        } else {
            r.lo = std::stoi(s.substr(0, dash));
            r.hi = std::stoi(s.substr(dash + 1));
        }
    } catch (const std::exception &) {
        throw CLI::ValidationError("range", "expected N or LO-HI, got '" + s + "'");
    }
    if (r.lo > r.hi)
        throw CLI::ValidationError("range", "empty range '" + s + "'");
    return r;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const fs::path &path, const std::string &text) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << text;
}

// budget knobs are the only settings read from the environment
void apply_env_budgets(SearchSpec &s) {
    if (const char *v = std::getenv("FATGRAPH_NODE_BUDGET"))
        s.node_budget = std::stoull(v);
    if (const char *v = std::getenv("FATGRAPH_TIME_BUDGET"))
        s.time_budget = std::stod(v);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Labeled fat graph pairs on the annulus and the torus"};
    app.require_subcommand(1);

    std::string n1_text = "1", n2_text = "1", delta_text = "4", profile_text = "full", out_dir;
    bool no_reflection = false, certificate = false;
    int workers = 1;
    std::uint64_t node_budget = 0;
    double time_budget = 0;
    auto *enumerate_cmd = app.add_subcommand("enumerate", "run the census over ranges of sizes");
    enumerate_cmd->add_option("--n1", n1_text, "annulus vertices, N or LO-HI");
    enumerate_cmd->add_option("--n2", n2_text, "torus vertices, N or LO-HI");
    enumerate_cmd->add_option("--delta", delta_text, "intersection number, N or LO-HI");
    enumerate_cmd->add_option("--profile", profile_text, "combinatorial or full");
    enumerate_cmd->add_flag("--no-reflection", no_reflection, "keep mirror images apart");
    enumerate_cmd->add_option("--workers", workers, "parallel workers")->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--node-budget", node_budget, "node cap per cell");
    enumerate_cmd->add_option("--time-budget", time_budget, "seconds per cell");
    enumerate_cmd->add_option("--out", out_dir, "directory for survivors, certificates and summary");
    enumerate_cmd->add_flag("--certificate", certificate, "record the certificate stream");

    std::string pair_file;
    auto *check_cmd = app.add_subcommand("check", "validate a pair file");
    check_cmd->add_option("pairfile", pair_file)->required();
    check_cmd->add_option("--profile", profile_text, "combinatorial or full");

    std::string result_id;
    int max_n = 2;
    bool list_results = false;
    auto *verify_cmd = app.add_subcommand("verify", "check a derived result on census output");
    verify_cmd->add_option("result", result_id);
    verify_cmd->add_option("--max-n", max_n, "largest n1 and n2")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--profile", profile_text, "combinatorial or full");
    verify_cmd->add_flag("--list", list_results, "list the registered results");

    std::string oracle_id;
    int max_v = 0, max_e = 8;
    auto *oracle_cmd = app.add_subcommand("oracle", "run a brute-force oracle");
    oracle_cmd->add_option("name", oracle_id, "reduced-annulus-bounds, reduced-torus-bounds or disk-sigma-tau")
        ->required();
    oracle_cmd->add_option("--max-v", max_v, "vertex cap");
    oracle_cmd->add_option("--max-e", max_e, "edge cap (disk graphs)");

    int which = 0;
    auto *render_cmd = app.add_subcommand("render", "emit Graphviz text for a pair file");
    render_cmd->add_option("pairfile", pair_file)->required();
    render_cmd->add_option("--graph", which, "1 annulus only, 2 torus only, 0 both")->check(CLI::Range(0, 2));

    auto *fixtures_cmd = app.add_subcommand("fixtures", "dump the fixture pairs");
    fixtures_cmd->add_option("--out", out_dir, "directory to write <id>.pair files into");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? exit_clean : exit_usage;
    }

    try {
        if (*enumerate_cmd) {
            Range r1 = parse_range(n1_text), r2 = parse_range(n2_text), rd = parse_range(delta_text);
            SearchSpec base;
            base.profile = parse_profile(profile_text);
            base.reflection = !no_reflection;
            base.workers = workers;
            base.certificates = certificate;
            apply_env_budgets(base);
            if (node_budget)
                base.node_budget = node_budget;
            if (time_budget > 0)
                base.time_budget = time_budget;
            std::ostringstream summary, survivors, certs;
            summary << summary_header() << '\n';
            bool exhaustive = true;
            for (int a = r1.lo; a <= r1.hi; ++a)
                for (int b = r2.lo; b <= r2.hi; ++b)
                    for (int d = rd.lo; d <= rd.hi; ++d) {
                        SearchSpec s = base;
                        s.n1 = a;
                        s.n2 = b;
                        s.delta = d;
                        check_spec(s);
                        CensusResult res = enumerate(s);
                        exhaustive = exhaustive && res.exhaustive;
                        summary << summary_row(res) << '\n';
                        for (auto &sv : res.survivors)
                            survivors << "# " << sv.code << '\n' << write_pair(sv.pair) << '\n';
                        for (auto &c : res.certificate)
                            certs << to_line(c) << '\n';
                        if (certificate)
                            summary << "# certificate digest " << certificate_digest(res.certificate) << '\n';
                    }
            std::cout << summary.str();
            if (!out_dir.empty()) {
                fs::create_directories(out_dir);
                write_file(fs::path(out_dir) / "summary.tsv", summary.str());
                write_file(fs::path(out_dir) / "survivors.txt", survivors.str());
                if (certificate)
                    write_file(fs::path(out_dir) / "certificate.jsonl", certs.str());
            }
            if (!exhaustive) {
                std::cerr << "budget exceeded: results are not exhaustive\n";
                return exit_budget;
            }
            return exit_clean;
        }
        if (*check_cmd) {
            GraphPair p = read_pair(read_file(pair_file));
            Evaluation ev = evaluate(p, parse_profile(profile_text));
            std::cout << (ev.survivor ? "clean\n" : format_report(ev.violations));
            return ev.survivor ? exit_clean : exit_found;
        }
        if (*verify_cmd) {
            if (list_results) {
                for (auto &r : derived_results())
                    std::cout << r.id << '\t' << r.statement << '\n';
                return exit_clean;
            }
            if (result_id.empty())
                throw CLI::ValidationError("result", "a result id is required (see --list)");
            SearchSpec base;
            base.profile = parse_profile(profile_text);
            apply_env_budgets(base);
            DerivedReport rep = verify_derived(result_id, max_n, base);
            std::cout << rep.id << ": " << (rep.pass ? "pass" : "fail") << '\n';
            for (auto &c : rep.cells)
                std::cout << "  " << c << '\n';
            for (auto &w : rep.witnesses)
                std::cout << "  witness: " << w << '\n';
            if (!rep.pass)
                for (auto &w : rep.witnesses)
                    if (w.rfind("budget exceeded", 0) == 0)
                        return exit_budget;
            return rep.pass ? exit_clean : exit_found;
        }
        if (*oracle_cmd) {
            if (oracle_id == "disk-sigma-tau") {
                DiskOracleReport r = disk_oracle(max_v ? max_v : 5, max_e);
                std::cout << "disk graphs " << r.graphs << ", sigma checked " << r.sigma_checked
                          << ", tau checked " << r.tau_checked << ", counterexamples " << r.counterexamples.size()
                          << ", alternate reading disagreements " << r.alternate_disagreements << '\n';
                for (auto &c : r.counterexamples)
                    std::cout << "  " << c << '\n';
                return r.counterexamples.empty() ? exit_clean : exit_found;
            }
            BoundsOracleReport r;
            if (oracle_id == "reduced-annulus-bounds")
                r = annulus_bounds_oracle(max_v ? max_v : 3);
            else if (oracle_id == "reduced-torus-bounds")
                r = torus_bounds_oracle(max_v ? max_v : 2);
            else
                throw CLI::ValidationError("name", "unknown oracle '" + oracle_id + "'");
            std::cout << surface_name(r.surface) << " maps " << r.maps << ", counterexamples "
                      << r.counterexamples.size() << '\n';
            for (auto &c : r.counterexamples)
                std::cout << "  " << c << '\n';
            return r.counterexamples.empty() ? exit_clean : exit_found;
        }
        if (*render_cmd) {
            GraphPair p = read_pair(read_file(pair_file));
            if (which == 1)
                std::cout << render_dot(p.g1, "annulus");
            else if (which == 2)
                std::cout << render_dot(p.g2, "torus");
            else
                std::cout << render_dot(p);
            return exit_clean;
        }
        if (*fixtures_cmd) {
            if (!out_dir.empty())
                fs::create_directories(out_dir);
            for (auto &id : fixture_ids()) {
                if (out_dir.empty())
                    std::cout << "# " << id << '\n' << fixture_text(id) << '\n';
                else
                    write_file(fs::path(out_dir) / (id + ".pair"), fixture_text(id));
            }
            return exit_clean;
        }
    } catch (const CLI::ValidationError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
