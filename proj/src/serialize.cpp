#include <sstream>

#include "fatgraph/core_maps.hpp"

namespace fatgraph {

namespace {

std::string corner_text(const Corner &c) { return std::to_string(c.vertex) + " " + std::to_string(c.pos); }

Surface parse_surface(const std::string &s) {
    if (s == "annulus")
        return Surface::annulus;
    if (s == "torus")
        return Surface::torus;
    if (s == "disk")
        return Surface::disk;
    throw MalformedGraph("unknown surface '" + s + "'");
}

Corner read_corner(std::istringstream &in) {
    Corner c;
    if (!(in >> c.vertex >> c.pos))
        throw MalformedGraph("expected a corner (vertex position)");
    return c;
}

} // namespace

// Format, one record per line:
//   graph
//   surface annulus|torus|disk
//   labels <n_opposite>
//   vertex <id> <+|-> <valency> : <edge>.<end>[/<label>] ...
//   mark <vertex> <pos>        corner after slot pos (pos -1 on an isolated vertex)
//   handle <vertex> <pos>
//   join <vertex> <pos> <vertex> <pos>
//   end
std::string write_graph(const EmbeddedGraph &g) {
    std::ostringstream out;
    out << "graph\n";
    out << "surface " << surface_name(g.surface) << "\n";
    out << "labels " << g.n_opposite << "\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << "vertex " << v << ' ' << (g.sign[v] == Sign::plus ? '+' : '-') << ' ' << g.rotation[v].size() << " :";
        for (int d : g.rotation[v]) {
            out << ' ' << edge_of(d) << '.' << (d & 1);
            if (g.n_opposite > 0)
                out << '/' << g.label[d];
        }
        out << "\n";
    }
    for (auto &c : g.extras.marks)
        out << "mark " << corner_text(c) << "\n";
    for (auto &c : g.extras.handle)
        out << "handle " << corner_text(c) << "\n";
    for (auto &[a, b] : g.extras.joins)
        out << "join " << corner_text(a) << ' ' << corner_text(b) << "\n";
    out << "end\n";
    return out.str();
}

EmbeddedGraph read_graph(const std::string &text) {
    EmbeddedGraph g;
    std::istringstream lines(text);
    std::string line;
    bool started = false, finished = false;
    int max_dart = -1;
    std::vector<std::pair<int, int>> labels; // (dart, label)
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream in(line);
        std::string key;
        if (!(in >> key))
            continue;
        if (finished)
            throw MalformedGraph("text after 'end'");
        if (!started) {
            if (key != "graph")
                throw MalformedGraph("graph text must start with 'graph'");
            started = true;
            continue;
        }
        if (key == "surface") {
            std::string s;
            in >> s;
            g.surface = parse_surface(s);
        } else if (key == "labels") {
            if (!(in >> g.n_opposite) || g.n_opposite < 0)
                throw MalformedGraph("bad labels line");
        } else if (key == "vertex") {
            int id, valency;
            std::string sign, colon;
            if (!(in >> id >> sign >> valency >> colon) || colon != ":")
                throw MalformedGraph("bad vertex line: " + line);
            if (id != g.num_vertices())
                throw MalformedGraph("vertices must be listed in order");
            if (sign != "+" && sign != "-")
                throw MalformedGraph("bad sign on vertex " + std::to_string(id));
            g.sign.push_back(sign == "+" ? Sign::plus : Sign::minus);
            std::vector<int> rot;
            std::string tok;
            while (in >> tok) {
                int edge = 0, end = 0, label = 0;
                char dot = 0, slash = 0;
                std::istringstream t(tok);
                if (!(t >> edge >> dot >> end) || dot != '.' || (end != 0 && end != 1) || edge < 0)
                    throw MalformedGraph("bad edge end token '" + tok + "'");
                if (t >> slash) {
                    if (slash != '/' || !(t >> label))
                        throw MalformedGraph("bad label in token '" + tok + "'");
                }
                int d = 2 * edge + end;
                rot.push_back(d);
                labels.emplace_back(d, label);
                max_dart = std::max(max_dart, d | 1);
            }
            if (static_cast<int>(rot.size()) != valency)
                throw MalformedGraph("valency mismatch on vertex " + std::to_string(id));
            g.rotation.push_back(std::move(rot));
        } else if (key == "mark") {
            g.extras.marks.push_back(read_corner(in));
        } else if (key == "handle") {
            g.extras.handle.push_back(read_corner(in));
        } else if (key == "join") {
            Corner a = read_corner(in);
            Corner b = read_corner(in);
            g.extras.joins.emplace_back(a, b);
        } else if (key == "end") {
            finished = true;
        } else {
            throw MalformedGraph("unknown record '" + key + "'");
        }
    }
    if (!finished)
        throw MalformedGraph("graph text is missing 'end'");
    g.label.assign(max_dart + 1, 0);
    std::vector<char> seen(max_dart + 1, 0);
    for (auto [d, l] : labels) {
        if (seen[d]++)
            throw MalformedGraph("edge end listed twice");
        g.label[d] = l;
    }
    check_well_formed(g);
    return g;
}

} // namespace fatgraph
