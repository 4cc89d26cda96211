#include <sstream>

#include "fatgraph/pairing.hpp"

namespace fatgraph {

// Format:
//   fatpair
//   delta <n>
//   jump <d>
//   sense +|-
//   gamma1
//   <graph text, ending with its own 'end'>
//   gamma2
//   <graph text>
//   points
//   <u> <pos_u> <v> <pos_v>     one row per shared endpoint, vertices 0-based
//   end
std::string write_pair(const GraphPair &p) {
    std::ostringstream out;
    out << "fatpair\n";
    out << "delta " << p.delta << "\n";
    out << "jump " << p.d << "\n";
    out << "sense " << (p.sense >= 0 ? '+' : '-') << "\n";
    out << "gamma1\n" << write_graph(p.g1);
    out << "gamma2\n" << write_graph(p.g2);
    out << "points\n";
    for (auto &r : p.points)
        out << r.u << ' ' << r.pos_u << ' ' << r.v << ' ' << r.pos_v << "\n";
    out << "end\n";
    return out.str();
}

GraphPair read_pair(const std::string &text) {
    GraphPair p;
    std::istringstream lines(text);
    std::string line;
    enum { header, graph1, graph2, points, done } state = header;
    bool started = false;
    std::string block;
    auto strip = [](std::string s) {
        auto h = s.find('#');
        if (h != std::string::npos)
            s.erase(h);
        return s;
    };
    while (std::getline(lines, line)) {
        std::string body = strip(line);
        std::istringstream in(body);
        std::string key;
        if (!(in >> key))
            continue;
        if (state == done)
            throw MalformedGraph("text after the end of the pair");
        if (!started) {
            if (key != "fatpair")
                throw MalformedGraph("pair text must start with 'fatpair'");
            started = true;
            continue;
        }
        if (state == graph1 || state == graph2) {
            block += line + "\n";
            if (key == "end") {
                (state == graph1 ? p.g1 : p.g2) = read_graph(block);
                block.clear();
                state = header;
            }
            continue;
        }
        if (state == points) {
            if (key == "end") {
                state = done;
                continue;
            }
            PointRow r;
            std::istringstream row(body);
            if (!(row >> r.u >> r.pos_u >> r.v >> r.pos_v))
                throw MalformedGraph("bad point row: " + line);
            p.points.push_back(r);
            continue;
        }
        if (key == "delta") {
            if (!(in >> p.delta))
                throw MalformedGraph("bad delta line");
        } else if (key == "jump") {
            if (!(in >> p.d))
                throw MalformedGraph("bad jump line");
        } else if (key == "sense") {
            std::string s;
            in >> s;
            if (s != "+" && s != "-")
                throw MalformedGraph("sense must be + or -");
            p.sense = s == "+" ? 1 : -1;
        } else if (key == "gamma1") {
            state = graph1;
        } else if (key == "gamma2") {
            state = graph2;
        } else if (key == "points") {
            state = points;
        } else {
            throw MalformedGraph("unknown record '" + key + "'");
        }
    }
    if (state != done)
        throw MalformedGraph("pair text is missing its final 'end'");
    return p;
}

} // namespace fatgraph
