#include <sstream>

#include "fatgraph/render.hpp"

namespace fatgraph {

namespace {

void body(std::ostringstream &out, const EmbeddedGraph &g, const std::string &prefix, const std::string &vname) {
    Topology t = analyze(g);
    for (int v = 0; v < t.V; ++v)
        out << "    " << prefix << v << " [shape=circle, label=\"" << vname << v + 1
            << (g.sign[v] == Sign::plus ? "+" : "-") << "\"];\n";
    for (auto &c : parallel_classes(g, t)) {
        int d0 = c.side_a.front();
        std::ostringstream tail, head;
        for (size_t i = 0; i < c.side_a.size(); ++i) {
            int d = c.side_a[i];
            tail << (i ? "," : "") << g.label[d];
            head << (i ? "," : "") << g.label[mate(d)];
        }
        out << "    " << prefix << t.vert[d0] << " -- " << prefix << t.vert[mate(d0)] << " [";
        if (c.size() > 1)
            out << "label=\"x" << c.size() << "\", penwidth=" << 1 + c.size() << ", ";
        out << "taillabel=\"" << tail.str() << "\", headlabel=\"" << head.str() << "\"];\n";
    }
    for (auto &m : g.extras.marks)
        out << "    // boundary circle in the face at corner " << m.vertex << " " << m.pos << "\n";
    for (auto &h : g.extras.handle)
        out << "    // handle foot in the face at corner " << h.vertex << " " << h.pos << "\n";
}

} // namespace

std::string render_dot(const EmbeddedGraph &g, const std::string &name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    body(out, g, "x", g.surface == Surface::torus ? "v" : "u");
    out << "}\n";
    return out.str();
}

std::string render_dot(const GraphPair &p) {
    std::ostringstream out;
    out << "graph pair {\n";
    out << "  label=\"delta " << p.delta << ", jump " << p.d << (p.sense > 0 ? "+" : "-") << "\";\n";
    out << "  subgraph cluster_annulus {\n    label=\"annulus\";\n";
    body(out, p.g1, "u", "u");
    out << "  }\n  subgraph cluster_torus {\n    label=\"torus\";\n";
    body(out, p.g2, "v", "v");
    out << "  }\n}\n";
    return out.str();
}

} // namespace fatgraph
