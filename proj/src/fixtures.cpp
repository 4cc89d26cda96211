#include <map>

#include "fatgraph/fixtures.hpp"

namespace fatgraph {

namespace {

const std::map<std::string, std::string> &texts() {
    static const std::map<std::string, std::string> t = {
        {"fig3_1", R"(fatpair
delta 4
jump 1
sense +
gamma1
graph
surface annulus
labels 2
vertex 0 + 8 : 0.0/1 0.1/2 1.0/1 3.1/2 2.0/1 2.1/2 3.0/1 1.1/2
mark 0 0
mark 0 4
end
gamma2
graph
surface torus
labels 1
vertex 0 + 4 : 0.0/1 1.0/1 2.0/1 3.0/1
vertex 1 - 4 : 0.1/1 1.1/1 2.1/1 3.1/1
end
points
0 0 0 0
0 2 0 1
0 4 0 2
0 6 0 3
0 1 1 0
0 3 1 3
0 5 1 2
0 7 1 1
end

)"},
        {"fig3_3", R"(fatpair
delta 4
jump 1
sense +
gamma1
graph
surface annulus
labels 1
vertex 0 + 4 : 0.0/1 1.0/1 2.0/1 3.0/1
vertex 1 - 4 : 3.1/1 2.1/1 1.1/1 0.1/1
mark 0 3
mark 1 1
end
gamma2
graph
surface torus
labels 2
vertex 0 + 8 : 0.0/1 3.1/2 1.0/1 0.1/2 2.0/1 1.1/2 3.0/1 2.1/2
end
points
0 0 0 0
0 1 0 2
0 2 0 4
0 3 0 6
1 0 0 1
1 3 0 3
1 2 0 5
1 1 0 7
end

)"},
        {"fig5_d", R"(fatpair
delta 4
jump 1
sense +
gamma1
graph
surface annulus
labels 2
vertex 0 + 8 : 0.0/1 0.1/2 1.0/1 4.0/2 2.0/1 5.0/2 3.0/1 1.1/2
vertex 1 - 8 : 6.0/1 7.1/2 7.0/1 6.1/2 2.1/1 4.1/2 3.1/1 5.1/2
mark 0 0
mark 1 1
end
gamma2
graph
surface torus
labels 2
vertex 0 + 8 : 0.0/1 6.0/2 1.0/1 3.1/2 2.0/1 2.1/2 3.0/1 7.0/2
vertex 1 - 8 : 0.1/1 7.1/2 1.1/1 6.1/2 5.0/1 4.1/2 4.0/1 5.1/2
handle 0 4
handle 1 5
end
points
0 0 0 0
0 2 0 2
0 4 0 4
0 6 0 6
0 1 1 0
0 3 1 6
0 5 1 4
0 7 1 2
1 0 0 1
1 6 0 3
1 4 0 5
1 2 0 7
1 7 1 7
1 5 1 5
1 3 1 3
1 1 1 1
end

)"},
        {"fig5_e", R"(fatpair
delta 5
jump 2
sense +
gamma1
graph
surface annulus
labels 2
vertex 0 + 10 : 0.0/1 0.1/2 3.0/1 2.1/2 1.0/1 5.0/2 4.0/1 6.0/2 2.0/1 3.1/2
vertex 1 - 10 : 4.1/1 7.1/2 8.0/1 9.1/2 9.0/1 8.1/2 7.0/1 5.1/2 1.1/1 6.1/2
mark 0 0
mark 1 3
end
gamma2
graph
surface torus
labels 2
vertex 0 + 10 : 0.0/1 4.1/2 1.0/1 7.0/2 2.0/1 8.0/2 3.0/1 1.1/2 4.0/1 9.0/2
vertex 1 - 10 : 0.1/1 9.1/2 6.0/1 5.1/2 2.1/1 7.1/2 3.1/1 8.1/2 5.0/1 6.1/2
end
points
0 0 0 0
0 4 0 2
0 8 0 4
0 2 0 6
0 6 0 8
0 1 1 0
0 5 1 8
0 9 1 6
0 3 1 4
0 7 1 2
1 0 0 1
1 6 0 3
1 2 0 5
1 8 0 7
1 4 0 9
1 9 1 9
1 5 1 7
1 1 1 5
1 7 1 3
1 3 1 1
end

)"},
    };
    return t;
}

} // namespace

const std::vector<std::string> &fixture_ids() {
    static const std::vector<std::string> ids = {"fig3_1", "fig3_3", "fig5_d", "fig5_e"};
    return ids;
}

std::string fixture_text(const std::string &id) {
    auto it = texts().find(id);
    if (it == texts().end())
        throw UnknownFixture("unknown fixture '" + id + "'");
    return it->second;
}

GraphPair fixture(const std::string &id) { return read_pair(fixture_text(id)); }

} // namespace fatgraph
