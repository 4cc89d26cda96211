#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fatgraph/pairing.hpp"

namespace fatgraph {

class UnknownFixture : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// fig3_1, fig3_3, fig5_d, fig5_e
const std::vector<std::string> &fixture_ids();
GraphPair fixture(const std::string &id);
std::string fixture_text(const std::string &id);

} // namespace fatgraph
