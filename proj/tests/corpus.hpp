#pragma once

#include "potstab/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace corpus {

struct Named {
    std::string name;
    potstab::SmallGraph graph;
};

// The graphs used throughout the property and acceptance suites.
inline std::vector<Named> graphs() {
    using namespace potstab;
    return {{"K3", complete_graph(3)},
            {"K4", complete_graph(4)},
            {"C5", cycle_graph(5)},
            {"C6", cycle_graph(6)},
            {"P4", path_graph(4)},
            {"K2,3", complete_bipartite(2, 3)},
            {"split(2,3)", complete_split(2, 3)},
            {"friendship(2)", friendship_graph(2)}};
}

} // namespace corpus
