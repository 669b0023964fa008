#include "mtcut/instance.hpp"

namespace mtcut {

Weight partition_size(const WeightedGraph& g, const std::map<VertexId, int>& assignment) {
    Weight total = 0;
    for (const auto& [u, v, w] : g.edges()) {
        auto iu = assignment.find(u), iv = assignment.find(v);
        if (iu == assignment.end() || iv == assignment.end())
            throw InputError("partition_size: vertex " +
                             std::to_string(iu == assignment.end() ? u : v) + " unassigned");
        if (iu->second != iv->second) total += w;
    }
    return total;
}

}  // namespace mtcut
