#pragma once

#include "mtcut/graph.hpp"

namespace mtcut {

// A solver instance: working graph plus remaining edge budget. part_index
// pins each terminal id to its part number in the original terminal order;
// terminal ids survive contraction unchanged, so the map stays valid all
// the way down the recursion even after terminals retire.
struct Instance {
    WeightedGraph graph;
    Weight k = 0;
    std::map<VertexId, int> part_index;

    static Instance make(WeightedGraph g, Weight k) {
        Instance inst;
        inst.part_index = {};
        for (std::size_t i = 0; i < g.terminal_count(); ++i)
            inst.part_index[g.terminal_at(i)] = static_cast<int>(i) + 1;
        inst.graph = std::move(g);
        inst.k = k;
        return inst;
    }
};

// Full assignment of vertices to parts 1..p plus the crossing weight.
struct Partition {
    std::map<VertexId, int> assignment;
    Weight size = 0;
};

// Crossing weight of an assignment, by direct edge scan. Every vertex of
// the graph must be assigned.
Weight partition_size(const WeightedGraph& g, const std::map<VertexId, int>& assignment);

}  // namespace mtcut
