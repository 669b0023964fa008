#pragma once

#include <set>
#include <vector>

#include "mtcut/graph.hpp"

namespace mtcut {

// Maximum (S,T)-flow value, treating each undirected edge of weight w as a
// pair of opposite arcs of capacity w. S and T must be disjoint, nonempty
// and contained in the vertex set; they are contracted into a single source
// and sink before the flow runs.
Weight max_flow(const WeightedGraph& g, const std::set<VertexId>& sources,
                const std::set<VertexId>& sinks);

// The unique minimum (S,T)-cut side of maximum volume: V minus the vertices
// that still reach T in the residual network of a maximum flow. Every other
// minimum (S,T)-cut side is a subset of it.
Cut max_vol_min_cut(const WeightedGraph& g, const std::set<VertexId>& sources,
                    const std::set<VertexId>& sinks);

// Exhaustive oracle: all minimum (S,T)-cut sides, sorted. Guarded to
// graphs of at most 20 vertices.
std::vector<Cut> enumerate_min_cuts(const WeightedGraph& g, const std::set<VertexId>& sources,
                                    const std::set<VertexId>& sinks);

}  // namespace mtcut
