#pragma once

#include "mtcut/instance.hpp"

namespace mtcut {

// Exhaustive oracle: tries every assignment of non-terminals to the p
// parts and returns the lexicographically least optimum (non-terminals in
// id order, parts ascending). Guarded to p^(n-p) <= 2e6 assignments.
Partition brute_force(const WeightedGraph& g);

// Isolating-cut heuristic: computes every terminal's max-vol min iso cut,
// resolves overlaps by terminal order (earlier terminals keep contested
// vertices), and hands all remaining vertices to the terminal whose cut is
// largest. The result is within a factor 2 - 2/p of the optimum.
Partition approx_isolating(const WeightedGraph& g);

// Checks a claimed solution: every vertex assigned to a part in range,
// each terminal in its own part, and the recomputed crossing weight equal
// to the claim. Missing assignments are input errors, everything else a
// plain false.
bool verify(const WeightedGraph& g, const std::map<VertexId, int>& assignment, Weight claimed);

}  // namespace mtcut
