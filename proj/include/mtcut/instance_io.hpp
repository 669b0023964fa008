#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mtcut/instance.hpp"

namespace mtcut {

// Parsed instance file. k is the optional default budget from the header;
// warnings collect non-fatal findings (currently duplicate edge lines,
// which are summed).
struct InstanceFile {
    WeightedGraph graph;
    std::optional<Weight> k;
    std::vector<std::string> warnings;
};

// Line format, 1-based vertex ids:
//   c <comment>
//   p mtcut <n> <m> <p> [<k>]
//   t <vid>            (p lines, in terminal order)
//   e <u> <v> <w>      (m lines, u != v, w >= 1; duplicates are summed)
// Errors carry the offending line number.
InstanceFile parse_instance(const std::string& text);

std::string write_instance(const WeightedGraph& g, std::optional<Weight> k);

// Uniform random simple graph on n vertices with m edges, weights uniform
// in [1, wmax], the first p vertices terminals. Resampled until no
// terminal is isolated. The default budget is the isolating-cut lower
// bound ceil(h/2). Bit-for-bit deterministic in (n, m, p, wmax, seed).
InstanceFile generate(int n, long long m, int p, Weight wmax, std::uint64_t seed);

// Solution file:
//   s SIZE <int> | s INFEASIBLE
//   a <vid> <part>     (one line per vertex for feasible solutions)
struct SolutionFile {
    bool feasible = false;
    Weight size = 0;
    std::map<VertexId, int> assignment;
};

SolutionFile parse_solution(const std::string& text);
std::string write_solution(const SolutionFile& sol);

}  // namespace mtcut
