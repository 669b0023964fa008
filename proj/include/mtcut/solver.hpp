#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "mtcut/isolation.hpp"
#include "mtcut/reduce.hpp"

namespace mtcut {

// Search-tree accounting. The measure is m = 2k - h; every branch child
// must shrink it by its case's minimum (case 1 by 1, 2a and 2b.2 by 2,
// 2b.1 by 3, 2c by ext_p(v), step 3 by 1), which is asserted at branch
// time and recorded in measure_trace.
struct BranchStats {
    long long nodes = 0;
    long long leaves = 0;
    long long case1 = 0, case2a = 0, case2b1 = 0, case2b2 = 0, case2c = 0;
    long long step2 = 0, step3 = 0;
    // budget, h and measure of the first fully reduced state (the root of
    // the actual branching); -1 when the instance never reached one.
    Weight root_k = -1, root_h = -1, root_m = 0;
    std::vector<std::pair<std::string, Weight>> measure_trace;
};

struct SolveResult {
    bool feasible = false;
    std::optional<Partition> partition;
    BranchStats stats;
};

struct SolveOptions {
    Mode mode = Mode::general;
    // One line per search node: id, parent id, case, vertex, k, h, m.
    std::ostream* trace = nullptr;
};

// Exact decision procedure: feasible with a witness partition of size <= k
// iff a multiterminal cut of size <= k exists. The witness is rescored on
// the original graph, so its size is the true crossing weight.
SolveResult solve(const Instance& inst, const SolveOptions& opts = {});

// Deletes every terminal-terminal edge, charging k. Returns the total
// charge; h drops by exactly twice that, so the measure is unchanged.
Weight remove_terminal_edges(Instance& inst);

// Terminal of maximum weighted degree, ties to the earliest position in
// the terminal list.
VertexId active_terminal(const WeightedGraph& g);

// Branch vertex among N(t_p): prefers unit-distance extensions, then the
// lowest id. Absent when t_p has no neighbors (the caller then retires t_p
// to its own part and recurses on G - t_p).
std::optional<VertexId> select_branch_vertex(const WeightedGraph& g, VertexId t_p);

enum class BranchCase { step3, case2a, case2b, case2c };

struct CaseInfo {
    BranchCase label;
    VertexId u = -1;              // 2a: the lone non-terminal neighbor
    VertexId u1 = -1, u2 = -1;    // 2b: the two non-terminal neighbors, u1 < u2
    VertexId tj = -1;             // 2a: lowest-index terminal with w(v,tj) = w(v,t_p)
};

// Syntactic case analysis for a reduced state with branch vertex v:
// step 3 when ext_p(v) = 1 and N(v) holds only terminals; 2a when
// ext_p(v) = 1, exactly one neighbor is a non-terminal and some other
// terminal matches w(v, t_p); 2b when v has exactly three unit edges, two
// of them to non-terminals; 2c otherwise.
CaseInfo classify_case(const WeightedGraph& g, VertexId t_p, VertexId v, const Extension& ext);

// Maps every original vertex through the contraction chains of `log` to a
// surviving vertex of `leaf_parts` and rescores the assignment on the
// original graph.
Partition reconstruct(const WeightedGraph& original, const std::map<VertexId, int>& leaf_parts,
                      const MergeLog& log);

}  // namespace mtcut
