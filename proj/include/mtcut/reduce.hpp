#pragma once

#include <optional>
#include <variant>

#include "mtcut/instance.hpp"

namespace mtcut {

enum class Mode { general, p_mode };

// A solved instance, expressed over the vertices of the *current* graph.
// log is the graph's merge history at the leaf; resolving any earlier
// vertex through it lands on a vertex present in parts, which is how the
// solver lifts the answer back to the original graph. The reported size
// already equals the original crossing weight because contraction
// conserves cross-part weights.
struct SolvedLeaf {
    std::map<VertexId, int> parts;
    Weight size = 0;
    MergeLog log;
};

struct InfeasibleLeaf {};

// Fully preprocessed instance ready for branching. Invariants: at least
// three terminals, each terminal is its own max-vol min iso cut, every
// non-terminal has three or more neighbors, unit-distance extensions are
// single adjacent vertices, and h sits strictly between the exit
// thresholds (2k >= h, and no trivial exit applies).
struct Reduced {
    Instance instance;
    Weight h = 0;
};

using ReduceOutcome = std::variant<SolvedLeaf, InfeasibleLeaf, Reduced>;

// Resolves instances with at most two terminals outright (p <= 1 is free;
// p == 2 is a single minimum cut).
std::optional<ReduceOutcome> base_cases(const Instance& inst);

// Contracts the max-vol min iso cut of each terminal into that terminal.
// Returns whether anything changed.
bool merge_iso_cuts(Instance& inst);

// Contracts every unit-distance extension of two or more vertices into its
// defining non-terminal, until none is left. Returns whether anything
// changed.
bool merge_unit_extensions(Instance& inst);

// Budget exits: 2k < h is infeasible; k >= h (general mode) or
// k >= (1 - 1/p) h (p_mode, exact rational comparison) is solved by
// keeping every terminal but one a singleton.
std::optional<ReduceOutcome> trivial_exits(const Instance& inst, Mode mode);

// Merges away non-terminals with at most two neighbors: one neighbor means
// merge into it, two neighbors mean merge toward the heavier edge (ties to
// the lower vertex id). Returns whether anything changed.
bool dispose_low_degree(Instance& inst);

// The three merge passes above run to a joint fixpoint, with no budget
// exits. Exposed so preservation of the optimum can be tested in
// isolation; k is left untouched.
bool run_merge_passes(Instance& inst);

// Full pipeline: base cases, then merge passes interleaved with exit
// checks until nothing changes. The Reduced invariants are asserted before
// returning.
ReduceOutcome reduce(Instance inst, Mode mode);

}  // namespace mtcut
