#pragma once

#include "mtcut/graph.hpp"

namespace mtcut {

// Extension of terminal i toward a non-terminal v: the difference between
// the max-vol min cut separating {t_i, v} from the other terminals and the
// max-vol min iso cut of t_i alone. dist is the cut-size increase; x_set
// the vertices gained. x_set never contains a terminal, and base.side is
// always a subset of extended.side.
struct Extension {
    std::set<VertexId> x_set;
    Weight dist = 0;
    Cut base;
    Cut extended;
};

// Max-vol minimum cut separating t_i from all other terminals. Requires
// at least two terminals.
Cut max_vol_min_iso_cut(const WeightedGraph& g, std::size_t terminal_index);

// Extension of terminal i by a non-terminal vertex v.
Extension extension(const WeightedGraph& g, std::size_t terminal_index, VertexId v);

// h: the sum of the minimum iso-cut sizes over all terminals. Zero when
// fewer than two terminals remain (nothing left to separate).
Weight iso_size_sum(const WeightedGraph& g);

}  // namespace mtcut
