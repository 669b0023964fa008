#include "mtcut/isolation.hpp"

#include <algorithm>

#include "mtcut/mincut.hpp"

namespace mtcut {

namespace {

std::set<VertexId> other_terminals(const WeightedGraph& g, std::size_t i) {
    std::set<VertexId> rest;
    for (std::size_t j = 0; j < g.terminal_count(); ++j)
        if (j != i) rest.insert(g.terminal_at(j));
    return rest;
}

}  // namespace

Cut max_vol_min_iso_cut(const WeightedGraph& g, std::size_t terminal_index) {
    if (g.terminal_count() < 2)
        throw InputError("max_vol_min_iso_cut: needs at least two terminals");
    VertexId t = g.terminal_at(terminal_index);
    return max_vol_min_cut(g, {t}, other_terminals(g, terminal_index));
}

Extension extension(const WeightedGraph& g, std::size_t terminal_index, VertexId v) {
    VertexId t = g.terminal_at(terminal_index);
    if (!g.has_vertex(v)) throw InputError("extension: unknown vertex");
    if (g.is_terminal(v)) throw InputError("extension: v must be a non-terminal");

    Extension ext;
    ext.base = max_vol_min_iso_cut(g, terminal_index);
    ext.extended = max_vol_min_cut(g, {t, v}, other_terminals(g, terminal_index));
    check_invariant(
        std::includes(ext.extended.side.begin(), ext.extended.side.end(),
                      ext.base.side.begin(), ext.base.side.end()),
        "extension: base cut not nested in extended cut");
    for (VertexId u : ext.extended.side)
        if (!ext.base.side.count(u)) ext.x_set.insert(u);
    ext.dist = ext.extended.size - ext.base.size;
    check_invariant(ext.dist >= 0, "extension: negative distance");
    check_invariant(ext.x_set.empty() == (ext.dist == 0),
                    "extension: x_set emptiness disagrees with distance");
    for (VertexId u : ext.x_set)
        check_invariant(!g.is_terminal(u), "extension: terminal inside x_set");
    return ext;
}

Weight iso_size_sum(const WeightedGraph& g) {
    if (g.terminal_count() < 2) return 0;
    Weight h = 0;
    for (std::size_t i = 0; i < g.terminal_count(); ++i)
        h += max_vol_min_iso_cut(g, i).size;
    return h;
}

}  // namespace mtcut
