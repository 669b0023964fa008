#include "mtcut/reduce.hpp"

#include <algorithm>

#include "mtcut/isolation.hpp"
#include "mtcut/mincut.hpp"

namespace mtcut {

namespace {

SolvedLeaf absorb_all_but(const Instance& inst, VertexId absorber) {
    SolvedLeaf leaf;
    for (VertexId v : inst.graph.vertex_ids()) {
        if (inst.graph.is_terminal(v) && v != absorber)
            leaf.parts[v] = inst.part_index.at(v);
        else
            leaf.parts[v] = inst.part_index.at(absorber);
    }
    leaf.size = partition_size(inst.graph, leaf.parts);
    leaf.log = inst.graph.merge_log();
    return leaf;
}

void assert_reduced(const Instance& inst, Mode mode, Weight h) {
    const WeightedGraph& g = inst.graph;
    std::size_t p = g.terminal_count();
    check_invariant(p >= 3, "reduced state with fewer than three terminals");
    check_invariant(2 * inst.k >= h, "reduced state past the infeasibility exit");
    if (mode == Mode::general)
        check_invariant(inst.k < h, "reduced state past the k >= h exit");
    else
        check_invariant(static_cast<Weight>(p) * inst.k < static_cast<Weight>(p - 1) * h,
                        "reduced state past the p_mode exit");

    for (std::size_t i = 0; i < p; ++i) {
        Cut c = max_vol_min_iso_cut(g, i);
        check_invariant(c.side == std::set<VertexId>{g.terminal_at(i)},
                        "terminal is not its own max-vol min iso cut after reduce");
    }
    for (VertexId v : g.vertex_ids()) {
        if (g.is_terminal(v)) continue;
        check_invariant(g.neighbor_count(v) >= 3,
                        "non-terminal of degree below three after reduce");
        for (std::size_t i = 0; i < p; ++i) {
            Extension e = extension(g, i, v);
            if (e.dist != 1) continue;
            check_invariant(e.x_set == std::set<VertexId>{v},
                            "unit-distance extension not a singleton after reduce");
            check_invariant(g.has_edge(g.terminal_at(i), v),
                            "unit-distance vertex not adjacent to its terminal");
        }
    }
}

}  // namespace

std::optional<ReduceOutcome> base_cases(const Instance& inst) {
    const WeightedGraph& g = inst.graph;
    std::size_t p = g.terminal_count();
    if (p >= 3) return std::nullopt;

    if (p <= 1) {
        if (inst.k < 0) return ReduceOutcome{InfeasibleLeaf{}};
        int part = p == 1 ? inst.part_index.at(g.terminal_at(0)) : 1;
        SolvedLeaf leaf;
        for (VertexId v : g.vertex_ids()) leaf.parts[v] = part;
        leaf.size = 0;
        leaf.log = g.merge_log();
        return ReduceOutcome{std::move(leaf)};
    }

    VertexId t0 = g.terminal_at(0), t1 = g.terminal_at(1);
    Cut cut = max_vol_min_cut(g, {t0}, {t1});
    if (cut.size > inst.k) return ReduceOutcome{InfeasibleLeaf{}};
    SolvedLeaf leaf;
    for (VertexId v : g.vertex_ids())
        leaf.parts[v] = cut.side.count(v) ? inst.part_index.at(t0) : inst.part_index.at(t1);
    leaf.size = cut.size;
    leaf.log = g.merge_log();
    return ReduceOutcome{std::move(leaf)};
}

bool merge_iso_cuts(Instance& inst) {
    bool changed = false;
    for (std::size_t i = 0; i < inst.graph.terminal_count(); ++i) {
        Cut c = max_vol_min_iso_cut(inst.graph, i);
        if (c.side.size() > 1) {
            inst.graph.contract(c.side, inst.graph.terminal_at(i));
            changed = true;
        }
    }
    return changed;
}

bool merge_unit_extensions(Instance& inst) {
    bool changed = false;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < inst.graph.terminal_count() && !progress; ++i) {
            for (VertexId v : inst.graph.vertex_ids()) {
                if (inst.graph.is_terminal(v)) continue;
                Extension e = extension(inst.graph, i, v);
                if (e.dist == 1 && e.x_set.size() >= 2) {
                    inst.graph.contract(e.x_set, v);
                    changed = progress = true;
                    break;
                }
            }
        }
    }
    return changed;
}

std::optional<ReduceOutcome> trivial_exits(const Instance& inst, Mode mode) {
    const WeightedGraph& g = inst.graph;
    Weight h = iso_size_sum(g);
    if (2 * inst.k < h) return ReduceOutcome{InfeasibleLeaf{}};

    std::size_t p = g.terminal_count();
    bool solved;
    VertexId absorber;
    if (mode == Mode::general) {
        solved = inst.k >= h;
        absorber = p > 0 ? g.terminal_at(p - 1) : 0;
    } else {
        solved = static_cast<Weight>(p) * inst.k >= static_cast<Weight>(p - 1) * h;
        absorber = 0;
        Weight best = -1;
        for (std::size_t i = 0; i < p; ++i) {
            Weight d = g.weighted_degree(g.terminal_at(i));
            if (d > best) {
                best = d;
                absorber = g.terminal_at(i);
            }
        }
    }
    if (!solved) return std::nullopt;

    if (p == 0) {
        SolvedLeaf leaf;
        for (VertexId v : g.vertex_ids()) leaf.parts[v] = 1;
        leaf.size = 0;
        leaf.log = g.merge_log();
        return ReduceOutcome{std::move(leaf)};
    }
    SolvedLeaf leaf = absorb_all_but(inst, absorber);
    check_invariant(leaf.size <= inst.k, "trivial exit produced an oversized partition");
    return ReduceOutcome{std::move(leaf)};
}

bool dispose_low_degree(Instance& inst) {
    bool changed = false;
    bool progress = true;
    while (progress) {
        progress = false;
        for (VertexId v : inst.graph.vertex_ids()) {
            if (inst.graph.is_terminal(v)) continue;
            const auto& nbrs = inst.graph.neighbors(v);
            if (nbrs.empty() || nbrs.size() > 2) continue;
            VertexId target;
            if (nbrs.size() == 1) {
                target = nbrs.begin()->first;
            } else {
                auto first = nbrs.begin();
                auto second = std::next(first);
                target = first->second >= second->second ? first->first : second->first;
            }
            inst.graph.contract({v, target}, target);
            changed = progress = true;
            break;
        }
    }
    return changed;
}

bool run_merge_passes(Instance& inst) {
    bool any = false;
    for (;;) {
        bool ch = merge_iso_cuts(inst);
        ch = merge_unit_extensions(inst) || ch;
        ch = dispose_low_degree(inst) || ch;
        if (!ch) break;
        any = true;
    }
    return any;
}

ReduceOutcome reduce(Instance inst, Mode mode) {
    if (auto out = base_cases(inst)) return std::move(*out);
    for (;;) {
        bool ch = merge_iso_cuts(inst);
        ch = merge_unit_extensions(inst) || ch;
        if (auto out = trivial_exits(inst, mode)) return std::move(*out);
        bool disposed = dispose_low_degree(inst);
        if (disposed)
            if (auto out = trivial_exits(inst, mode)) return std::move(*out);
        if (!ch && !disposed) break;
    }
    Weight h = iso_size_sum(inst.graph);
    assert_reduced(inst, mode, h);
    return Reduced{std::move(inst), h};
}

}  // namespace mtcut
