#include "mtcut/solver.hpp"

#include <algorithm>
#include <ostream>

#include "mtcut/mincut.hpp"

namespace mtcut {

namespace {

struct RawLeaf {
    std::map<VertexId, int> parts;
    MergeLog log;
};

struct Ctx {
    Mode mode;
    std::ostream* trace;
    BranchStats stats;
    long long next_id = 0;
    bool root_recorded = false;
};

struct ChildMove {
    std::string label;
    Instance inst;
    Weight drop;
};

std::size_t terminal_index_of(const WeightedGraph& g, VertexId t) {
    for (std::size_t i = 0; i < g.terminal_count(); ++i)
        if (g.terminal_at(i) == t) return i;
    throw InputError("not a terminal: " + std::to_string(t));
}

void emit_trace(Ctx& ctx, long long id, long long parent, const std::string& label,
                VertexId vertex, const Instance& inst) {
    if (!ctx.trace) return;
    Weight h = iso_size_sum(inst.graph);
    *ctx.trace << id << ' ' << parent << ' ' << label << ' ' << vertex << ' ' << inst.k << ' '
               << h << ' ' << (2 * inst.k - h) << '\n';
}

ChildMove make_child(Ctx& ctx, const std::string& label, Instance inst, Weight parent_m,
                     Weight min_drop) {
    Weight h = iso_size_sum(inst.graph);
    Weight drop = parent_m - (2 * inst.k - h);
    check_invariant(drop >= min_drop,
                    label + " must shrink the measure by at least " + std::to_string(min_drop));
    ctx.stats.measure_trace.emplace_back(label, drop);
    return ChildMove{label, std::move(inst), drop};
}

void assert_eq2(const WeightedGraph& g, VertexId t_p, VertexId v, VertexId u) {
    check_invariant(cut_size(g, {t_p, v, u}) >= g.weighted_degree(t_p) + 2,
                    "d({t_p,v,u}) below d(t_p) + 2 despite a reduced state");
}

std::optional<RawLeaf> solve_rec(Instance inst, Ctx& ctx, long long parent,
                                 const std::string& via, VertexId via_vertex) {
    long long id = ctx.next_id++;
    ++ctx.stats.nodes;
    emit_trace(ctx, id, parent, via, via_vertex, inst);

    if (inst.k < 0) {
        ++ctx.stats.leaves;
        return std::nullopt;
    }

    ReduceOutcome out = reduce(std::move(inst), ctx.mode);
    if (std::holds_alternative<InfeasibleLeaf>(out)) {
        ++ctx.stats.leaves;
        return std::nullopt;
    }
    if (auto* sol = std::get_if<SolvedLeaf>(&out)) {
        ++ctx.stats.leaves;
        return RawLeaf{std::move(sol->parts), std::move(sol->log)};
    }

    Reduced red = std::get<Reduced>(std::move(out));
    Instance cur = std::move(red.instance);
    if (!ctx.root_recorded) {
        ctx.root_recorded = true;
        ctx.stats.root_k = cur.k;
        ctx.stats.root_h = red.h;
        ctx.stats.root_m = 2 * cur.k - red.h;
    }

    // step 1: every terminal-terminal edge is a crossing edge of any
    // solution, so pay for them up front. h shifts by exactly twice the
    // charge and the measure stays put.
    Weight charged = remove_terminal_edges(cur);
    if (cur.k < 0) {
        ++ctx.stats.leaves;
        return std::nullopt;
    }
    Weight h = iso_size_sum(cur.graph);
    check_invariant(h == red.h - 2 * charged, "step 1 must shift h by twice its charge");
    Weight m = 2 * cur.k - h;

    // step 2: a terminal without neighbors leaves the instance.
    VertexId t_p = active_terminal(cur.graph);
    std::optional<VertexId> picked = select_branch_vertex(cur.graph, t_p);
    if (!picked) {
        ++ctx.stats.step2;
        Instance child = cur;
        child.graph.remove_isolated_vertex(t_p);
        check_invariant(iso_size_sum(child.graph) == h, "retiring an isolated terminal moved h");
        auto sub = solve_rec(std::move(child), ctx, id, "step2", t_p);
        if (!sub) return std::nullopt;
        sub->parts[t_p] = cur.part_index.at(t_p);
        return sub;
    }

    VertexId v = *picked;
    Extension ext = extension(cur.graph, terminal_index_of(cur.graph, t_p), v);
    check_invariant(ext.dist >= 1, "branch vertex still at distance 0 after reduce");
    CaseInfo info = classify_case(cur.graph, t_p, v, ext);

    // step 3: v only neighbors terminals and sits at unit distance, so
    // putting it with t_p is never worse. Forced move, no second child.
    if (info.label == BranchCase::step3) {
        Instance child = cur;
        child.graph.contract({t_p, v}, t_p);
        ChildMove move = make_child(ctx, "step3", std::move(child), m, 1);
        ++ctx.stats.step3;
        return solve_rec(std::move(move.inst), ctx, id, move.label, v);
    }

    std::vector<ChildMove> children;

    // case 1: the edge (t_p, v) crosses; delete it and pay its weight.
    {
        Instance child = cur;
        Weight w = cur.graph.weight(t_p, v);
        child.graph.remove_edge(t_p, v);
        child.k -= w;
        children.push_back(make_child(ctx, "case1", std::move(child), m, 1));
    }
    Weight case1_drop = children.front().drop;

    switch (info.label) {
        case BranchCase::case2a: {
            assert_eq2(cur.graph, t_p, v, info.u);
            Instance child = cur;
            child.graph.contract({t_p, v, info.u}, t_p);
            children.push_back(make_child(ctx, "case2a", std::move(child), m, 2));
            break;
        }
        case BranchCase::case2b: {
            check_invariant(ext.dist == 1, "case 2b with ext_p(v) != 1");
            assert_eq2(cur.graph, t_p, v, info.u1);
            assert_eq2(cur.graph, t_p, v, info.u2);
            {
                Instance child = cur;
                child.graph.remove_edge(info.u1, v);
                child.graph.contract({t_p, v, info.u2}, t_p);
                child.k -= 1;
                children.push_back(make_child(ctx, "case2b.1", std::move(child), m, 3));
            }
            {
                Instance child = cur;
                child.graph.contract({t_p, v, info.u1}, t_p);
                children.push_back(make_child(ctx, "case2b.2", std::move(child), m, 2));
            }
            break;
        }
        case BranchCase::case2c: {
            Instance child = cur;
            child.graph.contract({t_p, v}, t_p);
            children.push_back(make_child(ctx, "case2c", std::move(child), m, ext.dist));
            if (children.back().drop == 1)
                check_invariant(case1_drop >= 2,
                                "case 2c dropped only 1 but case 1 failed to drop 2");
            break;
        }
        case BranchCase::step3:
            break;  // handled above
    }

    for (ChildMove& child : children) {
        if (child.label == "case1") ++ctx.stats.case1;
        else if (child.label == "case2a") ++ctx.stats.case2a;
        else if (child.label == "case2b.1") ++ctx.stats.case2b1;
        else if (child.label == "case2b.2") ++ctx.stats.case2b2;
        else ++ctx.stats.case2c;
        auto sub = solve_rec(std::move(child.inst), ctx, id, child.label, v);
        if (sub) return sub;
    }
    return std::nullopt;
}

}  // namespace

Weight remove_terminal_edges(Instance& inst) {
    Weight charged = 0;
    const auto& ts = inst.graph.terminals();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            if (!inst.graph.has_edge(ts[i], ts[j])) continue;
            charged += inst.graph.weight(ts[i], ts[j]);
            inst.graph.remove_edge(ts[i], ts[j]);
        }
    }
    inst.k -= charged;
    return charged;
}

VertexId active_terminal(const WeightedGraph& g) {
    if (g.terminal_count() == 0) throw InputError("active_terminal: no terminals");
    VertexId best = g.terminal_at(0);
    Weight best_d = g.weighted_degree(best);
    for (std::size_t i = 1; i < g.terminal_count(); ++i) {
        VertexId t = g.terminal_at(i);
        Weight d = g.weighted_degree(t);
        if (d > best_d) {
            best = t;
            best_d = d;
        }
    }
    return best;
}

std::optional<VertexId> select_branch_vertex(const WeightedGraph& g, VertexId t_p) {
    const auto& nbrs = g.neighbors(t_p);
    if (nbrs.empty()) return std::nullopt;
    std::size_t idx = terminal_index_of(g, t_p);
    std::optional<VertexId> fallback;
    for (const auto& [v, w] : nbrs) {
        (void)w;
        if (g.is_terminal(v)) continue;
        if (!fallback) fallback = v;
        if (extension(g, idx, v).dist == 1) return v;
    }
    if (fallback) return fallback;
    return nbrs.begin()->first;
}

CaseInfo classify_case(const WeightedGraph& g, VertexId t_p, VertexId v, const Extension& ext) {
    if (!g.has_edge(t_p, v)) throw InputError("classify_case: v not adjacent to t_p");
    std::vector<VertexId> nonterm;
    bool all_unit = true;
    for (const auto& [u, w] : g.neighbors(v)) {
        if (!g.is_terminal(u)) nonterm.push_back(u);
        if (w != 1) all_unit = false;
    }

    CaseInfo info;
    if (ext.dist == 1 && nonterm.empty()) {
        info.label = BranchCase::step3;
        return info;
    }
    if (ext.dist == 1 && nonterm.size() == 1) {
        Weight wvp = g.weight(v, t_p);
        for (VertexId t : g.terminals()) {
            if (t == t_p || g.weight(v, t) != wvp) continue;
            info.label = BranchCase::case2a;
            info.u = nonterm.front();
            info.tj = t;
            return info;
        }
    }
    if (g.neighbor_count(v) == 3 && all_unit && nonterm.size() == 2) {
        info.label = BranchCase::case2b;
        info.u1 = nonterm[0];
        info.u2 = nonterm[1];
        return info;
    }
    info.label = BranchCase::case2c;
    return info;
}

Partition reconstruct(const WeightedGraph& original, const std::map<VertexId, int>& leaf_parts,
                      const MergeLog& log) {
    auto parent = log.parent_map();
    Partition out;
    for (VertexId v : original.vertex_ids()) {
        VertexId rep = v;
        for (auto it = parent.find(rep); it != parent.end(); it = parent.find(rep))
            rep = it->second;
        auto part = leaf_parts.find(rep);
        check_invariant(part != leaf_parts.end(),
                        "reconstruct: vertex " + std::to_string(v) + " has no surviving part");
        out.assignment[v] = part->second;
    }
    out.size = partition_size(original, out.assignment);
    return out;
}

SolveResult solve(const Instance& inst, const SolveOptions& opts) {
    if (inst.k < 0) throw InputError("solve: negative budget");
    for (VertexId t : inst.graph.terminals())
        if (!inst.part_index.count(t))
            throw InputError("solve: terminal missing from part_index");

    Ctx ctx{opts.mode, opts.trace, BranchStats{}, 0, false};
    auto raw = solve_rec(inst, ctx, -1, "root", -1);

    SolveResult res;
    res.stats = std::move(ctx.stats);
    res.feasible = raw.has_value();
    if (!raw) return res;

    res.partition = reconstruct(inst.graph, raw->parts, raw->log);
    check_invariant(res.partition->size <= inst.k, "solve: witness exceeds the budget");
    for (const auto& [t, part] : inst.part_index)
        check_invariant(res.partition->assignment.at(t) == part,
                        "solve: terminal strayed from its own part");
    return res;
}

}  // namespace mtcut
