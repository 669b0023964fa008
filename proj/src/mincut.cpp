#include "mtcut/mincut.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace mtcut {

namespace {

// Flow network over the graph with S contracted to node 0 and T to node 1.
// Arc order is fixed by the sorted vertex ids, so runs are deterministic.
struct FlowNetwork {
    struct Arc {
        int to;
        Weight cap;
        std::size_t rev;  // index of the reverse arc in arcs[to]
    };

    std::vector<std::vector<Arc>> arcs;
    std::map<VertexId, int> node_of;
    std::vector<int> level, iter;

    FlowNetwork(const WeightedGraph& g, const std::set<VertexId>& sources,
                const std::set<VertexId>& sinks) {
        if (sources.empty() || sinks.empty())
            throw InputError("max_flow: empty source or sink set");
        for (VertexId v : sources) {
            if (!g.has_vertex(v)) throw InputError("max_flow: unknown source vertex");
            if (sinks.count(v)) throw InputError("max_flow: source and sink sets overlap");
            node_of[v] = 0;
        }
        for (VertexId v : sinks) {
            if (!g.has_vertex(v)) throw InputError("max_flow: unknown sink vertex");
            node_of[v] = 1;
        }
        int next = 2;
        for (VertexId v : g.vertex_ids())
            if (!node_of.count(v)) node_of[v] = next++;
        arcs.resize(next);

        // Parallel arcs between the same node pair are merged to keep the
        // network small; capacities add up, which preserves all cuts.
        std::map<std::pair<int, int>, Weight> cap;
        for (const auto& [u, v, w] : g.edges()) {
            int a = node_of.at(u), b = node_of.at(v);
            if (a == b) continue;
            cap[{std::min(a, b), std::max(a, b)}] += w;
        }
        for (const auto& [pair, w] : cap) add_edge(pair.first, pair.second, w);
    }

    void add_edge(int a, int b, Weight w) {
        arcs[a].push_back({b, w, arcs[b].size()});
        arcs[b].push_back({a, w, arcs[a].size() - 1});
    }

    bool bfs() {
        level.assign(arcs.size(), -1);
        std::queue<int> q;
        level[0] = 0;
        q.push(0);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const Arc& a : arcs[u]) {
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[u] + 1;
                    q.push(a.to);
                }
            }
        }
        return level[1] >= 0;
    }

    Weight dfs(int u, Weight limit) {
        if (u == 1) return limit;
        for (int& i = iter[u]; i < static_cast<int>(arcs[u].size()); ++i) {
            Arc& a = arcs[u][i];
            if (a.cap <= 0 || level[a.to] != level[u] + 1) continue;
            Weight pushed = dfs(a.to, std::min(limit, a.cap));
            if (pushed > 0) {
                a.cap -= pushed;
                arcs[a.to][a.rev].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    Weight run() {
        Weight flow = 0;
        while (bfs()) {
            iter.assign(arcs.size(), 0);
            while (Weight pushed = dfs(0, std::numeric_limits<Weight>::max())) flow += pushed;
        }
        return flow;
    }

    // Nodes from which the sink is still reachable through residual arcs.
    std::vector<bool> reaches_sink() const {
        std::vector<bool> reach(arcs.size(), false);
        std::queue<int> q;
        reach[1] = true;
        q.push(1);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            // arc v->u with residual capacity means v reaches the sink;
            // scan u's arcs and look at their reverse capacities.
            for (const Arc& a : arcs[u]) {
                const Arc& rev = arcs[a.to][a.rev];
                if (rev.cap > 0 && !reach[a.to]) {
                    reach[a.to] = true;
                    q.push(a.to);
                }
            }
        }
        return reach;
    }
};

}  // namespace

Weight max_flow(const WeightedGraph& g, const std::set<VertexId>& sources,
                const std::set<VertexId>& sinks) {
    FlowNetwork net(g, sources, sinks);
    return net.run();
}

Cut max_vol_min_cut(const WeightedGraph& g, const std::set<VertexId>& sources,
                    const std::set<VertexId>& sinks) {
    FlowNetwork net(g, sources, sinks);
    Weight flow = net.run();
    std::vector<bool> reach = net.reaches_sink();
    check_invariant(!reach[0], "max_vol_min_cut: source reaches sink after max flow");

    Cut cut;
    for (VertexId v : g.vertex_ids())
        if (!reach[net.node_of.at(v)]) cut.side.insert(v);
    cut.size = cut_size(g, cut.side);
    check_invariant(cut.size == flow, "max_vol_min_cut: cut size differs from flow value");
    for (VertexId v : sources)
        check_invariant(cut.side.count(v) != 0, "max_vol_min_cut: source outside cut side");
    for (VertexId v : sinks)
        check_invariant(cut.side.count(v) == 0, "max_vol_min_cut: sink inside cut side");
    return cut;
}

std::vector<Cut> enumerate_min_cuts(const WeightedGraph& g, const std::set<VertexId>& sources,
                                    const std::set<VertexId>& sinks) {
    if (g.vertex_count() > 20)
        throw GuardError("enumerate_min_cuts: refusing graphs above 20 vertices");
    if (sources.empty() || sinks.empty())
        throw InputError("enumerate_min_cuts: empty source or sink set");
    for (VertexId v : sources)
        if (sinks.count(v)) throw InputError("enumerate_min_cuts: source and sink sets overlap");

    std::vector<VertexId> free;
    for (VertexId v : g.vertex_ids())
        if (!sources.count(v) && !sinks.count(v)) free.push_back(v);

    Weight best = std::numeric_limits<Weight>::max();
    std::vector<Cut> out;
    for (std::uint64_t mask = 0; mask < (1ull << free.size()); ++mask) {
        std::set<VertexId> side(sources.begin(), sources.end());
        for (std::size_t i = 0; i < free.size(); ++i)
            if (mask & (1ull << i)) side.insert(free[i]);
        Weight d = cut_size(g, side);
        if (d < best) {
            best = d;
            out.clear();
        }
        if (d == best) out.push_back(Cut{std::move(side), d});
    }
    std::sort(out.begin(), out.end(),
              [](const Cut& a, const Cut& b) { return a.side < b.side; });
    return out;
}

}  // namespace mtcut
