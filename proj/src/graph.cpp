#include "mtcut/graph.hpp"

#include <algorithm>
#include <queue>

namespace mtcut {

void MergeLog::add_contract(std::vector<VertexId> absorbed, VertexId rep) {
    std::sort(absorbed.begin(), absorbed.end());
    records_.push_back(ContractRecord{std::move(absorbed), rep});
}

void MergeLog::add_delete(VertexId u, VertexId v, Weight w) {
    records_.push_back(DeleteEdgeRecord{u, v, w});
}

std::map<VertexId, VertexId> MergeLog::parent_map() const {
    std::map<VertexId, VertexId> parent;
    for (const auto& rec : records_) {
        if (const auto* c = std::get_if<ContractRecord>(&rec)) {
            for (VertexId a : c->absorbed) {
                bool fresh = parent.emplace(a, c->rep).second;
                check_invariant(fresh, "vertex absorbed twice in merge log");
            }
        }
    }
    return parent;
}

VertexId MergeLog::resolve(VertexId v) const {
    auto parent = parent_map();
    for (auto it = parent.find(v); it != parent.end(); it = parent.find(v)) v = it->second;
    return v;
}

void WeightedGraph::require_vertex(VertexId v, const char* who) const {
    if (!has_vertex(v))
        throw InputError(std::string(who) + ": unknown vertex " + std::to_string(v));
}

void WeightedGraph::add_vertex(VertexId v) {
    adj_.try_emplace(v);
}

void WeightedGraph::add_edge(VertexId u, VertexId v, Weight w) {
    if (u == v) throw InputError("add_edge: self loop at vertex " + std::to_string(u));
    if (w < 1) throw InputError("add_edge: nonpositive weight");
    require_vertex(u, "add_edge");
    require_vertex(v, "add_edge");
    adj_[u][v] += w;
    adj_[v][u] += w;
}

void WeightedGraph::set_terminals(std::vector<VertexId> ts) {
    std::set<VertexId> seen;
    for (VertexId t : ts) {
        require_vertex(t, "set_terminals");
        if (!seen.insert(t).second)
            throw InputError("set_terminals: repeated terminal " + std::to_string(t));
    }
    terminals_ = std::move(ts);
}

bool WeightedGraph::has_edge(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
}

Weight WeightedGraph::weight(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    if (it == adj_.end()) return 0;
    auto jt = it->second.find(v);
    return jt == it->second.end() ? 0 : jt->second;
}

const std::map<VertexId, Weight>& WeightedGraph::neighbors(VertexId v) const {
    require_vertex(v, "neighbors");
    return adj_.at(v);
}

int WeightedGraph::neighbor_count(VertexId v) const {
    return static_cast<int>(neighbors(v).size());
}

Weight WeightedGraph::weighted_degree(VertexId v) const {
    Weight d = 0;
    for (const auto& [u, w] : neighbors(v)) {
        (void)u;
        d += w;
    }
    return d;
}

std::vector<VertexId> WeightedGraph::vertex_ids() const {
    std::vector<VertexId> out;
    out.reserve(adj_.size());
    for (const auto& [v, nbrs] : adj_) {
        (void)nbrs;
        out.push_back(v);
    }
    return out;
}

std::size_t WeightedGraph::edge_count() const {
    std::size_t cnt = 0;
    for (const auto& [v, nbrs] : adj_) {
        (void)v;
        cnt += nbrs.size();
    }
    return cnt / 2;
}

std::vector<std::tuple<VertexId, VertexId, Weight>> WeightedGraph::edges() const {
    std::vector<std::tuple<VertexId, VertexId, Weight>> out;
    for (const auto& [u, nbrs] : adj_)
        for (const auto& [v, w] : nbrs)
            if (u < v) out.emplace_back(u, v, w);
    return out;
}

bool WeightedGraph::is_terminal(VertexId v) const {
    return std::find(terminals_.begin(), terminals_.end(), v) != terminals_.end();
}

VertexId WeightedGraph::terminal_at(std::size_t i) const {
    if (i >= terminals_.size()) throw InputError("terminal_at: index out of range");
    return terminals_[i];
}

void WeightedGraph::contract(const std::set<VertexId>& group, VertexId rep) {
    if (group.empty()) throw InputError("contract: empty group");
    if (!group.count(rep)) throw InputError("contract: rep not in group");
    int terminal_members = 0;
    for (VertexId u : group) {
        require_vertex(u, "contract");
        if (is_terminal(u)) {
            ++terminal_members;
            if (u != rep)
                throw InputError("contract: terminal " + std::to_string(u) +
                                 " may only be absorbed into itself");
        }
    }
    if (terminal_members > 1) throw InputError("contract: group holds two terminals");
    if (group.size() == 1) return;

    // Weight from the group toward each outside neighbor.
    std::map<VertexId, Weight> merged;
    for (VertexId u : group)
        for (const auto& [v, w] : adj_.at(u))
            if (!group.count(v)) merged[v] += w;

    std::vector<VertexId> absorbed;
    for (VertexId u : group) {
        for (const auto& [v, w] : adj_.at(u)) {
            (void)w;
            if (!group.count(v)) adj_.at(v).erase(u);
        }
        if (u != rep) absorbed.push_back(u);
    }
    for (VertexId u : absorbed) adj_.erase(u);
    adj_.at(rep).clear();
    for (const auto& [v, w] : merged) {
        adj_.at(rep)[v] = w;
        adj_.at(v)[rep] = w;
    }
    log_.add_contract(std::move(absorbed), rep);
}

void WeightedGraph::remove_edge(VertexId u, VertexId v) {
    require_vertex(u, "remove_edge");
    require_vertex(v, "remove_edge");
    if (!has_edge(u, v))
        throw InputError("remove_edge: no edge " + std::to_string(u) + "-" + std::to_string(v));
    Weight w = adj_.at(u).at(v);
    adj_.at(u).erase(v);
    adj_.at(v).erase(u);
    log_.add_delete(u, v, w);
}

void WeightedGraph::remove_isolated_vertex(VertexId v) {
    require_vertex(v, "remove_isolated_vertex");
    if (!adj_.at(v).empty()) throw InputError("remove_isolated_vertex: vertex has edges");
    adj_.erase(v);
    terminals_.erase(std::remove(terminals_.begin(), terminals_.end(), v), terminals_.end());
}

bool WeightedGraph::same_structure(const WeightedGraph& o) const {
    return adj_ == o.adj_ && terminals_ == o.terminals_;
}

Weight cut_size(const WeightedGraph& g, const std::set<VertexId>& side) {
    Weight total = 0;
    for (VertexId u : side) {
        for (const auto& [v, w] : g.neighbors(u))
            if (!side.count(v)) total += w;
    }
    return total;
}

Weight weight_between(const WeightedGraph& g, const std::set<VertexId>& xs,
                      const std::set<VertexId>& ys) {
    Weight total = 0;
    for (VertexId u : xs)
        for (const auto& [v, w] : g.neighbors(u))
            if (ys.count(v)) total += w;
    return total;
}

bool induced_connected(const WeightedGraph& g, const std::set<VertexId>& side) {
    if (side.size() <= 1) return true;
    for (VertexId v : side)
        if (!g.has_vertex(v)) throw InputError("induced_connected: unknown vertex");
    std::set<VertexId> seen;
    std::queue<VertexId> work;
    work.push(*side.begin());
    seen.insert(*side.begin());
    while (!work.empty()) {
        VertexId u = work.front();
        work.pop();
        for (const auto& [v, w] : g.neighbors(u)) {
            (void)w;
            if (side.count(v) && seen.insert(v).second) work.push(v);
        }
    }
    return seen.size() == side.size();
}

WeightedGraph merge(const WeightedGraph& g, const std::set<VertexId>& group, VertexId rep) {
    WeightedGraph out = g;
    out.contract(group, rep);
    return out;
}

WeightedGraph delete_edge(const WeightedGraph& g, VertexId u, VertexId v) {
    WeightedGraph out = g;
    out.remove_edge(u, v);
    return out;
}

WeightedGraph replay(const WeightedGraph& original, const MergeLog& log) {
    WeightedGraph g = original;
    for (const auto& rec : log.records()) {
        if (const auto* c = std::get_if<ContractRecord>(&rec)) {
            std::set<VertexId> group(c->absorbed.begin(), c->absorbed.end());
            group.insert(c->rep);
            g.contract(group, c->rep);
        } else {
            const auto& d = std::get<DeleteEdgeRecord>(rec);
            check_invariant(g.weight(d.u, d.v) == d.weight,
                            "replay: recorded edge weight diverges from graph");
            g.remove_edge(d.u, d.v);
        }
    }
    return g;
}

}  // namespace mtcut
