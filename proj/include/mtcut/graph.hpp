#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <variant>
#include <vector>

#include "mtcut/errors.hpp"

namespace mtcut {

using VertexId = int;
using Weight = long long;

// Contraction of `absorbed` into the surviving vertex `rep`.
struct ContractRecord {
    std::vector<VertexId> absorbed;  // sorted, never contains rep
    VertexId rep;
};

struct DeleteEdgeRecord {
    VertexId u, v;
    Weight weight;
};

using LogRecord = std::variant<ContractRecord, DeleteEdgeRecord>;

// Ordered history of the mutations applied to a graph since it was built.
// Vertex ids are never reused, so each id appears as absorbed at most once
// and representative chains are acyclic.
class MergeLog {
  public:
    void add_contract(std::vector<VertexId> absorbed, VertexId rep);
    void add_delete(VertexId u, VertexId v, Weight w);

    const std::vector<LogRecord>& records() const { return records_; }
    bool empty() const { return records_.empty(); }

    // absorbed id -> representative at the time of contraction
    std::map<VertexId, VertexId> parent_map() const;

    // Follows the absorption chain from v to its ultimate representative.
    VertexId resolve(VertexId v) const;

  private:
    std::vector<LogRecord> records_;
};

// Undirected weighted graph with a distinguished ordered terminal list.
// Parallel edges are summed at construction and self loops are rejected,
// so the adjacency structure is always simple. Mutations (contract,
// remove_edge) are appended to the merge log; the solver works on value
// copies, one per branch, so no graph is ever shared across branches.
class WeightedGraph {
  public:
    void add_vertex(VertexId v);
    void add_edge(VertexId u, VertexId v, Weight w);
    void set_terminals(std::vector<VertexId> ts);

    bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
    bool has_edge(VertexId u, VertexId v) const;
    // 0 when the edge is absent.
    Weight weight(VertexId u, VertexId v) const;
    const std::map<VertexId, Weight>& neighbors(VertexId v) const;
    int neighbor_count(VertexId v) const;
    Weight weighted_degree(VertexId v) const;

    std::vector<VertexId> vertex_ids() const;
    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const;
    // (u, v, w) triples with u < v, sorted.
    std::vector<std::tuple<VertexId, VertexId, Weight>> edges() const;

    const std::vector<VertexId>& terminals() const { return terminals_; }
    std::size_t terminal_count() const { return terminals_.size(); }
    bool is_terminal(VertexId v) const;
    VertexId terminal_at(std::size_t i) const;

    // Contracts `group` into rep (rep must belong to group; at most one
    // terminal allowed, and the terminal must be rep). Weights toward the
    // outside are summed. Appends a ContractRecord unless group == {rep}.
    void contract(const std::set<VertexId>& group, VertexId rep);

    // Removes an existing edge and appends a DeleteEdgeRecord.
    void remove_edge(VertexId u, VertexId v);

    // Drops a degree-0 vertex (used when a terminal runs out of neighbors
    // and leaves the instance). Not representable in the merge log; the
    // caller records the vertex's fate separately.
    void remove_isolated_vertex(VertexId v);

    const MergeLog& merge_log() const { return log_; }

    // Structural equality: vertex set, edge weights, terminal order.
    // The merge log is deliberately ignored.
    bool same_structure(const WeightedGraph& o) const;

  private:
    void require_vertex(VertexId v, const char* who) const;

    std::map<VertexId, std::map<VertexId, Weight>> adj_;
    std::vector<VertexId> terminals_;
    MergeLog log_;
};

// Total weight of edges with exactly one endpoint in side (d(side)).
Weight cut_size(const WeightedGraph& g, const std::set<VertexId>& side);

// Total weight of edges between two disjoint vertex sets.
Weight weight_between(const WeightedGraph& g, const std::set<VertexId>& xs,
                      const std::set<VertexId>& ys);

// True when the subgraph induced by `side` is connected (trivially true
// for empty and singleton sets).
bool induced_connected(const WeightedGraph& g, const std::set<VertexId>& side);

// Value-returning counterparts used by tests and one-off callers.
WeightedGraph merge(const WeightedGraph& g, const std::set<VertexId>& group, VertexId rep);
WeightedGraph delete_edge(const WeightedGraph& g, VertexId u, VertexId v);

// Applies `log` to a copy of `original`. Deleted-edge weights are checked
// against the recorded ones, so a successful replay reproduces the graph
// the log was taken from.
WeightedGraph replay(const WeightedGraph& original, const MergeLog& log);

// One side of an (S,T)-cut together with its cut size.
struct Cut {
    std::set<VertexId> side;
    Weight size = 0;
};

}  // namespace mtcut
