#include "mtcut/baseline.hpp"

#include <algorithm>

#include "mtcut/isolation.hpp"

namespace mtcut {

Partition brute_force(const WeightedGraph& g) {
    std::size_t p = g.terminal_count();
    std::vector<VertexId> free;
    for (VertexId v : g.vertex_ids())
        if (!g.is_terminal(v)) free.push_back(v);

    if (p <= 1) {
        Partition out;
        for (VertexId v : g.vertex_ids()) out.assignment[v] = 1;
        out.size = 0;
        return out;
    }

    double work = 1;
    for (std::size_t i = 0; i < free.size(); ++i) {
        work *= static_cast<double>(p);
        if (work > 2e6) throw GuardError("brute_force: beyond 2e6 assignments");
    }

    std::map<VertexId, int> assignment;
    for (std::size_t i = 0; i < p; ++i) assignment[g.terminal_at(i)] = static_cast<int>(i) + 1;

    Partition best;
    std::vector<int> choice(free.size(), 1);
    for (;;) {
        for (std::size_t i = 0; i < free.size(); ++i) assignment[free[i]] = choice[i];
        Weight size = partition_size(g, assignment);
        if (best.assignment.empty() || size < best.size) {
            best.assignment = assignment;
            best.size = size;
        }
        // next assignment vector, least significant at the back so the
        // enumeration is lexicographic over (free, ascending parts)
        std::size_t i = free.size();
        while (i > 0 && choice[i - 1] == static_cast<int>(p)) choice[--i] = 1;
        if (i == 0) break;
        ++choice[i - 1];
    }
    return best;
}

Partition approx_isolating(const WeightedGraph& g) {
    std::size_t p = g.terminal_count();
    if (p < 2) throw InputError("approx_isolating: needs at least two terminals");

    std::vector<Cut> cuts;
    cuts.reserve(p);
    for (std::size_t i = 0; i < p; ++i) cuts.push_back(max_vol_min_iso_cut(g, i));

    std::size_t skip = 0;
    for (std::size_t i = 1; i < p; ++i)
        if (cuts[i].size > cuts[skip].size) skip = i;

    Partition out;
    for (VertexId v : g.vertex_ids()) {
        int part = static_cast<int>(skip) + 1;
        for (std::size_t i = 0; i < p; ++i) {
            if (cuts[i].side.count(v)) {
                part = static_cast<int>(i) + 1;
                break;
            }
        }
        out.assignment[v] = part;
    }
    out.size = partition_size(g, out.assignment);
    return out;
}

bool verify(const WeightedGraph& g, const std::map<VertexId, int>& assignment, Weight claimed) {
    int max_part = std::max<int>(1, static_cast<int>(g.terminal_count()));
    for (VertexId v : g.vertex_ids()) {
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw InputError("verify: vertex " + std::to_string(v) + " unassigned");
        if (it->second < 1 || it->second > max_part) return false;
    }
    for (std::size_t i = 0; i < g.terminal_count(); ++i)
        if (assignment.at(g.terminal_at(i)) != static_cast<int>(i) + 1) return false;
    return partition_size(g, assignment) == claimed;
}

}  // namespace mtcut
