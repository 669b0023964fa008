#include "mtcut/instance_io.hpp"

#include <random>
#include <sstream>

#include "mtcut/isolation.hpp"

namespace mtcut {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

long long to_int(const std::string& tok, std::size_t line, const char* what) {
    try {
        std::size_t used = 0;
        long long val = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return val;
    } catch (const std::exception&) {
        fail(line, std::string("bad ") + what + " '" + tok + "'");
    }
}

constexpr Weight kMaxWeight = 1ll << 32;

// Unbiased bounded draw, independent of library distributions so the
// generated bytes are pinned by the engine alone.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;

    bool have_header = false;
    long long n = 0, m = 0, p = 0;
    InstanceFile out;
    std::vector<VertexId> terminals;
    std::map<std::pair<VertexId, VertexId>, Weight> edges;
    long long edge_lines = 0;

    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream line(raw);
        std::vector<std::string> tok;
        for (std::string t; line >> t;) tok.push_back(t);
        if (tok.empty() || tok[0] == "c") continue;

        if (tok[0] == "p") {
            if (have_header) fail(lineno, "second problem line");
            if (tok.size() < 5 || tok.size() > 6 || tok[1] != "mtcut")
                fail(lineno, "expected 'p mtcut <n> <m> <p> [<k>]'");
            n = to_int(tok[2], lineno, "vertex count");
            m = to_int(tok[3], lineno, "edge count");
            p = to_int(tok[4], lineno, "terminal count");
            if (n < 0 || m < 0 || p < 0) fail(lineno, "negative header field");
            if (p > n) fail(lineno, "more terminals than vertices");
            if (tok.size() == 6) {
                long long k = to_int(tok[5], lineno, "budget");
                if (k < 0) fail(lineno, "negative budget");
                out.k = k;
            }
            for (VertexId v = 1; v <= n; ++v) out.graph.add_vertex(v);
            have_header = true;
            continue;
        }
        if (!have_header) fail(lineno, "data before the problem line");

        if (tok[0] == "t") {
            if (tok.size() != 2) fail(lineno, "expected 't <vid>'");
            long long v = to_int(tok[1], lineno, "terminal id");
            if (v < 1 || v > n) fail(lineno, "terminal id out of range");
            if (static_cast<long long>(terminals.size()) == p) fail(lineno, "too many terminals");
            for (VertexId t : terminals)
                if (t == v) fail(lineno, "terminal repeated");
            terminals.push_back(static_cast<VertexId>(v));
            continue;
        }
        if (tok[0] == "e") {
            if (tok.size() != 4) fail(lineno, "expected 'e <u> <v> <w>'");
            long long u = to_int(tok[1], lineno, "vertex id");
            long long v = to_int(tok[2], lineno, "vertex id");
            long long w = to_int(tok[3], lineno, "weight");
            if (u < 1 || u > n || v < 1 || v > n) fail(lineno, "vertex id out of range");
            if (u == v) fail(lineno, "self loop");
            if (w < 1) fail(lineno, "weight below 1");
            if (w > kMaxWeight) fail(lineno, "weight above 2^32");
            ++edge_lines;
            std::pair<VertexId, VertexId> key =
                std::minmax(static_cast<VertexId>(u), static_cast<VertexId>(v));
            auto [it, fresh] = edges.emplace(key, w);
            if (!fresh) {
                it->second += w;
                out.warnings.push_back("line " + std::to_string(lineno) + ": duplicate edge " +
                                       tok[1] + "-" + tok[2] + " summed");
            }
            continue;
        }
        fail(lineno, "unknown line type '" + tok[0] + "'");
    }

    if (!have_header) fail(lineno, "missing problem line");
    if (static_cast<long long>(terminals.size()) != p)
        fail(lineno, "expected " + std::to_string(p) + " terminal lines, got " +
                         std::to_string(terminals.size()));
    if (edge_lines != m)
        fail(lineno, "expected " + std::to_string(m) + " edge lines, got " +
                         std::to_string(edge_lines));

    for (const auto& [key, w] : edges) out.graph.add_edge(key.first, key.second, w);
    out.graph.set_terminals(terminals);
    return out;
}

std::string write_instance(const WeightedGraph& g, std::optional<Weight> k) {
    std::ostringstream out;
    out << "p mtcut " << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.terminal_count();
    if (k) out << ' ' << *k;
    out << '\n';
    for (VertexId t : g.terminals()) out << "t " << t << '\n';
    for (const auto& [u, v, w] : g.edges()) out << "e " << u << ' ' << v << ' ' << w << '\n';
    return out.str();
}

InstanceFile generate(int n, long long m, int p, Weight wmax, std::uint64_t seed) {
    if (n < 0 || p < 0 || p > n) throw InputError("generate: need 0 <= p <= n");
    long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_edges) throw InputError("generate: edge count out of range");
    if (wmax < 1 || wmax > kMaxWeight) throw InputError("generate: weight bound out of range");
    if (p > 0 && m < (p + 1) / 2)
        throw InputError("generate: too few edges to cover every terminal");

    std::mt19937_64 rng(seed);
    InstanceFile out;
    for (int attempt = 0;; ++attempt) {
        if (attempt == 1000)
            throw InputError("generate: could not avoid isolated terminals");

        WeightedGraph g;
        for (VertexId v = 1; v <= n; ++v) g.add_vertex(v);
        // selection sampling over the pair list keeps the draw uniform and
        // the byte output independent of library internals
        long long need = m, remain = max_edges;
        for (VertexId u = 1; u <= n && need > 0; ++u) {
            for (VertexId v = u + 1; v <= n && need > 0; ++v, --remain) {
                if (bounded(rng, static_cast<std::uint64_t>(remain)) <
                    static_cast<std::uint64_t>(need)) {
                    g.add_edge(u, v, 1 + static_cast<Weight>(bounded(
                                             rng, static_cast<std::uint64_t>(wmax))));
                    --need;
                }
            }
        }

        std::vector<VertexId> terminals;
        for (VertexId t = 1; t <= p; ++t) terminals.push_back(t);
        g.set_terminals(terminals);

        bool isolated = false;
        for (VertexId t : terminals)
            if (g.neighbors(t).empty()) isolated = true;
        if (isolated) continue;

        Weight h = iso_size_sum(g);
        out.k = (h + 1) / 2;
        out.graph = std::move(g);
        return out;
    }
}

SolutionFile parse_solution(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    bool have_status = false;
    SolutionFile out;

    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream line(raw);
        std::vector<std::string> tok;
        for (std::string t; line >> t;) tok.push_back(t);
        if (tok.empty() || tok[0] == "c") continue;

        if (tok[0] == "s") {
            if (have_status) fail(lineno, "second status line");
            have_status = true;
            if (tok.size() == 2 && tok[1] == "INFEASIBLE") {
                out.feasible = false;
                continue;
            }
            if (tok.size() == 3 && tok[1] == "SIZE") {
                out.feasible = true;
                out.size = to_int(tok[2], lineno, "size");
                continue;
            }
            fail(lineno, "expected 's SIZE <int>' or 's INFEASIBLE'");
        }
        if (tok[0] == "a") {
            if (!have_status) fail(lineno, "assignment before status line");
            if (tok.size() != 3) fail(lineno, "expected 'a <vid> <part>'");
            long long v = to_int(tok[1], lineno, "vertex id");
            long long part = to_int(tok[2], lineno, "part");
            if (!out.assignment.emplace(static_cast<VertexId>(v), static_cast<int>(part)).second)
                fail(lineno, "vertex assigned twice");
            continue;
        }
        fail(lineno, "unknown line type '" + tok[0] + "'");
    }
    if (!have_status) fail(lineno, "missing status line");
    return out;
}

std::string write_solution(const SolutionFile& sol) {
    std::ostringstream out;
    if (!sol.feasible) {
        out << "s INFEASIBLE\n";
        return out.str();
    }
    out << "s SIZE " << sol.size << '\n';
    for (const auto& [v, part] : sol.assignment) out << "a " << v << ' ' << part << '\n';
    return out.str();
}

}  // namespace mtcut
