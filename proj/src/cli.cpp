#include "mtcut/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "mtcut/baseline.hpp"
#include "mtcut/errors.hpp"
#include "mtcut/instance_io.hpp"
#include "mtcut/isolation.hpp"
#include "mtcut/solver.hpp"

namespace mtcut {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

InstanceFile load_instance(const std::string& path, std::ostream& err) {
    InstanceFile file = parse_instance(slurp(path));
    for (const auto& w : file.warnings) err << "warning: " << w << '\n';
    return file;
}

void print_partition(std::ostream& out, const Partition& part) {
    SolutionFile sol;
    sol.feasible = true;
    sol.size = part.size;
    sol.assignment = part.assignment;
    out << write_solution(sol);
}

void print_stats(std::ostream& out, const BranchStats& s) {
    out << "c stats nodes " << s.nodes << " leaves " << s.leaves << '\n';
    out << "c stats cases 1:" << s.case1 << " 2a:" << s.case2a << " 2b.1:" << s.case2b1
        << " 2b.2:" << s.case2b2 << " 2c:" << s.case2c << " step2:" << s.step2 << " step3:"
        << s.step3 << '\n';
    out << "c stats root k " << s.root_k << " h " << s.root_h << " m " << s.root_m << '\n';
}

int cmd_solve(const std::string& path, std::optional<Weight> k_flag, const std::string& alg,
              bool p_mode, bool stats, const std::string& trace_path, std::ostream& out,
              std::ostream& err) {
    InstanceFile file = load_instance(path, err);
    std::optional<Weight> k = k_flag ? k_flag : file.k;

    if (alg == "oracle") {
        Partition best = brute_force(file.graph);
        if (k && best.size > *k) {
            out << write_solution(SolutionFile{});
            return 1;
        }
        print_partition(out, best);
        return 0;
    }
    if (alg == "approx") {
        print_partition(out, approx_isolating(file.graph));
        return 0;
    }

    SolveOptions opts;
    opts.mode = p_mode ? Mode::p_mode : Mode::general;
    std::ofstream trace_file;
    if (!trace_path.empty()) {
        trace_file.open(trace_path, std::ios::binary);
        if (!trace_file) throw InputError("cannot write '" + trace_path + "'");
        opts.trace = &trace_file;
    }

    if (!k) {
        // no budget anywhere: find the optimum. It lies between the
        // isolating-cut lower bound ceil(h/2) and h (where the k >= h exit
        // already fires), so binary search with repeated decision solves.
        Weight hi = iso_size_sum(file.graph);
        Weight lo = (hi + 1) / 2;
        SolveOptions probe;
        probe.mode = opts.mode;
        while (lo < hi) {
            Weight mid = lo + (hi - lo) / 2;
            if (solve(Instance::make(file.graph, mid), probe).feasible)
                hi = mid;
            else
                lo = mid + 1;
        }
        k = lo;
    }

    SolveResult res = solve(Instance::make(file.graph, *k), opts);
    if (res.feasible)
        print_partition(out, *res.partition);
    else
        out << write_solution(SolutionFile{});
    if (stats) print_stats(out, res.stats);
    return res.feasible ? 0 : 1;
}

int cmd_check(const std::string& inst_path, const std::string& sol_path, std::ostream& out,
              std::ostream& err) {
    InstanceFile file = load_instance(inst_path, err);
    SolutionFile sol = parse_solution(slurp(sol_path));
    if (!sol.feasible) throw InputError("solution claims infeasible; nothing to re-score");

    if (verify(file.graph, sol.assignment, sol.size)) {
        out << "c check ok size " << sol.size << '\n';
        return 0;
    }

    const WeightedGraph& g = file.graph;
    int p = static_cast<int>(g.terminal_count());
    err << "check failed: ";
    for (std::size_t i = 0; i < g.terminal_count(); ++i) {
        VertexId t = g.terminal_at(i);
        auto it = sol.assignment.find(t);
        if (it != sol.assignment.end() && it->second != static_cast<int>(i) + 1) {
            err << "terminal " << t << " is not in part " << i + 1 << '\n';
            return 1;
        }
    }
    for (const auto& [v, part] : sol.assignment) {
        if (part < 1 || part > std::max(1, p)) {
            err << "vertex " << v << " assigned to part " << part << " out of range\n";
            return 1;
        }
    }
    err << "claimed size " << sol.size << ", recomputed "
        << partition_size(g, sol.assignment) << '\n';
    return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"weighted multiterminal cut solver"};
    app.require_subcommand(1);

    std::string file, sol_path, trace_path;
    std::string alg = "fpt";
    long long k_val = 0;
    bool p_mode = false, stats = false;
    auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
    solve_cmd->add_option("file", file, "instance file")->required();
    auto* k_opt = solve_cmd->add_option("--k", k_val, "budget, overrides the file header");
    solve_cmd->add_option("--alg", alg, "fpt, oracle or approx")
        ->check(CLI::IsMember({"fpt", "oracle", "approx"}));
    solve_cmd->add_flag("--p-mode", p_mode, "use the k >= (1 - 1/p) h exit");
    solve_cmd->add_flag("--stats", stats, "append search statistics");
    solve_cmd->add_option("--trace", trace_path, "write a branch trace to this file");

    int n = 0, p = 0;
    long long m = 0, wmax = 1;
    std::uint64_t seed = 1;
    auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
    gen_cmd->add_option("--n", n, "vertex count")->required();
    gen_cmd->add_option("--m", m, "edge count")->required();
    gen_cmd->add_option("--p", p, "terminal count")->required();
    gen_cmd->add_option("--wmax", wmax, "maximum edge weight")->required();
    gen_cmd->add_option("--seed", seed, "generator seed");

    auto* check_cmd = app.add_subcommand("check", "re-score a solution file");
    check_cmd->add_option("instance", file, "instance file")->required();
    check_cmd->add_option("solution", sol_path, "solution file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (solve_cmd->parsed()) {
            std::optional<Weight> k_flag;
            if (k_opt->count() > 0) {
                if (k_val < 0) throw InputError("--k must be non-negative");
                k_flag = k_val;
            }
            return cmd_solve(file, k_flag, alg, p_mode, stats, trace_path, out, err);
        }
        if (gen_cmd->parsed()) {
            InstanceFile inst = generate(n, m, p, wmax, seed);
            out << write_instance(inst.graph, inst.k);
            return 0;
        }
        if (check_cmd->parsed()) return cmd_check(file, sol_path, out, err);
    } catch (const GuardError& e) {
        err << "refused: " << e.what() << '\n';
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace mtcut
