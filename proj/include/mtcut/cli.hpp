#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mtcut {

// Command surface, callable in-process so tests can capture output.
//
//   solve FILE [--k N] [--alg fpt|oracle|approx] [--p-mode] [--stats] [--trace FILE]
//   gen --n N --m M --p P --wmax W [--seed S]
//   check FILE SOLUTION
//
// Exit status: 0 solved / check passed, 1 infeasible / check mismatch,
// 2 usage error or refusal (bad file, guard tripped, unknown flag).
//
// solve: --k overrides the budget in FILE; with neither, the optimum is
// found by binary search on k over [ceil(h/2), h] using repeated solves.
// --stats appends "c stats ..." comment lines after the solution.
// --trace FILE writes one line per branch node: id parent case vertex k h m.
//
// Identical arguments and files produce byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mtcut
