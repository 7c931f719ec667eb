#pragma once

// Command dispatch for the superirr tool. Exit codes:
//   0  certified / verified / search complete with no witness
//   1  refuted / witness or counterexample found
//   2  unknown or method inapplicable
//   3  usage or internal error

#include <iosfwd>
#include <string>
#include <vector>

namespace superirr {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superirr
