#pragma once

#include "ncparam/ribbon.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ncparam {

enum ExitCode : int {
    ExitOk = 0,
    ExitUsage = 1,
    ExitParse = 2,
    ExitConstraint = 3,
    ExitConsistency = 4,
};

/// Tree from comma-separated line ids ("e1,e3"). Throws GraphError for an
/// unknown id.
SpanningTree tree_from_ids(const RibbonGraph& graph, const std::string& ids);

/// The ncparam command line; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ncparam
