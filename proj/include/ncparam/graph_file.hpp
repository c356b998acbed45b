#pragma once

#include "ncparam/propagator.hpp"
#include "ncparam/ribbon.hpp"

#include <string>
#include <string_view>

namespace ncparam {

/// Contents of a graph file:
///
///     # comment
///     vertex v1: h1 h2 h3 h4      (counterclockwise)
///     edge e1: v1.h1 v1.h2        (tail, head)
///     ext x1: v1.h3
///     param theta=1 a=3/16 m2=1 D=4
///
/// Parameter values are rationals or `sym`; omitted ones stay symbolic and D
/// defaults to 4.
struct GraphFile {
    GraphDescription description;
    ModelParameters params;
};

/// Syntax only. Throws ParseError("<line>:<col>: ...").
GraphFile read_graph_file(std::string_view text, std::string name = "graph");

/// Syntax plus graph validation (GraphError) and parameter checks (ConstraintError).
struct ParsedGraph {
    RibbonGraph graph;
    ModelParameters params;
};
ParsedGraph parse_graph_file(std::string_view text, std::string name = "graph", BuildOptions options = {});

/// Inverse of read_graph_file.
std::string print_graph_file(const GraphDescription& description, const ModelParameters& params);

/// Reads a whole file; throws Error when it cannot be opened.
std::string slurp(const std::string& path);

} // namespace ncparam
