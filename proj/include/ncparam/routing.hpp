#pragma once

#include "ncparam/ribbon.hpp"

#include <Eigen/Core>

#include <vector>

namespace ncparam {

using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/// All spanning trees, in lexicographic order of their sorted line tuples.
std::vector<SpanningTree> spanning_trees(const RibbonGraph& graph);

/// A spanning tree minus one line: a forest with exactly two components.
struct TwoTree {
    std::vector<int> lines;
    std::vector<int> side;      // per vertex: 0 for the component of vertex 0, else 1
    std::vector<int> externals; // legs attached to side 1
};

/// All 2-trees; empty when the graph has a single vertex.
std::vector<TwoTree> two_trees(const RibbonGraph& graph);

/// Momentum carried by every internal line for a fixed spanning tree.
///
/// Line l carries  sum_j loop(l,j) k_j + sum_e external(l,e) p_e , flowing
/// from its tail to its head. Loop j is the j-th non-tree line in increasing
/// line order and carries exactly k_j. External momenta are incoming.
struct MomentumRouting {
    SpanningTree tree;
    std::vector<int> loop_lines;
    IntMatrix loop;     // lines x loops
    IntMatrix external; // lines x externals

    int loops() const { return static_cast<int>(loop_lines.size()); }
    /// External content after eliminating the last momentum with sum p = 0:
    /// lines x (externals - 1).
    IntMatrix reduced_external() const;
};

/// Solves momentum conservation along the tree, rooted at vertex 0.
/// Throws GraphError for an invalid tree and ConsistencyError if the solved
/// routing violates conservation.
MomentumRouting route_momenta(const RibbonGraph& graph, const SpanningTree& tree);

/// Number of spanning trees from the integer Kirchhoff determinant.
long long kirchhoff_tree_count(const RibbonGraph& graph);

} // namespace ncparam
