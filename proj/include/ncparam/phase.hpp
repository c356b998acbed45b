#pragma once

#include "ncparam/ribbon.hpp"
#include "ncparam/routing.hpp"

#include <Eigen/Core>

#include <vector>

namespace ncparam {

/// Internal broken face seen from the rosette: loop momenta overarching it
/// (with sign) and the independent external momenta inserted in it.
struct BrokenFace {
    Eigen::VectorXi overarching;
    std::vector<int> momenta; // 0-based independent momentum indices
};

/// Moyal phase of the amplitude after contraction to the rosette,
///
///     exp i[ 1/2 sum_jk intersection(j,k) k_j Th k_k + sum_je coupling(j,e) k_j Th p_e ],
///
/// with the last external momentum eliminated. Phases coupling external
/// momenta only are dropped.
struct PhaseData {
    IntMatrix intersection; // loops x loops, antisymmetric
    IntMatrix coupling;     // loops x independent momenta
    std::vector<BrokenFace> broken_faces;

    bool planar() const { return intersection.isZero(); }
};

/// Reads the phase off the rosette word. Each vertex contributes
/// exp(-i/2 sum_{a<b} q_a Th q_b) over its counterclockwise incoming momenta;
/// contraction along tree lines preserves the product, so the rosette word
/// alone determines the phase. Broken faces group the independent momenta by
/// their coupling column. Throws GraphError if the rosette and the routing
/// come from different trees.
PhaseData rosette_phase_data(const RibbonGraph& graph, const Rosette& rosette, const MomentumRouting& routing);

} // namespace ncparam
