#pragma once

#include "ncparam/polynomial.hpp"
#include "ncparam/ribbon.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace ncparam {

/// Registry sized for `graph`: one alpha triple per line and s/w invariants
/// for its independent external momenta.
RegistryPtr graph_registry(const RibbonGraph& graph, std::vector<std::string> extra = {});

/// (sum_e c_e p_e)^2 over independent momenta, expanded into s_e_f.
Polynomial momentum_square(const Eigen::VectorXi& coefficients, const RegistryPtr& registry);

struct SymanzikPair {
    Polynomial U;
    Polynomial V;
};

/// U = sum over spanning trees T of prod_{l not in T} a_l.
Polynomial symanzik_U(const RibbonGraph& graph, const RegistryPtr& registry);

/// V = sum over 2-trees T2 of prod_{l not in T2} a_l (sum_{e in E(T2)} p_e)^2,
/// with the last external momentum eliminated. Zero for one-vertex graphs.
Polynomial symanzik_V(const RibbonGraph& graph, const RegistryPtr& registry);

SymanzikPair symanzik(const RibbonGraph& graph, const RegistryPtr& registry);

/// U from the weighted matrix-tree theorem: the Kirchhoff polynomial
/// det(reduced Laplacian) with line weights a_l is sum_T prod_{l in T} a_l;
/// complementing each monomial gives U.
Polynomial matrix_tree_U(const RibbonGraph& graph, const RegistryPtr& registry);

} // namespace ncparam
