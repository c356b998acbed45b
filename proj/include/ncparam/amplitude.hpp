#pragma once

#include "ncparam/gaussian.hpp"
#include "ncparam/phase.hpp"
#include "ncparam/propagator.hpp"
#include "ncparam/ribbon.hpp"
#include "ncparam/routing.hpp"
#include "ncparam/symanzik.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncparam {

/// One term of the expansion: lines in `subset` take the correction
/// propagator, so their Schwinger parameter becomes beta = a + a_1 + a_2.
///
///   integrand = sign (a/theta^2)^prefactor_power first^(-D/2)
///               exp(-second / first) exp(-mass_exponent)
struct AmplitudeTerm {
    std::uint64_t subset = 0; // bit l-1 set when line l is in S
    int prefactor_power = 0;  // |S|
    int sign = 1;             // (-1)^|S|
    Polynomial first;         // U_theta
    Polynomial second;        // W
    Polynomial mass_exponent;

    std::vector<int> lines() const; // 1-based members of S
};

struct AmplitudeExpansion {
    std::string graph_name;
    RegistryPtr registry;
    ModelParameters params;
    TopologySummary topology;
    SpanningTree tree;
    PhaseData phases;
    SymanzikPair commutative;
    std::vector<AmplitudeTerm> terms; // 2^L, by ascending bitmask
    int L = 0;                        // prefactor pi^(L D / 2)
    int D = 4;

    const AmplitudeTerm& term(std::uint64_t subset) const;
};

struct ExpandOptions {
    std::optional<SpanningTree> tree; // default: lexicographically first
    bool parallel = true;
    RegistryPtr registry;             // default: graph_registry(graph)
};

/// beta_l for a subset: a_l, or a_l + a_l_1 + a_l_2 when l is in S.
std::vector<Polynomial> subset_betas(const RegistryPtr& registry, int lines, std::uint64_t subset);

/// m^2 sum_l a_l + sum_{l in S} (a_l_1 m1^2 + a_l_2 m2^2).
Polynomial mass_exponent(const RegistryPtr& registry, int lines, std::uint64_t subset);

/// The 2^L-term parametric representation. Throws ConstraintError for
/// inadmissible parameters and GraphError for a bad tree.
AmplitudeExpansion expand_amplitude(const RibbonGraph& graph, const ModelParameters& params,
                                    const ExpandOptions& options = {});

struct PowerCounting {
    int L = 0;
    int n = 0;
    int g = 0;
    int N = 0;
    int D = 4;
    int min_degree = 0;                    // lowest rho-degree of U_theta(rho a)
    int omega = 0;                         // L - (D/2) min_degree
    std::optional<int> closed_form_omega; // (N-4)/2 + 4g, D = 4 and quartic vertices only
    bool uv_divergent = false;             // omega <= 0
};

/// Rescales a -> rho a in the S = {} first polynomial (theta fixed) and reads
/// off the lowest power of rho. Throws ConsistencyError if the bound
/// min_degree >= L - n + 1 - 2g or the closed form fails.
PowerCounting power_counting(const AmplitudeExpansion& expansion, bool quartic_vertices);
PowerCounting power_counting(const RibbonGraph& graph, const ModelParameters& params);

} // namespace ncparam
