#include "ncparam/symanzik.hpp"

#include "ncparam/determinant.hpp"
#include "ncparam/error.hpp"
#include "ncparam/routing.hpp"

namespace ncparam {

RegistryPtr graph_registry(const RibbonGraph& graph, std::vector<std::string> extra) {
    return VariableRegistry::for_graph(graph.line_count(), graph.momentum_count(), std::move(extra));
}

Polynomial momentum_square(const Eigen::VectorXi& c, const RegistryPtr& registry) {
    Polynomial out(0, registry);
    for (Eigen::Index e = 0; e < c.size(); ++e) {
        if (c(e) == 0)
            continue;
        const int ie = static_cast<int>(e) + 1;
        out += Polynomial::variable(registry, registry->s(ie, ie)).scaled(c(e) * c(e));
        for (Eigen::Index f = e + 1; f < c.size(); ++f)
            if (c(f) != 0)
                out += Polynomial::variable(registry, registry->s(ie, static_cast<int>(f) + 1)).scaled(2 * c(e) * c(f));
    }
    return out;
}

namespace {

Polynomial complement_product(const RibbonGraph& graph, const RegistryPtr& registry, const std::vector<int>& lines) {
    Polynomial product(1, registry);
    for (int l = 0; l < graph.line_count(); ++l)
        if (std::find(lines.begin(), lines.end(), l) == lines.end())
            product *= Polynomial::variable(registry, registry->alpha(l + 1));
    return product;
}

} // namespace

Polynomial symanzik_U(const RibbonGraph& graph, const RegistryPtr& registry) {
    Polynomial U(0, registry);
    for (const auto& tree : spanning_trees(graph))
        U += complement_product(graph, registry, tree.lines);
    return U;
}

Polynomial symanzik_V(const RibbonGraph& graph, const RegistryPtr& registry) {
    Polynomial V(0, registry);
    const int N = graph.external_count();
    for (const auto& t : two_trees(graph)) {
        Eigen::VectorXi c = Eigen::VectorXi::Zero(graph.momentum_count());
        for (int e : t.externals) {
            if (e + 1 < N)
                c(e) += 1;
            else
                c.array() -= 1; // p_N = -(p_1 + ... + p_{N-1})
        }
        V += complement_product(graph, registry, t.lines) * momentum_square(c, registry);
    }
    return V;
}

SymanzikPair symanzik(const RibbonGraph& graph, const RegistryPtr& registry) {
    return {symanzik_U(graph, registry), symanzik_V(graph, registry)};
}

Polynomial matrix_tree_U(const RibbonGraph& graph, const RegistryPtr& registry) {
    const int n = graph.vertex_count();
    PolyMatrix laplacian = PolyMatrix::Constant(n, n, Polynomial(0, registry));
    for (int l = 0; l < graph.line_count(); ++l) {
        const int a = graph.tail_vertex(l);
        const int b = graph.head_vertex(l);
        if (a == b)
            continue;
        const Polynomial weight = Polynomial::variable(registry, registry->alpha(l + 1));
        laplacian(a, a) += weight;
        laplacian(b, b) += weight;
        laplacian(a, b) -= weight;
        laplacian(b, a) -= weight;
    }
    const Polynomial kirchhoff = poly_det(laplacian.bottomRightCorner(n - 1, n - 1));

    Polynomial U(0, registry);
    for (const auto& [exponents, coefficient] : kirchhoff.terms()) {
        Polynomial monomial(coefficient, registry);
        for (int l = 0; l < graph.line_count(); ++l) {
            const auto power = exponents.empty() ? 0 : exponents[static_cast<std::size_t>(registry->alpha(l + 1))];
            if (power > 1)
                throw ConsistencyError("Kirchhoff polynomial is not multilinear");
            if (power == 0)
                monomial *= Polynomial::variable(registry, registry->alpha(l + 1));
        }
        U += monomial;
    }
    return U;
}

} // namespace ncparam
