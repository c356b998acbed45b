#include "ncparam/amplitude.hpp"

#include "ncparam/error.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <map>
#include <numeric>
#include <span>
#include <thread>

namespace ncparam {

std::vector<int> AmplitudeTerm::lines() const {
    std::vector<int> out;
    for (int l = 0; l < 64; ++l)
        if (subset >> l & 1U)
            out.push_back(l + 1);
    return out;
}

const AmplitudeTerm& AmplitudeExpansion::term(std::uint64_t subset) const {
    if (subset >= terms.size())
        throw Error("term bitmask " + std::to_string(subset) + " out of range");
    return terms[subset];
}

std::vector<Polynomial> subset_betas(const RegistryPtr& registry, int lines, std::uint64_t subset) {
    std::vector<Polynomial> betas = alpha_parameters(registry, lines);
    for (int l = 1; l <= lines; ++l)
        if (subset >> (l - 1) & 1U)
            betas[static_cast<std::size_t>(l - 1)] += Polynomial::variable(registry, registry->alpha1(l)) +
                                                      Polynomial::variable(registry, registry->alpha2(l));
    return betas;
}

Polynomial mass_exponent(const RegistryPtr& registry, int lines, std::uint64_t subset) {
    const Polynomial msq = Polynomial::variable(registry, registry->msq());
    const Polynomial m1sq = Polynomial::variable(registry, registry->m1sq());
    const Polynomial m2sq = Polynomial::variable(registry, registry->m2sq());
    Polynomial out(0, registry);
    for (int l = 1; l <= lines; ++l) {
        out += Polynomial::variable(registry, registry->alpha(l)) * msq;
        if (subset >> (l - 1) & 1U) {
            out += Polynomial::variable(registry, registry->alpha1(l)) * m1sq;
            out += Polynomial::variable(registry, registry->alpha2(l)) * m2sq;
        }
    }
    return out;
}

namespace {

// Greedy in line order gives the lexicographically smallest spanning tree.
SpanningTree first_spanning_tree(const RibbonGraph& graph) {
    std::vector<int> parent(static_cast<std::size_t>(graph.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    SpanningTree tree;
    for (int l = 0; l < graph.line_count(); ++l) {
        const int a = root(graph.tail_vertex(l));
        const int b = root(graph.head_vertex(l));
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            tree.lines.push_back(l);
        }
    }
    return tree;
}

AmplitudeTerm compute_term(const RegistryPtr& registry, const MomentumRouting& routing, const PhaseData& phases,
                           int lines, std::uint64_t subset) {
    const std::vector<Polynomial> betas = subset_betas(registry, lines, subset);
    GaussianResult reduced = gaussian_reduce(routing, phases, betas);
    const Polynomial closed_form = first_polynomial(routing, phases, betas);
    if (!(closed_form == reduced.first))
        throw ConsistencyError("determinant and iterated Gaussian first polynomials differ");

    AmplitudeTerm term;
    term.subset = subset;
    term.prefactor_power = std::popcount(subset);
    term.sign = term.prefactor_power % 2 == 0 ? 1 : -1;
    term.first = closed_form;
    term.second = std::move(reduced.second);
    term.mass_exponent = mass_exponent(registry, lines, subset);
    return term;
}

} // namespace

AmplitudeExpansion expand_amplitude(const RibbonGraph& graph, const ModelParameters& params,
                                    const ExpandOptions& options) {
    params.validate();
    split_propagator(params); // rejects a negative discriminant
    const int lines = graph.line_count();
    if (lines > 30)
        throw Error("too many lines for a 2^L expansion");

    AmplitudeExpansion out;
    out.graph_name = graph.name();
    out.registry = options.registry ? options.registry : graph_registry(graph);
    if (out.registry->lines() != lines || out.registry->momenta() != graph.momentum_count())
        throw RegistryError("registry does not fit the graph");
    out.params = params;
    out.topology = topology(graph).summary;
    out.tree = options.tree ? *options.tree : first_spanning_tree(graph);
    out.L = lines;
    out.D = params.D;

    const Rosette rosette = contract_to_rosette(graph, out.tree);
    const MomentumRouting routing = route_momenta(graph, out.tree);
    out.phases = rosette_phase_data(graph, rosette, routing);
    out.commutative = symanzik(graph, out.registry);

    const std::uint64_t count = std::uint64_t{1} << lines;
    out.terms.resize(count);
    const unsigned workers = options.parallel ? std::max(1U, std::thread::hardware_concurrency()) : 1U;
    if (workers == 1 || count < 4) {
        for (std::uint64_t s = 0; s < count; ++s)
            out.terms[s] = compute_term(out.registry, routing, out.phases, lines, s);
        return out;
    }
    // Strided chunks; each worker writes disjoint slots, so the result is
    // independent of scheduling.
    std::vector<std::future<void>> jobs;
    const std::uint64_t stride = std::min<std::uint64_t>(workers, count);
    for (std::uint64_t w = 0; w < stride; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::uint64_t s = w; s < count; s += stride)
                out.terms[s] = compute_term(out.registry, routing, out.phases, lines, s);
        }));
    }
    for (auto& job : jobs)
        job.get();
    return out;
}

PowerCounting power_counting(const AmplitudeExpansion& expansion, bool quartic_vertices) {
    const TopologySummary& top = expansion.topology;
    const RegistryPtr& registry = expansion.registry;
    PowerCounting pc;
    pc.L = top.L;
    pc.n = top.n;
    pc.g = top.g;
    pc.N = top.N;
    pc.D = expansion.D;

    const Polynomial rho = Polynomial::variable(registry, registry->rho());
    std::map<int, Polynomial> rescale;
    for (int l = 1; l <= top.L; ++l)
        rescale.emplace(registry->alpha(l), rho * Polynomial::variable(registry, registry->alpha(l)));
    const Polynomial rescaled = expansion.term(0).first.substitute(rescale);
    const int rho_var = registry->rho();
    const auto range = rescaled.degree_range(std::span<const int>(&rho_var, 1));
    if (!range)
        throw ConsistencyError("first polynomial vanishes");
    pc.min_degree = range->first;

    const int bound = top.loops() - 2 * top.g;
    if (pc.min_degree < bound)
        throw ConsistencyError("minimal degree " + std::to_string(pc.min_degree) + " below L - n + 1 - 2g = " +
                               std::to_string(bound));
    if (pc.D * pc.min_degree % 2 != 0)
        throw ConsistencyError("non-integral degree of divergence");
    pc.omega = pc.L - pc.D / 2 * pc.min_degree;
    pc.uv_divergent = pc.omega <= 0;

    if (pc.D == 4 && quartic_vertices) {
        pc.closed_form_omega = (pc.N - 4) / 2 + 4 * pc.g;
        if (*pc.closed_form_omega != pc.omega)
            throw ConsistencyError("rescaling gives omega = " + std::to_string(pc.omega) + " but the closed form gives " +
                                   std::to_string(*pc.closed_form_omega));
    }
    return pc;
}

PowerCounting power_counting(const RibbonGraph& graph, const ModelParameters& params) {
    ExpandOptions options;
    const AmplitudeExpansion expansion = expand_amplitude(graph, params, options);
    return power_counting(expansion, graph.all_degree(4));
}

} // namespace ncparam
