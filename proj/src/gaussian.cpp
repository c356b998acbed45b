#include "ncparam/gaussian.hpp"

#include "ncparam/error.hpp"

namespace ncparam {

SplitComplex RingTraits<SplitComplex>::exact_divide(const SplitComplex& a, const SplitComplex& b) {
    if (b.k.is_zero())
        return {a.re.exact_divide(b.re), a.k.exact_divide(b.re)};
    const SplitComplex numerator = a * b.conj();
    const Polynomial norm = b.re * b.re - b.k * b.k;
    return {numerator.re.exact_divide(norm), numerator.k.exact_divide(norm)};
}

namespace {

const RegistryPtr& registry_of(const std::vector<Polynomial>& betas) {
    for (const auto& b : betas)
        if (b.registry())
            return b.registry();
    throw RegistryError("beta parameters carry no registry");
}

} // namespace

std::vector<Polynomial> alpha_parameters(const RegistryPtr& registry, int lines) {
    std::vector<Polynomial> out;
    for (int l = 1; l <= lines; ++l)
        out.push_back(Polynomial::variable(registry, registry->alpha(l)));
    return out;
}

LoopForm loop_form(const MomentumRouting& routing, const std::vector<Polynomial>& betas) {
    const auto& registry = registry_of(betas);
    const IntMatrix eta = routing.reduced_external();
    const Eigen::Index loops = routing.loop.cols();
    const Eigen::Index momenta = eta.cols();
    if (static_cast<Eigen::Index>(betas.size()) != routing.loop.rows())
        throw Error("one beta per line required");

    const Polynomial zero(0, registry);
    LoopForm form{PolyMatrix::Constant(loops, loops, zero), PolyMatrix::Constant(loops, momenta, zero),
                  PolyMatrix::Constant(momenta, momenta, zero)};
    for (Eigen::Index l = 0; l < routing.loop.rows(); ++l) {
        const Polynomial& beta = betas[static_cast<std::size_t>(l)];
        for (Eigen::Index j = 0; j < loops; ++j) {
            if (routing.loop(l, j) == 0)
                continue;
            for (Eigen::Index k = 0; k < loops; ++k)
                if (routing.loop(l, k) != 0)
                    form.quadratic(j, k) += beta.scaled(routing.loop(l, j) * routing.loop(l, k));
            for (Eigen::Index e = 0; e < momenta; ++e)
                if (eta(l, e) != 0)
                    form.linear(j, e) += beta.scaled(routing.loop(l, j) * eta(l, e));
        }
        for (Eigen::Index e = 0; e < momenta; ++e)
            for (Eigen::Index f = 0; f < momenta; ++f)
                if (eta(l, e) != 0 && eta(l, f) != 0)
                    form.constant(e, f) += beta.scaled(eta(l, e) * eta(l, f));
    }
    return form;
}

Polynomial first_polynomial(const MomentumRouting& routing, const PhaseData& phases,
                            const std::vector<Polynomial>& betas) {
    const auto& registry = registry_of(betas);
    const Polynomial half_theta = Polynomial::variable(registry, registry->theta()).scaled(Rational(1, 2));
    PolyMatrix m = loop_form(routing, betas).quadratic;
    for (Eigen::Index j = 0; j < m.rows(); ++j)
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            if (phases.intersection(j, k) != 0)
                m(j, k) += half_theta.scaled(phases.intersection(j, k));
    return poly_det(m);
}

GaussianResult gaussian_reduce(const MomentumRouting& routing, const PhaseData& phases,
                               const std::vector<Polynomial>& betas) {
    const auto& registry = registry_of(betas);
    const LoopForm form = loop_form(routing, betas);
    const Eigen::Index loops = form.quadratic.rows();
    const Eigen::Index momenta = form.constant.rows();
    if (phases.intersection.rows() != loops || phases.coupling.cols() != momenta)
        throw Error("phase data does not match the routing");

    const Polynomial half_theta = Polynomial::variable(registry, registry->theta()).scaled(Rational(1, 2));
    const Polynomial zero(0, registry);

    // Exponent -[k^T A k + 2 k^T G p + p^T H p] with
    //   A = M - (theta/2) N K,  G = B - (theta/2) C K,  H = c.
    DenseMatrix<SplitComplex> form_matrix(loops + momenta, loops + momenta);
    for (Eigen::Index j = 0; j < loops; ++j) {
        for (Eigen::Index k = 0; k < loops; ++k)
            form_matrix(j, k) = {form.quadratic(j, k), half_theta.scaled(-phases.intersection(j, k))};
        for (Eigen::Index e = 0; e < momenta; ++e) {
            const SplitComplex g{form.linear(j, e), half_theta.scaled(-phases.coupling(j, e))};
            form_matrix(j, loops + e) = g;
            form_matrix(loops + e, j) = g.conj();
        }
    }
    for (Eigen::Index e = 0; e < momenta; ++e)
        for (Eigen::Index f = 0; f < momenta; ++f)
            form_matrix(loops + e, loops + f) = {form.constant(e, f), zero};

    const DenseMatrix<SplitComplex> reduced = bareiss_eliminate<SplitComplex>(form_matrix, loops);

    GaussianResult result;
    for (Eigen::Index j = 0; j < loops; ++j) {
        const SplitComplex& pivot = reduced(j, j);
        if (!pivot.k.is_zero())
            throw ConsistencyError("leading minor of the loop form is not real");
        if (pivot.re.is_zero())
            throw ConsistencyError("vanishing leading minor in Gaussian reduction");
        result.chain.push_back(pivot.re);
    }
    result.first = loops > 0 ? result.chain.back() : Polynomial(1, registry);

    result.second = zero;
    for (Eigen::Index e = 0; e < momenta; ++e) {
        const int ie = static_cast<int>(e) + 1;
        const Polynomial& diagonal = reduced(loops + e, loops + e).re;
        result.second += diagonal * Polynomial::variable(registry, registry->s(ie, ie));
        for (Eigen::Index f = e + 1; f < momenta; ++f) {
            const Polynomial& upper = reduced(loops + e, loops + f).re;
            if (!(upper == reduced(loops + f, loops + e).re))
                throw ConsistencyError("reduced quadratic form is not symmetric");
            result.second += upper.scaled(2) * Polynomial::variable(registry, registry->s(ie, static_cast<int>(f) + 1));
        }
    }
    return result;
}

} // namespace ncparam
