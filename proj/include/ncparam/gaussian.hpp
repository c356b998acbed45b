#pragma once

#include "ncparam/determinant.hpp"
#include "ncparam/phase.hpp"
#include "ncparam/polynomial.hpp"
#include "ncparam/routing.hpp"

#include <vector>

namespace ncparam {

/// re + k K with K^2 = 1.
///
/// On each 2-plane of the Moyal matrix, K = i J where J = (0 1; -1 0) is the
/// symplectic block and i the imaginary unit of the Fourier phase; K commutes
/// with everything and squares to one, so the phase-carrying Gaussian lives
/// in this commutative ring. Transposition acts as conjugation K -> -K.
struct SplitComplex {
    Polynomial re;
    Polynomial k;

    SplitComplex() = default;
    SplitComplex(int value) : re(value) {} // NOLINT: ring embedding
    SplitComplex(Polynomial real, Polynomial k_part = Polynomial()) : re(std::move(real)), k(std::move(k_part)) {}

    SplitComplex conj() const { return {re, -k}; }
    bool is_zero() const { return re.is_zero() && k.is_zero(); }

    friend SplitComplex operator+(const SplitComplex& x, const SplitComplex& y) { return {x.re + y.re, x.k + y.k}; }
    friend SplitComplex operator-(const SplitComplex& x, const SplitComplex& y) { return {x.re - y.re, x.k - y.k}; }
    friend SplitComplex operator*(const SplitComplex& x, const SplitComplex& y) {
        return {x.re * y.re + x.k * y.k, x.re * y.k + x.k * y.re};
    }
};

template <>
struct RingTraits<SplitComplex> {
    static bool is_zero(const SplitComplex& x) { return x.is_zero(); }
    static SplitComplex one() { return SplitComplex(1); }
    static SplitComplex exact_divide(const SplitComplex& a, const SplitComplex& b);
};

/// Quadratic form sum_l beta_l q_l^2 in loop and external momenta:
///   k^T quadratic k + 2 k^T linear p + p^T constant p,
/// over the independent external momenta.
struct LoopForm {
    PolyMatrix quadratic; // loops x loops
    PolyMatrix linear;    // loops x momenta
    PolyMatrix constant;  // momenta x momenta
};

LoopForm loop_form(const MomentumRouting& routing, const std::vector<Polynomial>& betas);

/// det(M(beta) + (theta/2) N) with M the loop form and N the intersection matrix.
Polynomial first_polynomial(const MomentumRouting& routing, const PhaseData& phases,
                            const std::vector<Polynomial>& betas);

struct GaussianResult {
    Polynomial first;               // U_theta
    Polynomial second;              // W, the exponent being -W / U_theta
    std::vector<Polynomial> chain;  // f_1, ..., f_loops with f_loops = U_theta
};

/// Integrates the loop momenta one after another.
///
/// The exponent is held as a bordered quadratic form over (k, p) with
/// split-complex entries; eliminating k_j is one fraction-free pivot step, so
/// the successive pivots are f_j / f_{j-1} and every intermediate quantity
/// stays polynomial. The imaginary external-momentum phase left at the end is
/// dropped; W collects the real exponent over s_e_f.
GaussianResult gaussian_reduce(const MomentumRouting& routing, const PhaseData& phases,
                               const std::vector<Polynomial>& betas);

/// The plain Schwinger parameters a_1 .. a_L.
std::vector<Polynomial> alpha_parameters(const RegistryPtr& registry, int lines);

} // namespace ncparam

namespace Eigen {

template <>
struct NumTraits<ncparam::SplitComplex> : GenericNumTraits<ncparam::SplitComplex> {
    using Real = ncparam::SplitComplex;
    using NonInteger = ncparam::SplitComplex;
    using Nested = ncparam::SplitComplex;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 6,
        MulCost = 12
    };
};

} // namespace Eigen
