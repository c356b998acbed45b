#pragma once

#include "ncparam/polynomial.hpp"

#include <optional>

namespace ncparam {

/// Parameters of the propagator 1/(p^2 + m^2 + a/(theta^2 p^2)) in D dimensions.
/// Unset optionals stay symbolic.
struct ModelParameters {
    std::optional<Rational> m_sq;
    std::optional<Rational> theta;
    std::optional<Rational> a;
    int D = 4;

    bool numeric() const { return m_sq && theta && a; }
    /// Throws ConstraintError unless D is even and positive, theta > 0, a > 0
    /// and, when all are numeric, theta^2 m^4 / 4 >= a.
    void validate() const;
};

/// Element r + c sqrt(d) of Q(sqrt d), d >= 0 fixed per computation.
class QuadraticSurd {
public:
    QuadraticSurd(Rational rational = 0, Rational coefficient = 0, Rational radicand = 0);

    const Rational& rational_part() const { return r_; }
    const Rational& coefficient() const { return c_; }
    const Rational& radicand() const { return d_; }
    bool is_rational() const { return c_ == 0; }
    double to_double() const;

    QuadraticSurd inverse() const;

    friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) { return x * y.inverse(); }
    friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y);

private:
    Rational r_, c_, d_;
};

/// Auxiliary squared masses m1^2 <= m2^2 with
///   1/(p^2+m^2+a/(theta^2 p^2))
///     = 1/(p^2+m^2) - (a/theta^2) / ((p^2+m^2)(p^2+m1^2)(p^2+m2^2)).
/// They are the negatives of the roots in p^2 of theta^2 p^2 (p^2+m^2) + a.
struct MassSpectrum {
    bool symbolic = true;
    std::optional<QuadraticSurd> m1_sq; // exact when numeric
    std::optional<QuadraticSurd> m2_sq;
};

/// Throws ConstraintError when theta^4 m^4 - 4 theta^2 a < 0.
MassSpectrum split_propagator(const ModelParameters& params);

/// 1/(p^2 + m^2 + a/(theta^2 p^2)), exact. Needs numeric parameters.
Rational full_propagator(const Rational& p_sq, const ModelParameters& params);
/// The split form, evaluated exactly in Q(sqrt d).
QuadraticSurd split_propagator_value(const Rational& p_sq, const ModelParameters& params,
                                     const MassSpectrum& spectrum);

/// Floating-point m1^2, m2^2 from the quadratic formula.
std::pair<double, double> mass_roots(double m_sq, double theta, double a);

/// The split form in double precision, with masses from mass_roots.
double split_propagator_float(double p_sq, double m_sq, double theta, double a);

/// 1/(p^2 + m^2 + a/(theta^2 p^2)) in double precision.
double full_propagator_float(double p_sq, double m_sq, double theta, double a);

} // namespace ncparam
