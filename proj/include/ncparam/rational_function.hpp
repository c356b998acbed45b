#pragma once

#include "ncparam/polynomial.hpp"

#include <string>

namespace ncparam {

/// Quotient of two polynomials on one registry.
///
/// Normalized so that the denominator is primitive with positive leading
/// coefficient. No gcd cancellation is attempted; equality is decided by
/// cross-multiplication.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(Polynomial numerator) : num_(std::move(numerator)), den_(1) {} // NOLINT
    RationalFunction(Polynomial numerator, Polynomial denominator);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Numerator after exact division, if the denominator divides it.
    std::optional<Polynomial> as_polynomial() const;

    std::string to_string() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

/// Sum of two rational functions over their product denominator (or the
/// shared one when equal).
RationalFunction ratfun_add(const RationalFunction& a, const RationalFunction& b);

} // namespace ncparam
