#pragma once

#include "ncparam/registry.hpp"

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncparam {

using Rational = mpq_class;
using Exponents = std::vector<std::uint16_t>;

/// Graded lexicographic order, largest monomial first.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// A default-constructed polynomial is zero and carries no registry; constants
/// may live without one and adopt the registry of the first operand they meet.
/// Mixing two different registries throws RegistryError.
class Polynomial {
public:
    using Terms = std::map<Exponents, Rational, GrlexGreater>;

    Polynomial() = default;
    Polynomial(int value) : Polynomial(Rational(value)) {} // NOLINT: implicit ring embedding
    Polynomial(const Rational& value, RegistryPtr registry = nullptr);

    static Polynomial variable(RegistryPtr registry, int index);
    static Polynomial variable(RegistryPtr registry, std::string_view name);
    /// Inverse of to_string(); also accepts + - * ^ and parentheses.
    static Polynomial parse(std::string_view text, RegistryPtr registry);

    const RegistryPtr& registry() const { return registry_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of the constant term (zero when absent).
    Rational constant_term() const;
    const Rational& leading_coefficient() const;

    /// Largest exponent of one variable.
    int degree(int var) const;
    int total_degree() const;
    /// Min and max, over all terms, of the total degree restricted to `vars`.
    std::optional<std::pair<int, int>> degree_range(std::span<const int> vars) const;
    bool is_homogeneous(std::span<const int> vars, int degree) const;

    /// gcd of numerators over lcm of denominators; zero for the zero polynomial.
    Rational content() const;

    Polynomial substitute(int var, const Polynomial& value) const;
    /// Simultaneous substitution.
    Polynomial substitute(const std::map<int, Polynomial>& values) const;

    /// Exact quotient; throws Error when `divisor` does not divide.
    Polynomial exact_divide(const Polynomial& divisor) const;

    double evaluate(const std::function<double(int)>& value_of) const;

    std::string to_string() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator-(Polynomial p);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(const Rational& factor) const;
    Polynomial pow(unsigned exponent) const;

private:
    void adopt(const Polynomial& other);
    void add_term(const Exponents& exponents, const Rational& coefficient);

    RegistryPtr registry_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Canonical string of a rational: "n" or "n/d".
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

} // namespace ncparam

namespace Eigen {

template <>
struct NumTraits<ncparam::Polynomial> : GenericNumTraits<ncparam::Polynomial> {
    using Real = ncparam::Polynomial;
    using NonInteger = ncparam::Polynomial;
    using Nested = ncparam::Polynomial;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };
};

} // namespace Eigen
