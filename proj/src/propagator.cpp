#include "ncparam/propagator.hpp"

#include "ncparam/error.hpp"

#include <cmath>

namespace ncparam {

namespace {

bool is_rational_square(const Rational& q, Rational& root) {
    if (q < 0)
        return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return false;
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    root = Rational(num, den);
    root.canonicalize();
    return true;
}

const Rational& require(const std::optional<Rational>& value, const char* what) {
    if (!value)
        throw ConstraintError(std::string("numeric value of ") + what + " required");
    return *value;
}

} // namespace

void ModelParameters::validate() const {
    if (D <= 0 || D % 2 != 0)
        throw ConstraintError("dimension D must be even and positive, got " + std::to_string(D));
    if (theta && *theta <= 0)
        throw ConstraintError("theta must be positive");
    if (a && *a <= 0)
        throw ConstraintError("a must be positive");
    if (m_sq && *m_sq < 0)
        throw ConstraintError("m^2 must be nonnegative");
    if (numeric()) {
        const Rational bound = (*theta) * (*theta) * (*m_sq) * (*m_sq) / 4;
        if (bound < *a)
            throw ConstraintError("parameters violate theta^2 m^4 / 4 >= a > 0");
    }
}

QuadraticSurd::QuadraticSurd(Rational rational, Rational coefficient, Rational radicand)
    : r_(std::move(rational)), c_(std::move(coefficient)), d_(std::move(radicand)) {
    r_.canonicalize();
    c_.canonicalize();
    d_.canonicalize();
    if (d_ < 0)
        throw Error("negative radicand");
    Rational root;
    if (c_ != 0 && is_rational_square(d_, root)) {
        r_ += c_ * root;
        c_ = 0;
    }
    if (c_ == 0)
        d_ = 0;
}

double QuadraticSurd::to_double() const {
    return r_.get_d() + c_.get_d() * std::sqrt(d_.get_d());
}

namespace {

Rational common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.is_rational())
        return y.radicand();
    if (!y.is_rational() && x.radicand() != y.radicand())
        throw Error("mixing different quadratic fields");
    return x.radicand();
}

} // namespace

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    const Rational d = common_radicand(x, y);
    return {x.r_ + y.r_, x.c_ + y.c_, d};
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
    const Rational d = common_radicand(x, y);
    return {x.r_ - y.r_, x.c_ - y.c_, d};
}

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    const Rational d = common_radicand(x, y);
    return {x.r_ * y.r_ + x.c_ * y.c_ * d, x.r_ * y.c_ + x.c_ * y.r_, d};
}

bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && (x.c_ == 0 || x.d_ == y.d_);
}

QuadraticSurd QuadraticSurd::inverse() const {
    const Rational norm = r_ * r_ - c_ * c_ * d_;
    if (norm == 0)
        throw Error("inverse of zero in quadratic field");
    return {r_ / norm, -c_ / norm, d_};
}

MassSpectrum split_propagator(const ModelParameters& params) {
    params.validate();
    MassSpectrum spectrum;
    if (!params.numeric())
        return spectrum;
    const Rational& m_sq = *params.m_sq;
    const Rational& theta = *params.theta;
    const Rational& a = *params.a;
    // m_{1,2}^2 = (m^2 -+ sqrt(m^4 - 4 a / theta^2)) / 2
    const Rational discriminant = m_sq * m_sq - 4 * a / (theta * theta);
    if (discriminant < 0)
        throw ConstraintError("negative discriminant: theta^4 m^4 - 4 theta^2 a < 0 violates theta^2 m^4 / 4 >= a");
    spectrum.symbolic = false;
    spectrum.m1_sq = QuadraticSurd(m_sq / 2, Rational(-1, 2), discriminant);
    spectrum.m2_sq = QuadraticSurd(m_sq / 2, Rational(1, 2), discriminant);
    return spectrum;
}

Rational full_propagator(const Rational& p_sq, const ModelParameters& params) {
    const Rational& theta = require(params.theta, "theta");
    const Rational denominator = p_sq + require(params.m_sq, "m^2") + require(params.a, "a") / (theta * theta * p_sq);
    return 1 / denominator;
}

QuadraticSurd split_propagator_value(const Rational& p_sq, const ModelParameters& params,
                                     const MassSpectrum& spectrum) {
    if (spectrum.symbolic)
        throw ConstraintError("numeric mass spectrum required");
    const Rational& theta = require(params.theta, "theta");
    const QuadraticSurd commutative = QuadraticSurd(p_sq + require(params.m_sq, "m^2")).inverse();
    const QuadraticSurd correction_den = QuadraticSurd(p_sq + *params.m_sq) * (QuadraticSurd(p_sq) + *spectrum.m1_sq) *
                                         (QuadraticSurd(p_sq) + *spectrum.m2_sq);
    const QuadraticSurd weight(require(params.a, "a") / (theta * theta));
    return commutative - weight / correction_den;
}

std::pair<double, double> mass_roots(double m_sq, double theta, double a) {
    double discriminant = m_sq * m_sq - 4.0 * a / (theta * theta);
    // Round-off at the double-root boundary.
    if (discriminant < 0.0 && discriminant > -1e-12 * m_sq * m_sq)
        discriminant = 0.0;
    if (discriminant < 0.0)
        throw ConstraintError("negative discriminant: parameters violate theta^2 m^4 / 4 >= a");
    const double root = std::sqrt(discriminant);
    // Cancellation-free form for the smaller root.
    const double m2 = 0.5 * (m_sq + root);
    const double m1 = m2 > 0.0 ? (a / (theta * theta)) / m2 : 0.0;
    return {m1, m2};
}

double split_propagator_float(double p_sq, double m_sq, double theta, double a) {
    const auto [m1, m2] = mass_roots(m_sq, theta, a);
    const double base = p_sq + m_sq;
    return 1.0 / base - (a / (theta * theta)) / (base * (p_sq + m1) * (p_sq + m2));
}

double full_propagator_float(double p_sq, double m_sq, double theta, double a) {
    return 1.0 / (p_sq + m_sq + a / (theta * theta * p_sq));
}

} // namespace ncparam
