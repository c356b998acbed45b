#include "ncparam/rational_function.hpp"

#include "ncparam/error.hpp"

namespace ncparam {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero())
        throw Error("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        num_ = Polynomial(0, num_.registry() ? num_.registry() : den_.registry());
        den_ = Polynomial(1, num_.registry());
        return;
    }
    Rational scale = 1 / den_.content();
    if (den_.leading_coefficient() < 0)
        scale = -scale;
    num_ = num_.scaled(scale);
    den_ = den_.scaled(scale);
    if (den_.is_constant()) {
        num_ = num_.scaled(1 / den_.constant_term());
        den_ = Polynomial(1, den_.registry());
    }
}

std::optional<Polynomial> RationalFunction::as_polynomial() const {
    try {
        return num_.exact_divide(den_);
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant())
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction ratfun_add(const RationalFunction& a, const RationalFunction& b) {
    if (a.denominator() == b.denominator())
        return RationalFunction(a.numerator() + b.numerator(), a.denominator());
    return RationalFunction(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                            a.denominator() * b.denominator());
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return ratfun_add(a, b);
}

RationalFunction operator-(const RationalFunction& a) {
    return RationalFunction(-a.num_, a.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return ratfun_add(a, -b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero())
        throw Error("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

} // namespace ncparam
