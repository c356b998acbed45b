#include "ncparam/integrand.hpp"

#include "ncparam/error.hpp"

#include <charconv>
#include <cmath>

namespace ncparam {

NumericPoint parse_point(std::string_view text) {
    NumericPoint point;
    std::size_t begin = 0;
    while (begin < text.size()) {
        std::size_t end = text.find(',', begin);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string_view item = text.substr(begin, end - begin);
        const std::size_t eq = item.find('=');
        const std::string column = std::to_string(begin + 1);
        if (eq == std::string_view::npos || eq == 0)
            throw ParseError("point:" + column + ": expected name=value");
        const std::string key(item.substr(0, eq));
        const std::string value(item.substr(eq + 1));
        std::size_t used = 0;
        double number = 0.0;
        try {
            number = std::stod(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != value.size() || value.empty())
            throw ParseError("point:" + column + ": invalid number '" + value + "'");
        if (!point.emplace(key, number).second)
            throw ParseError("point:" + column + ": '" + key + "' given twice");
        begin = end + 1;
    }
    return point;
}

namespace {

class PointValues {
public:
    PointValues(const AmplitudeExpansion& ex, const NumericPoint& point) : ex_(ex), point_(point) {
        for (const auto& [key, value] : point) {
            if (key != "a" && !ex.registry->find(key))
                throw Error("unknown symbol '" + key + "' in point");
            if (key == "m1sq" || key == "m2sq")
                throw Error(key + " is derived from msq, theta and a; do not set it");
        }
    }

    double parameter(const std::string& key, const std::optional<Rational>& fallback) const {
        if (const auto it = point_.find(key); it != point_.end())
            return it->second;
        if (fallback)
            return fallback->get_d();
        throw Error("no value for " + key);
    }

    double theta() const { return parameter("theta", ex_.params.theta); }
    double msq() const { return parameter("msq", ex_.params.m_sq); }
    double a() const { return parameter("a", ex_.params.a); }

    void check_constraint() const {
        const double t = theta();
        const double m = msq();
        const double av = a();
        if (!(t > 0.0) || !(av > 0.0) || t * t * m * m / 4.0 < av)
            throw ConstraintError("parameters violate theta^2 m^4 / 4 >= a > 0");
    }

    double value(int index) {
        const std::string& name = ex_.registry->name(static_cast<int>(index));
        if (name == "theta")
            return theta();
        if (name == "msq")
            return msq();
        if (name == "m1sq" || name == "m2sq") {
            check_constraint();
            const auto [m1, m2] = mass_roots(msq(), theta(), a());
            return name == "m1sq" ? m1 : m2;
        }
        const auto it = point_.find(name);
        if (it == point_.end())
            throw Error("no value for " + name);
        if (name[0] == 'a' && !(it->second > 0.0))
            throw ConstraintError("Schwinger parameter " + name + " must be positive");
        return it->second;
    }

private:
    const AmplitudeExpansion& ex_;
    const NumericPoint& point_;
};

} // namespace

double eval_integrand(const AmplitudeExpansion& expansion, std::uint64_t subset, const NumericPoint& point) {
    const AmplitudeTerm& term = expansion.term(subset);
    PointValues values(expansion, point);
    auto lookup = [&](int index) { return values.value(index); };

    double prefactor = term.sign;
    if (term.prefactor_power > 0) {
        values.check_constraint();
        const double t = values.theta();
        prefactor *= std::pow(values.a() / (t * t), term.prefactor_power);
    }
    const double first = term.first.evaluate(lookup);
    if (!(first > 0.0))
        throw ConsistencyError("first polynomial is not positive at the point");
    const double second = term.second.evaluate(lookup);
    const double mass = term.mass_exponent.evaluate(lookup);
    return prefactor * std::pow(first, -0.5 * expansion.D) * std::exp(-second / first) * std::exp(-mass);
}

double eval_commutative_integrand(const AmplitudeExpansion& expansion, const NumericPoint& point) {
    PointValues values(expansion, point);
    auto lookup = [&](int index) { return values.value(index); };
    const double u = expansion.commutative.U.evaluate(lookup);
    const double v = expansion.commutative.V.evaluate(lookup);
    const double mass = mass_exponent(expansion.registry, expansion.L, 0).evaluate(lookup);
    return std::pow(u, -0.5 * expansion.D) * std::exp(-v / u) * std::exp(-mass);
}

} // namespace ncparam
