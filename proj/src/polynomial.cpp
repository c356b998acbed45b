#include "ncparam/polynomial.hpp"

#include "ncparam/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ncparam {

namespace {

int degree_of(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

Exponents zeros(const RegistryPtr& registry) {
    return Exponents(registry ? static_cast<std::size_t>(registry->size()) : 0u, 0);
}

bool compatible(const RegistryPtr& a, const RegistryPtr& b) {
    return !a || !b || a == b || a->same_as(*b);
}

} // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const int da = degree_of(a);
    const int db = degree_of(b);
    if (da != db)
        return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational parse_rational(std::string_view text) {
    Rational q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0)
        throw ParseError("malformed rational '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

Polynomial::Polynomial(const Rational& value, RegistryPtr registry) : registry_(std::move(registry)) {
    Rational q = value;
    q.canonicalize();
    if (q != 0)
        terms_.emplace(zeros(registry_), std::move(q));
}

Polynomial Polynomial::variable(RegistryPtr registry, int index) {
    if (!registry || index < 0 || index >= registry->size())
        throw RegistryError("variable index out of range");
    Polynomial p(0, registry);
    Exponents e = zeros(registry);
    e[static_cast<std::size_t>(index)] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Polynomial Polynomial::variable(RegistryPtr registry, std::string_view name) {
    if (!registry)
        throw RegistryError("no registry");
    const int index = registry->index(name);
    return variable(std::move(registry), index);
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const {
    if (terms_.empty())
        return 0;
    const auto& last = *terms_.rbegin();
    return degree_of(last.first) == 0 ? last.second : Rational(0);
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty())
        throw Error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

int Polynomial::degree(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_)
        if (static_cast<std::size_t>(var) < e.size())
            d = std::max<int>(d, e[static_cast<std::size_t>(var)]);
    return d;
}

int Polynomial::total_degree() const {
    return terms_.empty() ? 0 : degree_of(terms_.begin()->first);
}

std::optional<std::pair<int, int>> Polynomial::degree_range(std::span<const int> vars) const {
    if (terms_.empty())
        return std::nullopt;
    std::pair<int, int> range{std::numeric_limits<int>::max(), 0};
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int v : vars)
            if (static_cast<std::size_t>(v) < e.size())
                d += e[static_cast<std::size_t>(v)];
        range.first = std::min(range.first, d);
        range.second = std::max(range.second, d);
    }
    return range;
}

bool Polynomial::is_homogeneous(std::span<const int> vars, int degree) const {
    const auto range = degree_range(vars);
    return !range || (range->first == degree && range->second == degree);
}

Rational Polynomial::content() const {
    if (terms_.empty())
        return 0;
    mpz_class num = 0;
    mpz_class den = 1;
    for (const auto& [e, c] : terms_) {
        num = gcd(num, c.get_num());
        den = lcm(den, c.get_den());
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

void Polynomial::adopt(const Polynomial& other) {
    if (!compatible(registry_, other.registry_))
        throw RegistryError("polynomials built on different registries");
    if (!registry_ && other.registry_) {
        registry_ = other.registry_;
        Terms rebased;
        for (auto& [e, c] : terms_)
            rebased.emplace(zeros(registry_), c);
        terms_ = std::move(rebased);
    }
}

void Polynomial::add_term(const Exponents& exponents, const Rational& coefficient) {
    if (coefficient == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    adopt(rhs);
    const Exponents base = zeros(registry_);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e.empty() ? base : e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    adopt(rhs);
    const Exponents base = zeros(registry_);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e.empty() ? base : e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial out;
    out.adopt(lhs);
    out.adopt(rhs);
    if (lhs.is_zero() || rhs.is_zero())
        return out;
    const std::size_t n = out.registry_ ? static_cast<std::size_t>(out.registry_->size()) : 0u;
    Exponents e(n);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < n; ++i)
                e[i] = static_cast<std::uint16_t>((ea.empty() ? 0 : ea[i]) + (eb.empty() ? 0 : eb[i]));
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial operator-(Polynomial p) {
    for (auto& [e, c] : p.terms_)
        c = -c;
    return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!compatible(a.registry_, b.registry_))
        throw RegistryError("comparing polynomials on different registries");
    if (a.terms_.size() != b.terms_.size())
        return false;
    if (a.is_constant() && b.is_constant())
        return a.constant_term() == b.constant_term();
    return a.terms_ == b.terms_;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
    Rational q = factor;
    q.canonicalize();
    if (q == 0)
        return Polynomial(0, registry_);
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_)
        c *= q;
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result(1, registry_);
    Polynomial base = *this;
    while (exponent) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1u;
        if (exponent)
            base *= base;
    }
    return result;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
    return substitute(std::map<int, Polynomial>{{var, value}});
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& values) const {
    Polynomial out(0, registry_);
    for (const auto& [v, p] : values)
        out.adopt(p);
    // Powers of each substituted value are reused across terms.
    std::map<std::pair<int, int>, Polynomial> powers;
    auto power_of = [&](int var, int k) -> const Polynomial& {
        auto it = powers.find({var, k});
        if (it == powers.end())
            it = powers.emplace(std::make_pair(var, k), values.at(var).pow(static_cast<unsigned>(k))).first;
        return it->second;
    };
    for (const auto& [e, c] : terms_) {
        Exponents kept = e;
        Polynomial factor(c, out.registry_);
        for (const auto& [var, p] : values) {
            const auto idx = static_cast<std::size_t>(var);
            if (idx < kept.size() && kept[idx] != 0) {
                factor *= power_of(var, kept[idx]);
                kept[idx] = 0;
            }
        }
        Polynomial monomial(0, out.registry_);
        monomial.adopt(factor);
        if (kept.empty())
            kept = zeros(monomial.registry_);
        monomial.terms_.emplace(kept, Rational(1));
        out += factor * monomial;
    }
    return out;
}

Polynomial Polynomial::exact_divide(const Polynomial& divisor) const {
    if (divisor.is_zero())
        throw Error("division by zero polynomial");
    Polynomial quotient(0, registry_);
    quotient.adopt(divisor);
    Polynomial remainder = *this;
    remainder.adopt(divisor);
    Polynomial d = divisor;
    d.adopt(remainder);
    const auto& [lead_e, lead_c] = *d.terms_.begin();
    while (!remainder.is_zero()) {
        const auto& [re, rc] = *remainder.terms_.begin();
        Exponents q(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) {
            if (re[i] < lead_e[i])
                throw Error("polynomial division is not exact");
            q[i] = static_cast<std::uint16_t>(re[i] - lead_e[i]);
        }
        Polynomial step(0, remainder.registry_);
        step.terms_.emplace(std::move(q), rc / lead_c);
        quotient += step;
        remainder -= step * d;
    }
    return quotient;
}

double Polynomial::evaluate(const std::function<double(int)>& value_of) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k)
                term *= value_of(static_cast<int>(i));
        sum += term;
    }
    return sum;
}

std::string Polynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        const Rational magnitude = abs(c);
        if (negative)
            out << '-';
        else if (!first)
            out << '+';
        first = false;

        std::string monomial;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!monomial.empty())
                monomial += '*';
            monomial += registry_->name(static_cast<int>(i));
            if (e[i] > 1)
                monomial += '^' + std::to_string(e[i]);
        }
        if (monomial.empty())
            out << ncparam::to_string(magnitude);
        else if (magnitude == 1)
            out << monomial;
        else
            out << ncparam::to_string(magnitude) << '*' << monomial;
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
}

namespace {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, RegistryPtr registry)
        : text_(text), registry_(std::move(registry)) {}

    Polynomial parse() {
        Polynomial p = expression();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expression() {
        Polynomial acc = Polynomial(0, registry_);
        bool first = true;
        for (;;) {
            skip_space();
            if (!first && pos_ >= text_.size())
                break;
            int sign = 1;
            if (accept('+'))
                sign = 1;
            else if (accept('-'))
                sign = -1;
            else if (!first)
                break;
            Polynomial t = term();
            acc += sign > 0 ? t : -t;
            first = false;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = power();
        for (;;) {
            if (accept('*')) {
                acc *= power();
            } else if (accept('/')) {
                const Polynomial divisor = power();
                if (!divisor.is_constant() || divisor.is_zero())
                    fail("division by a non-constant or zero");
                acc = acc.scaled(1 / divisor.constant_term());
            } else {
                return acc;
            }
        }
    }

    Polynomial power() {
        Polynomial base = atom();
        if (accept('^')) {
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    std::string_view digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    Polynomial atom() {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string literal(digits());
            if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_;
                literal += '/';
                literal += digits();
            }
            return Polynomial(parse_rational(literal), registry_);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const auto name = text_.substr(start, pos_ - start);
            if (!registry_)
                fail("symbol without registry");
            const auto index = registry_->find(name);
            if (!index)
                fail("unknown symbol '" + std::string(name) + "'");
            return Polynomial::variable(registry_, *index);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    RegistryPtr registry_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial Polynomial::parse(std::string_view text, RegistryPtr registry) {
    return ExpressionParser(text, std::move(registry)).parse();
}

} // namespace ncparam
