#include "ncparam/report.hpp"

#include "ncparam/error.hpp"

#include <json.hpp>

#include <sstream>

namespace ncparam {

namespace {

using Json = nlohmann::ordered_json;

Json parameter(const std::optional<Rational>& q) {
    return q ? Json(to_string(*q)) : Json(nullptr);
}

std::string json_report(const AmplitudeExpansion& ex, const PowerCounting& pc) {
    const TopologySummary& t = ex.topology;
    Json out;
    out["graph"] = ex.graph_name;
    out["topology"] = {{"n", t.n}, {"L", t.L}, {"F", t.F}, {"g", t.g}, {"B", t.B}, {"N", t.N}};
    out["parameters"] = {{"theta", parameter(ex.params.theta)},
                         {"a", parameter(ex.params.a)},
                         {"m2", parameter(ex.params.m_sq)},
                         {"D", ex.params.D}};
    out["commutative"] = {{"U", ex.commutative.U.to_string()}, {"V", ex.commutative.V.to_string()}};
    Json terms = Json::array();
    for (const auto& term : ex.terms) {
        terms.push_back({{"subset", term.lines()},
                         {"bitmask", term.subset},
                         {"sign", term.sign},
                         {"prefactorPower", term.prefactor_power},
                         {"Utheta", term.first.to_string()},
                         {"W", term.second.to_string()},
                         {"massExponent", term.mass_exponent.to_string()}});
    }
    out["terms"] = std::move(terms);
    out["powerCounting"] = {{"minDeg", pc.min_degree},
                            {"omega", pc.omega},
                            {"closedFormOmega", pc.closed_form_omega ? Json(*pc.closed_form_omega) : Json(nullptr)},
                            {"uvDivergent", pc.uv_divergent}};
    out["prefactor"] = {{"L", ex.L}, {"D", ex.D}};
    return out.dump(2) + "\n";
}

std::string subset_name(const AmplitudeTerm& term) {
    std::string out = "{";
    for (int l : term.lines())
        out += (out.size() > 1 ? "," : "") + std::to_string(l);
    return out + "}";
}

std::string half_power(int D) {
    return D % 2 == 0 ? std::to_string(D / 2) : std::to_string(D) + "/2";
}

void text_term(std::ostringstream& out, const AmplitudeExpansion& ex, const AmplitudeTerm& term) {
    const char* sign = term.sign > 0 ? "+" : "-";
    out << "  " << sign << " (a/theta^2)^" << term.prefactor_power << " int prod d a_i";
    if (term.prefactor_power > 0)
        out << " prod_{i in S} d a_i_1 d a_i_2";
    out << " [U_theta]^(-" << half_power(ex.D) << ") exp(-W/U_theta) exp(-M)\n";
    out << "      U_theta = " << term.first << '\n';
    out << "      W       = " << term.second << '\n';
    out << "      M       = " << term.mass_exponent << '\n';
}

std::string text_report(const AmplitudeExpansion& ex, const PowerCounting& pc) {
    const TopologySummary& t = ex.topology;
    std::ostringstream out;
    out << "graph " << ex.graph_name << '\n';
    out << "topology: n=" << t.n << " L=" << t.L << " F=" << t.F << " g=" << t.g << " B=" << t.B << " N=" << t.N
        << (t.g > 0 ? "  (non-planar)" : t.B > 1 ? "  (planar irregular)" : "  (planar regular)") << '\n';
    out << "commutative: U = " << ex.commutative.U << '\n';
    out << "             V = " << ex.commutative.V << '\n';
    out << '\n';
    out << "A = pi^(" << ex.L << "*" << ex.D << "/2) * sum over " << ex.terms.size() << " terms\n";
    out << "term S={} (bitmask 0):\n";
    text_term(out, ex, ex.terms.front());
    if (ex.terms.size() > 1)
        out << "corrections:\n";
    for (std::size_t i = 1; i < ex.terms.size(); ++i) {
        const AmplitudeTerm& term = ex.terms[i];
        out << "term S=" << subset_name(term) << " (bitmask " << term.subset << "):\n";
        text_term(out, ex, term);
    }
    out << '\n';
    out << "power counting (D=" << pc.D << "): minDeg=" << pc.min_degree << " omega=" << pc.omega;
    if (pc.closed_form_omega)
        out << " closed form (N-4)/2+4g=" << *pc.closed_form_omega;
    out << (pc.uv_divergent ? " UV divergent (omega <= 0)" : " UV convergent (omega > 0)") << '\n';
    return out.str();
}

} // namespace

std::string emit_report(const AmplitudeExpansion& expansion, const PowerCounting& pc, ReportFormat format) {
    return format == ReportFormat::Json ? json_report(expansion, pc) : text_report(expansion, pc);
}

ReportFormat parse_report_format(const std::string& name) {
    if (name == "json")
        return ReportFormat::Json;
    if (name == "text")
        return ReportFormat::Text;
    throw Error("unknown format '" + name + "' (json or text)");
}

} // namespace ncparam
