#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ncparam {

class VariableRegistry;
using RegistryPtr = std::shared_ptr<const VariableRegistry>;

/// Ordered symbol table shared by every polynomial of one computation.
///
/// The order of registration fixes the monomial order (graded lex), and with
/// it the canonical printed form. Symbols for a graph with L lines and M
/// independent external momenta are registered as
///
///     a1..aL, a1_1..aL_1, a1_2..aL_2, theta, s_e_f (e<=f), w_e_f (e<f),
///     msq, m1sq, m2sq, rho, <extra...>
///
/// where a<i> is the Schwinger parameter of line i, a<i>_1 / a<i>_2 are the
/// two parameters of its correction propagator, s_e_f = p_e.p_f and
/// w_e_f = p_e^p_f.
class VariableRegistry {
public:
    static RegistryPtr for_graph(int lines, int momenta, std::vector<std::string> extra = {});
    /// Free-form registry; used for scratch algebra and tests.
    static RegistryPtr from_names(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int index) const { return names_.at(static_cast<std::size_t>(index)); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> find(std::string_view name) const;
    /// Throws RegistryError for unknown names.
    int index(std::string_view name) const;

    int lines() const { return lines_; }
    int momenta() const { return momenta_; }

    // 1-based line / momentum indices, as in the printed names.
    int alpha(int line) const;
    int alpha1(int line) const;
    int alpha2(int line) const;
    int theta() const { return index("theta"); }
    int s(int e, int f) const;
    /// Index and sign: w(e,f) = sign * symbol.
    std::pair<int, int> w(int e, int f) const;
    int msq() const { return index("msq"); }
    int m1sq() const { return index("m1sq"); }
    int m2sq() const { return index("m2sq"); }
    int rho() const { return index("rho"); }

    bool same_as(const VariableRegistry& other) const { return names_ == other.names_; }

private:
    explicit VariableRegistry(std::vector<std::string> names, int lines, int momenta);

    std::vector<std::string> names_;
    std::unordered_map<std::string, int> lookup_;
    int lines_ = 0;
    int momenta_ = 0;
};

} // namespace ncparam
