#include "ncparam/registry.hpp"

#include "ncparam/error.hpp"

#include <string>

namespace ncparam {

VariableRegistry::VariableRegistry(std::vector<std::string> names, int lines, int momenta)
    : names_(std::move(names)), lines_(lines), momenta_(momenta) {
    for (int i = 0; i < size(); ++i) {
        const auto [it, inserted] = lookup_.emplace(names_[static_cast<std::size_t>(i)], i);
        if (!inserted)
            throw RegistryError("duplicate symbol '" + it->first + "'");
    }
}

RegistryPtr VariableRegistry::for_graph(int lines, int momenta, std::vector<std::string> extra) {
    if (lines < 0 || momenta < 0)
        throw RegistryError("negative registry dimensions");
    std::vector<std::string> names;
    for (int i = 1; i <= lines; ++i)
        names.push_back("a" + std::to_string(i));
    for (int i = 1; i <= lines; ++i)
        names.push_back("a" + std::to_string(i) + "_1");
    for (int i = 1; i <= lines; ++i)
        names.push_back("a" + std::to_string(i) + "_2");
    names.emplace_back("theta");
    for (int e = 1; e <= momenta; ++e)
        for (int f = e; f <= momenta; ++f)
            names.push_back("s_" + std::to_string(e) + "_" + std::to_string(f));
    for (int e = 1; e <= momenta; ++e)
        for (int f = e + 1; f <= momenta; ++f)
            names.push_back("w_" + std::to_string(e) + "_" + std::to_string(f));
    for (const char* fixed : {"msq", "m1sq", "m2sq", "rho"})
        names.emplace_back(fixed);
    for (auto& name : extra)
        names.push_back(std::move(name));
    return RegistryPtr(new VariableRegistry(std::move(names), lines, momenta));
}

RegistryPtr VariableRegistry::from_names(std::vector<std::string> names) {
    return RegistryPtr(new VariableRegistry(std::move(names), 0, 0));
}

std::optional<int> VariableRegistry::find(std::string_view name) const {
    const auto it = lookup_.find(std::string(name));
    if (it == lookup_.end())
        return std::nullopt;
    return it->second;
}

int VariableRegistry::index(std::string_view name) const {
    if (auto found = find(name))
        return *found;
    throw RegistryError("unknown symbol '" + std::string(name) + "'");
}

int VariableRegistry::alpha(int line) const {
    if (line < 1 || line > lines_)
        throw RegistryError("line index " + std::to_string(line) + " out of range");
    return line - 1;
}

int VariableRegistry::alpha1(int line) const { return alpha(line) + lines_; }

int VariableRegistry::alpha2(int line) const { return alpha(line) + 2 * lines_; }

int VariableRegistry::s(int e, int f) const {
    if (e > f)
        std::swap(e, f);
    if (e < 1 || f > momenta_)
        throw RegistryError("momentum index out of range in s(" + std::to_string(e) + "," +
                            std::to_string(f) + ")");
    return index("s_" + std::to_string(e) + "_" + std::to_string(f));
}

std::pair<int, int> VariableRegistry::w(int e, int f) const {
    if (e == f)
        throw RegistryError("w(e,e) vanishes identically");
    int sign = 1;
    if (e > f) {
        std::swap(e, f);
        sign = -1;
    }
    if (e < 1 || f > momenta_)
        throw RegistryError("momentum index out of range in w");
    return {index("w_" + std::to_string(e) + "_" + std::to_string(f)), sign};
}

} // namespace ncparam
