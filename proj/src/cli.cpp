#include "ncparam/cli.hpp"

#include "ncparam/amplitude.hpp"
#include "ncparam/error.hpp"
#include "ncparam/graph_file.hpp"
#include "ncparam/integrand.hpp"
#include "ncparam/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>

namespace ncparam {

SpanningTree tree_from_ids(const RibbonGraph& graph, const std::string& ids) {
    SpanningTree tree;
    std::size_t begin = 0;
    while (begin < ids.size()) {
        std::size_t end = ids.find(',', begin);
        if (end == std::string::npos)
            end = ids.size();
        const std::string id = ids.substr(begin, end - begin);
        const auto& lines = graph.lines();
        const auto it = std::find_if(lines.begin(), lines.end(), [&](const auto& l) { return l.id == id; });
        if (it == lines.end())
            throw GraphError("--tree: unknown edge '" + id + "'");
        tree.lines.push_back(static_cast<int>(it - lines.begin()));
        begin = end + 1;
    }
    std::sort(tree.lines.begin(), tree.lines.end());
    return tree;
}

namespace {

struct Common {
    std::string file;
    std::optional<int> D;
    bool any_degree = false;
    std::optional<std::string> tree;
};

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("file", common.file, "graph description file")->required();
    cmd->add_option("--D", common.D, "space dimension (even)");
    cmd->add_flag("--any-degree", common.any_degree, "accept vertices of any degree");
    cmd->add_option("--tree", common.tree, "spanning tree as comma-separated edge ids");
}

struct Loaded {
    bool quartic;
    AmplitudeExpansion expansion;
};

Loaded load(const Common& common) {
    const std::string stem = std::filesystem::path(common.file).stem().string();
    ParsedGraph parsed = parse_graph_file(slurp(common.file), stem, {common.any_degree});
    if (common.D)
        parsed.params.D = *common.D;
    ExpandOptions options;
    if (common.tree)
        options.tree = tree_from_ids(parsed.graph, *common.tree);
    return {parsed.graph.all_degree(4), expand_amplitude(parsed.graph, parsed.params, options)};
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parametric representation of noncommutative Phi^4 Feynman amplitudes", "ncparam"};
    app.require_subcommand(1);

    Common analyze_opts;
    std::string format = "json";
    CLI::App* analyze = app.add_subcommand("analyze", "topology, polynomials, expansion and power counting");
    add_common(analyze, analyze_opts);
    analyze->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    Common eval_opts;
    std::uint64_t bitmask = 0;
    std::string point_text;
    CLI::App* eval = app.add_subcommand("eval", "evaluate one term of the integrand");
    add_common(eval, eval_opts);
    eval->add_option("--term", bitmask, "subset bitmask (bit l-1 for line l)")->required();
    eval->add_option("--point", point_text, "name=value,... over a<i>, a<i>_1, a<i>_2, theta, a, msq, s_e_f")
        ->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitOk;
    } catch (const CLI::ParseError& e) {
        err << "ncparam: " << e.what() << '\n';
        return ExitUsage;
    }

    try {
        if (analyze->parsed()) {
            const Loaded loaded = load(analyze_opts);
            const PowerCounting pc = power_counting(loaded.expansion, loaded.quartic);
            out << emit_report(loaded.expansion, pc, parse_report_format(format));
        } else {
            const Loaded loaded = load(eval_opts);
            const double value = eval_integrand(loaded.expansion, bitmask, parse_point(point_text));
            out << std::setprecision(17) << value << '\n';
        }
    } catch (const ParseError& e) {
        err << "ncparam: " << e.what() << '\n';
        return ExitParse;
    } catch (const ConstraintError& e) {
        err << "ncparam: " << e.what() << '\n';
        return ExitConstraint;
    } catch (const ConsistencyError& e) {
        err << "ncparam: internal consistency failure: " << e.what() << '\n';
        return ExitConsistency;
    } catch (const std::exception& e) {
        err << "ncparam: " << e.what() << '\n';
        return ExitUsage;
    }
    return ExitOk;
}

} // namespace ncparam
