#include "ncparam/graph_file.hpp"

#include "ncparam/error.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace ncparam {

namespace {

bool is_identifier_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
}

/// Cursor over one line of the file.
class LineScanner {
public:
    LineScanner(std::string_view text, int line) : text_(text), line_(line) {}

    [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
        throw ParseError(std::to_string(line_) + ":" + std::to_string(pos + 1) + ": " + message);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0)
            ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    std::size_t position() const { return pos_; }

    std::string identifier(const char* what) {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_identifier_char(text_[pos_]))
            ++pos_;
        if (start == pos_)
            fail(std::string("expected ") + what);
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    HalfEdgeRef half_edge() {
        HalfEdgeRef ref;
        ref.vertex = identifier("vertex id");
        if (pos_ >= text_.size() || text_[pos_] != '.')
            fail("expected '.' in half-edge reference v.h");
        ++pos_;
        ref.label = identifier("half-edge label");
        return ref;
    }

    /// key=value with no spaces inside.
    std::pair<std::string, std::string> assignment() {
        std::string key = identifier("parameter name");
        expect('=');
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) == 0)
            ++pos_;
        if (start == pos_)
            fail("expected value for " + key);
        return {std::move(key), std::string(text_.substr(start, pos_ - start))};
    }

private:
    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

std::optional<Rational> parse_value(const LineScanner& scan, std::size_t at, const std::string& value) {
    if (value == "sym")
        return std::nullopt;
    try {
        return parse_rational(value);
    } catch (const Error&) {
        scan.fail_at(at, "invalid rational '" + value + "'");
    }
}

} // namespace

GraphFile read_graph_file(std::string_view text, std::string name) {
    GraphFile file;
    file.description.name = std::move(name);
    std::set<std::string> seen_params;

    int line_number = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(begin, end - begin);
        begin = end + 1;
        ++line_number;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        LineScanner scan(line, line_number);
        if (scan.at_end())
            continue;

        const std::size_t keyword_at = scan.position();
        const std::string keyword = scan.identifier("keyword");
        if (keyword == "vertex") {
            GraphDescription::VertexRecord v;
            v.id = scan.identifier("vertex id");
            scan.expect(':');
            while (!scan.at_end())
                v.half_edges.push_back(scan.identifier("half-edge label"));
            file.description.vertices.push_back(std::move(v));
        } else if (keyword == "edge") {
            GraphDescription::LineRecord e;
            e.id = scan.identifier("edge id");
            scan.expect(':');
            e.tail = scan.half_edge();
            e.head = scan.half_edge();
            if (!scan.at_end())
                scan.fail("trailing input after edge");
            file.description.lines.push_back(std::move(e));
        } else if (keyword == "ext") {
            GraphDescription::ExternalRecord x;
            x.id = scan.identifier("external id");
            scan.expect(':');
            x.at = scan.half_edge();
            if (!scan.at_end())
                scan.fail("trailing input after external leg");
            file.description.externals.push_back(std::move(x));
        } else if (keyword == "param") {
            if (scan.at_end())
                scan.fail("expected key=value");
            while (!scan.at_end()) {
                const std::size_t at = scan.position();
                const auto [key, value] = scan.assignment();
                if (!seen_params.insert(key).second)
                    scan.fail_at(at, "parameter '" + key + "' given twice");
                if (key == "theta") {
                    file.params.theta = parse_value(scan, at, value);
                } else if (key == "a") {
                    file.params.a = parse_value(scan, at, value);
                } else if (key == "m2") {
                    file.params.m_sq = parse_value(scan, at, value);
                } else if (key == "D") {
                    const auto d = parse_value(scan, at, value);
                    if (!d || d->get_den() != 1 || !d->get_num().fits_sint_p())
                        scan.fail_at(at, "D must be an integer");
                    file.params.D = static_cast<int>(d->get_num().get_si());
                } else {
                    scan.fail_at(at, "unknown parameter '" + key + "'");
                }
            }
        } else {
            scan.fail_at(keyword_at, "unknown keyword '" + keyword + "'");
        }
    }
    if (file.description.vertices.empty())
        throw ParseError(std::to_string(line_number) + ":1: no vertices");
    return file;
}

ParsedGraph parse_graph_file(std::string_view text, std::string name, BuildOptions options) {
    GraphFile file = read_graph_file(text, std::move(name));
    file.params.validate();
    return {RibbonGraph::build(file.description, options), file.params};
}

std::string print_graph_file(const GraphDescription& description, const ModelParameters& params) {
    std::ostringstream out;
    for (const auto& v : description.vertices) {
        out << "vertex " << v.id << ':';
        for (const auto& h : v.half_edges)
            out << ' ' << h;
        out << '\n';
    }
    for (const auto& e : description.lines)
        out << "edge " << e.id << ": " << e.tail.vertex << '.' << e.tail.label << ' ' << e.head.vertex << '.'
            << e.head.label << '\n';
    for (const auto& x : description.externals)
        out << "ext " << x.id << ": " << x.at.vertex << '.' << x.at.label << '\n';
    auto value = [](const std::optional<Rational>& q) { return q ? to_string(*q) : std::string("sym"); };
    out << "param theta=" << value(params.theta) << " a=" << value(params.a) << " m2=" << value(params.m_sq)
        << " D=" << params.D << '\n';
    return out.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace ncparam
