#include "ncparam/ribbon.hpp"

#include "ncparam/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace ncparam {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent_[static_cast<std::size_t>(b)] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

std::string ref_name(const HalfEdgeRef& ref) {
    return ref.vertex + "." + ref.label;
}

} // namespace

RibbonGraph RibbonGraph::build(const GraphDescription& description, BuildOptions options) {
    RibbonGraph g;
    g.name_ = description.name;
    if (description.vertices.empty())
        throw GraphError("no vertices");

    std::map<std::string, int> vertex_index;
    std::map<std::pair<int, std::string>, int> half_edge_index;
    for (const auto& record : description.vertices) {
        const int v = static_cast<int>(g.vertices_.size());
        if (!vertex_index.emplace(record.id, v).second)
            throw GraphError("duplicate vertex '" + record.id + "'");
        Vertex vertex{record.id, {}};
        for (const auto& label : record.half_edges) {
            const int h = static_cast<int>(g.half_edges_.size());
            if (!half_edge_index.emplace(std::make_pair(v, label), h).second)
                throw GraphError("duplicate half-edge " + record.id + "." + label);
            g.half_edges_.push_back(HalfEdge{v, Slot::Line, -1, false, label});
            vertex.cycle.push_back(h);
        }
        g.vertices_.push_back(std::move(vertex));
    }

    auto resolve = [&](const HalfEdgeRef& ref) {
        const auto v = vertex_index.find(ref.vertex);
        if (v == vertex_index.end())
            throw GraphError("unknown vertex in half-edge " + ref_name(ref));
        const auto h = half_edge_index.find({v->second, ref.label});
        if (h == half_edge_index.end())
            throw GraphError("unknown half-edge " + ref_name(ref));
        if (g.half_edges_[static_cast<std::size_t>(h->second)].owner >= 0)
            throw GraphError("half-edge " + ref_name(ref) + " used twice");
        return h->second;
    };

    std::map<std::string, int> ids;
    auto claim_id = [&](const std::string& id) {
        if (!ids.emplace(id, 0).second)
            throw GraphError("duplicate line or external id '" + id + "'");
    };

    for (const auto& record : description.lines) {
        claim_id(record.id);
        const int line = static_cast<int>(g.lines_.size());
        const int tail = resolve(record.tail);
        g.half_edges_[static_cast<std::size_t>(tail)].owner = line;
        const int head = resolve(record.head);
        g.half_edges_[static_cast<std::size_t>(head)].owner = line;
        g.half_edges_[static_cast<std::size_t>(tail)].tail = true;
        g.lines_.push_back(Line{record.id, tail, head});
    }
    for (const auto& record : description.externals) {
        claim_id(record.id);
        const int ext = static_cast<int>(g.externals_.size());
        const int h = resolve(record.at);
        auto& he = g.half_edges_[static_cast<std::size_t>(h)];
        he.kind = Slot::External;
        he.owner = ext;
        g.externals_.push_back(External{record.id, h});
    }

    for (const auto& he : g.half_edges_)
        if (he.owner < 0)
            throw GraphError("dangling half-edge " + g.vertices_[static_cast<std::size_t>(he.vertex)].id + "." +
                             he.label);

    if (!options.any_degree) {
        for (const auto& v : g.vertices_)
            if (v.cycle.size() != 4)
                throw GraphError("vertex '" + v.id + "' has degree " + std::to_string(v.cycle.size()) +
                                 ", expected 4 (use --any-degree to relax)");
    }

    DisjointSets components(g.vertex_count());
    for (int l = 0; l < g.line_count(); ++l)
        components.unite(g.tail_vertex(l), g.head_vertex(l));
    for (int v = 1; v < g.vertex_count(); ++v)
        if (components.find(v) != components.find(0))
            throw GraphError("graph is disconnected (vertex '" + g.vertices_[static_cast<std::size_t>(v)].id + "')");
    return g;
}

int RibbonGraph::opposite(int half_edge) const {
    const auto& he = half_edges_.at(static_cast<std::size_t>(half_edge));
    if (he.kind != Slot::Line)
        throw GraphError("external half-edge has no opposite");
    const auto& line = lines_[static_cast<std::size_t>(he.owner)];
    return line.tail == half_edge ? line.head : line.tail;
}

bool RibbonGraph::all_degree(int degree) const {
    return std::all_of(vertices_.begin(), vertices_.end(),
                       [degree](const Vertex& v) { return static_cast<int>(v.cycle.size()) == degree; });
}

GraphDescription RibbonGraph::description() const {
    GraphDescription d;
    d.name = name_;
    auto ref = [this](int h) {
        const auto& he = half_edges_[static_cast<std::size_t>(h)];
        return HalfEdgeRef{vertices_[static_cast<std::size_t>(he.vertex)].id, he.label};
    };
    for (const auto& v : vertices_) {
        GraphDescription::VertexRecord record{v.id, {}};
        for (int h : v.cycle)
            record.half_edges.push_back(half_edges_[static_cast<std::size_t>(h)].label);
        d.vertices.push_back(std::move(record));
    }
    for (const auto& l : lines_)
        d.lines.push_back({l.id, ref(l.tail), ref(l.head)});
    for (const auto& e : externals_)
        d.externals.push_back({e.id, ref(e.half_edge)});
    return d;
}

Topology topology(const RibbonGraph& graph) {
    Topology result;
    const auto& half_edges = graph.half_edges();
    std::vector<int> position(half_edges.size());
    for (const auto& v : graph.vertices())
        for (std::size_t i = 0; i < v.cycle.size(); ++i)
            position[static_cast<std::size_t>(v.cycle[i])] = static_cast<int>(i);

    if (graph.line_count() == 0) {
        // A lone vertex bounds a single face carrying every leg.
        Face face;
        for (int e = 0; e < graph.external_count(); ++e)
            face.externals.push_back(e);
        result.faces.push_back(std::move(face));
    } else {
        std::vector<bool> visited(half_edges.size(), false);
        for (std::size_t start = 0; start < half_edges.size(); ++start) {
            if (half_edges[start].kind != RibbonGraph::Slot::Line || visited[start])
                continue;
            Face face;
            int current = static_cast<int>(start);
            do {
                visited[static_cast<std::size_t>(current)] = true;
                face.sides.push_back(current);
                const int across = graph.opposite(current);
                const auto& cycle = graph.vertices()[static_cast<std::size_t>(half_edges[static_cast<std::size_t>(across)].vertex)].cycle;
                std::size_t i = static_cast<std::size_t>(position[static_cast<std::size_t>(across)]);
                for (;;) {
                    i = (i + 1) % cycle.size();
                    const auto& he = half_edges[static_cast<std::size_t>(cycle[i])];
                    if (he.kind == RibbonGraph::Slot::Line)
                        break;
                    face.externals.push_back(he.owner);
                }
                current = cycle[i];
            } while (current != static_cast<int>(start));
            result.faces.push_back(std::move(face));
        }
    }

    auto& s = result.summary;
    s.n = graph.vertex_count();
    s.L = graph.line_count();
    s.N = graph.external_count();
    s.F = static_cast<int>(result.faces.size());
    s.B = static_cast<int>(std::count_if(result.faces.begin(), result.faces.end(),
                                         [](const Face& f) { return f.broken(); }));
    const int twice_genus = 2 - s.n + s.L - s.F;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw ConsistencyError("Euler relation gives non-integral genus for '" + graph.name() + "'");
    s.g = twice_genus / 2;
    return result;
}

namespace {

void check_spanning_tree(const RibbonGraph& graph, const SpanningTree& tree) {
    if (static_cast<int>(tree.lines.size()) != graph.vertex_count() - 1)
        throw GraphError("tree has " + std::to_string(tree.lines.size()) + " lines, expected " +
                         std::to_string(graph.vertex_count() - 1));
    DisjointSets sets(graph.vertex_count());
    for (int l : tree.lines) {
        if (l < 0 || l >= graph.line_count())
            throw GraphError("tree line index out of range");
        if (!sets.unite(graph.tail_vertex(l), graph.head_vertex(l)))
            throw GraphError("tree lines contain a cycle");
    }
}

} // namespace

Rosette contract_to_rosette(const RibbonGraph& graph, const SpanningTree& tree) {
    check_spanning_tree(graph, tree);

    std::vector<std::vector<int>> words;
    std::vector<int> word_of(graph.half_edges().size());
    for (const auto& v : graph.vertices()) {
        for (int h : v.cycle)
            word_of[static_cast<std::size_t>(h)] = static_cast<int>(words.size());
        words.push_back(v.cycle);
    }

    // Rotates `word` so that it starts right after `h`, dropping `h`.
    auto open_at = [](const std::vector<int>& word, int h) {
        const auto it = std::find(word.begin(), word.end(), h);
        std::vector<int> out(it + 1, word.end());
        out.insert(out.end(), word.begin(), it);
        return out;
    };

    for (int l : tree.lines) {
        const auto& line = graph.lines()[static_cast<std::size_t>(l)];
        const int a = word_of[static_cast<std::size_t>(line.tail)];
        const int b = word_of[static_cast<std::size_t>(line.head)];
        if (a == b)
            throw GraphError("tree lines contain a cycle");
        std::vector<int> merged = open_at(words[static_cast<std::size_t>(a)], line.tail);
        const std::vector<int> rest = open_at(words[static_cast<std::size_t>(b)], line.head);
        merged.insert(merged.end(), rest.begin(), rest.end());
        for (int h : rest)
            word_of[static_cast<std::size_t>(h)] = a;
        words[static_cast<std::size_t>(a)] = std::move(merged);
        words[static_cast<std::size_t>(b)].clear();
    }

    Rosette rosette;
    // Every other word was emptied by a merge.
    const auto survivor = std::find_if(words.begin(), words.end(), [](const auto& w) { return !w.empty(); });
    const std::vector<int> none;
    for (int h : survivor == words.end() ? none : *survivor) {
        const auto& he = graph.half_edges()[static_cast<std::size_t>(h)];
        if (he.kind == RibbonGraph::Slot::Line)
            rosette.word.push_back({he.kind, he.owner, he.tail ? -1 : +1});
        else
            rosette.word.push_back({he.kind, he.owner, 0});
    }
    for (int l = 0; l < graph.line_count(); ++l)
        if (std::find(tree.lines.begin(), tree.lines.end(), l) == tree.lines.end())
            rosette.loop_lines.push_back(l);

    const auto expected = topology(graph).summary;
    const auto reduced = topology(rosette_graph(graph, rosette)).summary;
    if (reduced.g != expected.g || reduced.B != expected.B)
        throw ConsistencyError("rosette contraction changed genus or broken faces");
    return rosette;
}

RibbonGraph rosette_graph(const RibbonGraph& graph, const Rosette& rosette) {
    GraphDescription d;
    d.name = graph.name() + "/rosette";
    GraphDescription::VertexRecord vertex{"r", {}};
    std::map<int, GraphDescription::LineRecord> lines;
    for (std::size_t i = 0; i < rosette.word.size(); ++i) {
        const auto& letter = rosette.word[i];
        const std::string label = "h" + std::to_string(i + 1);
        vertex.half_edges.push_back(label);
        if (letter.kind == RibbonGraph::Slot::External) {
            d.externals.push_back({graph.externals()[static_cast<std::size_t>(letter.id)].id, {"r", label}});
        } else {
            auto& record = lines[letter.id];
            record.id = graph.lines()[static_cast<std::size_t>(letter.id)].id;
            (letter.sign < 0 ? record.tail : record.head) = HalfEdgeRef{"r", label};
        }
    }
    d.vertices.push_back(std::move(vertex));
    for (auto& [id, record] : lines)
        d.lines.push_back(std::move(record));
    // Keep the original external order so momentum labels agree.
    std::sort(d.externals.begin(), d.externals.end(), [&](const auto& x, const auto& y) {
        auto index_of = [&](const std::string& id) {
            for (int e = 0; e < graph.external_count(); ++e)
                if (graph.externals()[static_cast<std::size_t>(e)].id == id)
                    return e;
            return -1;
        };
        return index_of(x.id) < index_of(y.id);
    });
    return RibbonGraph::build(d, BuildOptions{.any_degree = true});
}

} // namespace ncparam
