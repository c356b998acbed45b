#pragma once

#include <string>
#include <vector>

namespace ncparam {

/// A half-edge named by its vertex and its local label ("v1.h3").
struct HalfEdgeRef {
    std::string vertex;
    std::string label;
};

/// Unvalidated graph record, as read from a graph file.
struct GraphDescription {
    struct VertexRecord {
        std::string id;
        std::vector<std::string> half_edges; // counterclockwise
    };
    struct LineRecord {
        std::string id;
        HalfEdgeRef tail; // the line is oriented tail -> head
        HalfEdgeRef head;
    };
    struct ExternalRecord {
        std::string id;
        HalfEdgeRef at;
    };

    std::string name;
    std::vector<VertexRecord> vertices;
    std::vector<LineRecord> lines;
    std::vector<ExternalRecord> externals;
};

struct BuildOptions {
    /// Accept vertices of any degree (the model is Phi^4, so 4 is enforced otherwise).
    bool any_degree = false;
};

/// Ribbon graph as a combinatorial map.
///
/// Every vertex stores the cyclic (counterclockwise) order of its half-edges;
/// each half-edge ends exactly one internal line or carries one external leg.
/// Lines, vertices and externals are numbered from 0 in input order; printed
/// names (a1, p1, ...) are 1-based.
class RibbonGraph {
public:
    enum class Slot { Line, External };

    struct HalfEdge {
        int vertex;
        Slot kind;
        int owner;  // line or external index
        bool tail;  // for lines: this is the tail end
        std::string label;
    };
    struct Vertex {
        std::string id;
        std::vector<int> cycle; // half-edge indices, counterclockwise
    };
    struct Line {
        std::string id;
        int tail;
        int head;
    };
    struct External {
        std::string id;
        int half_edge;
    };

    /// Validates and builds. Throws GraphError on dangling or doubly-used
    /// half-edges, unknown references, wrong degree, or a disconnected graph.
    static RibbonGraph build(const GraphDescription& description, BuildOptions options = {});

    const std::string& name() const { return name_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int line_count() const { return static_cast<int>(lines_.size()); }
    int external_count() const { return static_cast<int>(externals_.size()); }
    /// Number of independent external momenta (the last one is eliminated).
    int momentum_count() const { return externals_.empty() ? 0 : external_count() - 1; }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Line>& lines() const { return lines_; }
    const std::vector<External>& externals() const { return externals_; }
    const std::vector<HalfEdge>& half_edges() const { return half_edges_; }

    int tail_vertex(int line) const { return half_edges_[static_cast<std::size_t>(lines_[static_cast<std::size_t>(line)].tail)].vertex; }
    int head_vertex(int line) const { return half_edges_[static_cast<std::size_t>(lines_[static_cast<std::size_t>(line)].head)].vertex; }
    int external_vertex(int ext) const { return half_edges_[static_cast<std::size_t>(externals_[static_cast<std::size_t>(ext)].half_edge)].vertex; }
    /// Other end of a line half-edge.
    int opposite(int half_edge) const;
    bool is_self_loop(int line) const { return tail_vertex(line) == head_vertex(line); }
    bool all_degree(int degree) const;

    /// Description that rebuilds an identical graph.
    GraphDescription description() const;

private:
    std::string name_;
    std::vector<Vertex> vertices_;
    std::vector<Line> lines_;
    std::vector<External> externals_;
    std::vector<HalfEdge> half_edges_;
};

/// Boundary cycle of the map.
///
/// `sides` lists the line half-edges h visited by the face permutation
/// h -> next(opposite(h)), where next() steps counterclockwise to the next
/// line half-edge at the vertex. External legs skipped by next() sit in the
/// face's corner and break it.
struct Face {
    std::vector<int> sides;
    std::vector<int> externals;
    bool broken() const { return !externals.empty(); }
};

struct TopologySummary {
    int n = 0; // vertices
    int L = 0; // internal lines
    int F = 0; // faces
    int g = 0; // genus
    int B = 0; // faces broken by external legs
    int N = 0; // external legs

    int loops() const { return L - n + 1; }
    friend bool operator==(const TopologySummary&, const TopologySummary&) = default;
};

struct Topology {
    std::vector<Face> faces;
    TopologySummary summary;
};

/// Faces and Euler data; g from 2 - 2g = n - L + F.
Topology topology(const RibbonGraph& graph);

/// Set of line indices, sorted.
struct SpanningTree {
    std::vector<int> lines;
    friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

/// One letter of the rosette word.
struct RosetteLetter {
    RibbonGraph::Slot kind;
    int id;   // line or external index
    int sign; // lines: +1 at the head end (momentum enters), -1 at the tail
};

/// Single vertex left after contracting every tree line.
struct Rosette {
    std::vector<RosetteLetter> word; // cyclic, counterclockwise
    std::vector<int> loop_lines;     // sorted non-tree lines
};

/// Contracts the tree lines one at a time, gluing the two vertex cycles at the
/// contracted line. Throws GraphError when `tree` is not a spanning tree and
/// ConsistencyError if genus or broken-face count change.
Rosette contract_to_rosette(const RibbonGraph& graph, const SpanningTree& tree);

/// Rosette as a one-vertex ribbon graph (any degree).
RibbonGraph rosette_graph(const RibbonGraph& graph, const Rosette& rosette);

} // namespace ncparam
