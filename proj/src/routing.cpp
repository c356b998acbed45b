#include "ncparam/routing.hpp"

#include "ncparam/determinant.hpp"
#include "ncparam/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace ncparam {

namespace {

/// Union-find with undo, for backtracking enumeration of forests.
class RollbackSets {
public:
    explicit RollbackSets(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) const {
        while (parent_[static_cast<std::size_t>(x)] != x)
            x = parent_[static_cast<std::size_t>(x)];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)])
            std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        history_.push_back(b);
        return true;
    }
    void undo() {
        const int b = history_.back();
        history_.pop_back();
        const int a = parent_[static_cast<std::size_t>(b)];
        size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
        parent_[static_cast<std::size_t>(b)] = b;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

/// Acyclic line subsets of the given size, lexicographic.
std::vector<std::vector<int>> forests(const RibbonGraph& graph, int size) {
    std::vector<std::vector<int>> out;
    if (size < 0)
        return out;
    RollbackSets sets(graph.vertex_count());
    std::vector<int> chosen;
    std::function<void(int)> extend = [&](int next) {
        if (static_cast<int>(chosen.size()) == size) {
            out.push_back(chosen);
            return;
        }
        const int needed = size - static_cast<int>(chosen.size());
        for (int l = next; l + needed <= graph.line_count(); ++l) {
            if (!sets.unite(graph.tail_vertex(l), graph.head_vertex(l)))
                continue;
            chosen.push_back(l);
            extend(l + 1);
            chosen.pop_back();
            sets.undo();
        }
    };
    extend(0);
    return out;
}

} // namespace

std::vector<SpanningTree> spanning_trees(const RibbonGraph& graph) {
    std::vector<SpanningTree> trees;
    for (auto& lines : forests(graph, graph.vertex_count() - 1))
        trees.push_back(SpanningTree{std::move(lines)});
    return trees;
}

std::vector<TwoTree> two_trees(const RibbonGraph& graph) {
    std::vector<TwoTree> out;
    if (graph.vertex_count() < 2)
        return out;
    for (auto& lines : forests(graph, graph.vertex_count() - 2)) {
        RollbackSets sets(graph.vertex_count());
        for (int l : lines)
            sets.unite(graph.tail_vertex(l), graph.head_vertex(l));
        TwoTree t;
        t.lines = std::move(lines);
        const int root = sets.find(0);
        for (int v = 0; v < graph.vertex_count(); ++v)
            t.side.push_back(sets.find(v) == root ? 0 : 1);
        for (int e = 0; e < graph.external_count(); ++e)
            if (t.side[static_cast<std::size_t>(graph.external_vertex(e))] == 1)
                t.externals.push_back(e);
        out.push_back(std::move(t));
    }
    return out;
}

IntMatrix MomentumRouting::reduced_external() const {
    const auto cols = external.cols();
    if (cols == 0)
        return IntMatrix(external.rows(), 0);
    IntMatrix out = external.leftCols(cols - 1);
    out.colwise() -= external.col(cols - 1);
    return out;
}

MomentumRouting route_momenta(const RibbonGraph& graph, const SpanningTree& tree) {
    const int n = graph.vertex_count();
    const int lines = graph.line_count();
    if (static_cast<int>(tree.lines.size()) != n - 1)
        throw GraphError("not a spanning tree: wrong number of lines");

    MomentumRouting r;
    r.tree = tree;
    std::sort(r.tree.lines.begin(), r.tree.lines.end());
    std::vector<bool> in_tree(static_cast<std::size_t>(lines), false);
    for (int l : r.tree.lines) {
        if (l < 0 || l >= lines || in_tree[static_cast<std::size_t>(l)])
            throw GraphError("not a spanning tree: bad line index");
        in_tree[static_cast<std::size_t>(l)] = true;
    }
    for (int l = 0; l < lines; ++l)
        if (!in_tree[static_cast<std::size_t>(l)])
            r.loop_lines.push_back(l);

    const int loops = r.loops();
    const int N = graph.external_count();
    r.loop = IntMatrix::Zero(lines, loops);
    r.external = IntMatrix::Zero(lines, N);
    for (int j = 0; j < loops; ++j)
        r.loop(r.loop_lines[static_cast<std::size_t>(j)], j) = 1;

    // Breadth-first order from vertex 0 over tree lines.
    std::vector<int> parent_line(static_cast<std::size_t>(n), -1);
    std::vector<int> order{0};
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    seen[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const int v = order[head];
        for (int l : r.tree.lines) {
            const int a = graph.tail_vertex(l);
            const int b = graph.head_vertex(l);
            const int other = a == v ? b : (b == v ? a : -1);
            if (other < 0 || seen[static_cast<std::size_t>(other)])
                continue;
            seen[static_cast<std::size_t>(other)] = true;
            parent_line[static_cast<std::size_t>(other)] = l;
            order.push_back(other);
        }
    }
    if (static_cast<int>(order.size()) != n)
        throw GraphError("not a spanning tree: lines do not connect every vertex");

    // Net incoming momentum at v from everything except `skip`.
    auto inflow = [&](int v, int skip, Eigen::VectorXi& k, Eigen::VectorXi& p) {
        k = Eigen::VectorXi::Zero(loops);
        p = Eigen::VectorXi::Zero(N);
        for (int l = 0; l < lines; ++l) {
            if (l == skip)
                continue;
            int sign = 0;
            if (graph.head_vertex(l) == v)
                sign += 1;
            if (graph.tail_vertex(l) == v)
                sign -= 1;
            if (sign != 0) {
                k += sign * r.loop.row(l).transpose();
                p += sign * r.external.row(l).transpose();
            }
        }
        for (int e = 0; e < N; ++e)
            if (graph.external_vertex(e) == v)
                p(e) += 1;
    };

    Eigen::VectorXi k, p;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        const int l = parent_line[static_cast<std::size_t>(v)];
        if (l < 0)
            continue;
        inflow(v, l, k, p);
        // Line l must cancel the rest: it enters v when v is its head.
        const int sign = graph.head_vertex(l) == v ? -1 : 1;
        r.loop.row(l) = sign * k.transpose();
        r.external.row(l) = sign * p.transpose();
    }

    for (int v = 0; v < n; ++v) {
        inflow(v, -1, k, p);
        const bool balanced = v == 0 ? (k.isZero() && (p.array() == 1).all()) : (k.isZero() && p.isZero());
        if (!balanced)
            throw ConsistencyError("momentum routing violates conservation at vertex '" +
                                   graph.vertices()[static_cast<std::size_t>(v)].id + "'");
    }
    return r;
}

long long kirchhoff_tree_count(const RibbonGraph& graph) {
    const int n = graph.vertex_count();
    if (n == 1)
        return 1;
    DenseMatrix<long long> laplacian = DenseMatrix<long long>::Zero(n, n);
    for (int l = 0; l < graph.line_count(); ++l) {
        const int a = graph.tail_vertex(l);
        const int b = graph.head_vertex(l);
        if (a == b)
            continue;
        laplacian(a, a) += 1;
        laplacian(b, b) += 1;
        laplacian(a, b) -= 1;
        laplacian(b, a) -= 1;
    }
    return bareiss_determinant<long long>(laplacian.bottomRightCorner(n - 1, n - 1));
}

} // namespace ncparam
