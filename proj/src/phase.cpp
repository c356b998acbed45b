#include "ncparam/phase.hpp"

#include "ncparam/error.hpp"

#include <algorithm>

namespace ncparam {

PhaseData rosette_phase_data(const RibbonGraph& graph, const Rosette& rosette, const MomentumRouting& routing) {
    if (rosette.loop_lines != routing.loop_lines)
        throw GraphError("rosette and momentum routing use different trees");

    const int loops = routing.loops();
    const int N = graph.external_count();
    const int dim = loops + N; // basis (k_1..k_loops, p_1..p_N)

    std::vector<int> loop_of(static_cast<std::size_t>(graph.line_count()), -1);
    for (int j = 0; j < loops; ++j)
        loop_of[static_cast<std::size_t>(routing.loop_lines[static_cast<std::size_t>(j)])] = j;

    // T(x,y) = sum_{a<b} v_a(x) v_b(y) for the incoming momenta v_a of the word.
    IntMatrix ordered = IntMatrix::Zero(dim, dim);
    Eigen::VectorXi before = Eigen::VectorXi::Zero(dim);
    for (const auto& letter : rosette.word) {
        Eigen::VectorXi v = Eigen::VectorXi::Zero(dim);
        if (letter.kind == RibbonGraph::Slot::Line)
            v(loop_of[static_cast<std::size_t>(letter.id)]) = letter.sign;
        else
            v(loops + letter.id) = 1;
        ordered += before * v.transpose();
        before += v;
    }
    // Phase = -1/2 sum T(x,y) z_x Th z_y = 1/2 sum Omega(x,y) z_x Th z_y.
    const IntMatrix twice_omega = -(ordered - ordered.transpose());
    // The external-external block may be half-integral; it is dropped.
    if ((twice_omega.topRows(loops).array().unaryExpr([](int x) { return x % 2; }) != 0).any())
        throw ConsistencyError("rosette phase has half-integral loop coefficients");
    const IntMatrix omega = twice_omega / 2;

    PhaseData data;
    data.intersection = omega.topLeftCorner(loops, loops);
    const IntMatrix full_coupling = omega.topRightCorner(loops, N);
    if (N > 0) {
        data.coupling = full_coupling.leftCols(N - 1);
        data.coupling.colwise() -= full_coupling.col(N - 1);
    } else {
        data.coupling = IntMatrix(loops, 0);
    }

    for (int e = 0; e + 1 < N; ++e) {
        const Eigen::VectorXi column = data.coupling.col(e);
        if (column.isZero())
            continue;
        auto face = std::find_if(data.broken_faces.begin(), data.broken_faces.end(),
                                 [&](const BrokenFace& f) { return f.overarching == column; });
        if (face == data.broken_faces.end())
            data.broken_faces.push_back({column, {e}});
        else
            face->momenta.push_back(e);
    }
    return data;
}

} // namespace ncparam
