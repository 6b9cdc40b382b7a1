#include "specnet/matrix.hpp"

#include <cmath>

#include "specnet/errors.hpp"

namespace specnet {

const char* to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency: return "adjacency";
        case MatrixKind::laplacian: return "laplacian";
        case MatrixKind::normalized_laplacian: return "normalized_laplacian";
    }
    return "adjacency";
}

MatrixKind matrix_kind_from_string(const std::string& s) {
    if (s == "adjacency") return MatrixKind::adjacency;
    if (s == "laplacian") return MatrixKind::laplacian;
    if (s == "normalized_laplacian") return MatrixKind::normalized_laplacian;
    throw UsageError("unknown matrix kind '" + s + "'");
}

SystemMatrix build_matrix(const WeightedGraph& g, MatrixKind kind, bool topology_only) {
    const auto n = static_cast<Eigen::Index>(g.node_count());

    // Off-diagonal weight matrix W and the node strengths S = row sums of W.
    Eigen::MatrixXd weights = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        auto [a, b] = g.edge_endpoints(k);
        double w = topology_only ? 1.0 : g.edge_weight(k);
        auto i = static_cast<Eigen::Index>(a);
        auto j = static_cast<Eigen::Index>(b);
        weights(i, j) = w;
        weights(j, i) = w;
    }
    Eigen::VectorXd strength = weights.rowwise().sum();

    SystemMatrix m;
    m.kind = kind;
    switch (kind) {
        case MatrixKind::adjacency: {
            m.entries = weights;
            if (!topology_only) {
                for (Eigen::Index i = 0; i < n; ++i) {
                    m.entries(i, i) = g.alpha(static_cast<std::size_t>(i));
                }
            }
            break;
        }
        case MatrixKind::laplacian: {
            m.entries = Eigen::MatrixXd(strength.asDiagonal()) - weights;
            if (!topology_only) {
                for (Eigen::Index i = 0; i < n; ++i) {
                    m.entries(i, i) += g.alpha(static_cast<std::size_t>(i));
                }
            }
            break;
        }
        case MatrixKind::normalized_laplacian: {
            // Built from the alpha-free Laplacian S - W in both modes;
            // zero-strength nodes keep an all-zero row and column.
            m.entries = Eigen::MatrixXd::Zero(n, n);
            for (Eigen::Index i = 0; i < n; ++i) {
                if (strength(i) > 0.0) {
                    m.entries(i, i) = 1.0;
                }
            }
            for (std::size_t k = 0; k < g.edge_count(); ++k) {
                auto [a, b] = g.edge_endpoints(k);
                auto i = static_cast<Eigen::Index>(a);
                auto j = static_cast<Eigen::Index>(b);
                double v = -weights(i, j) / std::sqrt(strength(i) * strength(j));
                m.entries(i, j) = v;
                m.entries(j, i) = v;
            }
            break;
        }
    }
    return m;
}

}  // namespace specnet
