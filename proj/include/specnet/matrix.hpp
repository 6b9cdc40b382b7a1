#ifndef SPECNET_MATRIX_HPP
#define SPECNET_MATRIX_HPP

#include <Eigen/Core>

#include "specnet/graph.hpp"

namespace specnet {

enum class MatrixKind { adjacency, laplacian, normalized_laplacian };

const char* to_string(MatrixKind kind);
MatrixKind matrix_kind_from_string(const std::string& s);

/// Dense symmetric matrix representation of a graph.
///
/// adjacency:            A(i,j) = w_ij off-diagonal, A(i,i) = alpha_i
/// laplacian:            L = S - W + diag(alpha), S = diag(row sums of W)
/// normalized_laplacian: S^-1/2 (S - W) S^-1/2 on the alpha-free Laplacian;
///                       isolated nodes contribute an all-zero row/column.
///
/// With topology_only the weights are forced to 1 and the alpha diagonal is
/// dropped, recovering the classical unweighted matrices.
struct SystemMatrix {
    MatrixKind kind = MatrixKind::adjacency;
    Eigen::MatrixXd entries;

    double trace() const { return entries.trace(); }
    Eigen::Index size() const { return entries.rows(); }
};

SystemMatrix build_matrix(const WeightedGraph& g, MatrixKind kind,
                          bool topology_only = false);

}  // namespace specnet

#endif
