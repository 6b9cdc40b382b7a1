#ifndef SPECNET_SPECTRAL_HPP
#define SPECNET_SPECTRAL_HPP

#include <string>
#include <vector>

#include "specnet/matrix.hpp"

namespace specnet {

/// Eigenvalues of a system matrix, sorted ascending, together with the
/// trace/n centering term used by the generalized metric.
struct Spectrum {
    std::vector<double> eigenvalues;
    MatrixKind source_kind = MatrixKind::adjacency;
    double trace_over_n = 0.0;
};

/// Full symmetric eigendecomposition. Throws DomainError if the matrix is
/// not exactly symmetric.
Spectrum eigendecompose(const SystemMatrix& m);

/// The (f, g) pair of the generalized metric:
///   abs_linear: f(x) = x,     g(y) = |y|   (energy family)
///   exp_log:    f(x) = ln(x), g(y) = e^y   (natural-connectivity family)
enum class MetricShape { abs_linear, exp_log };

enum class GammaMode { one, one_over_n };

/// One instantiation of the generalized spectral complexity metric
///   C = f(gamma * sum_i g(lambda_i(M) - tr(M)/n)).
/// The 12 combinations map one-to-one onto the named metrics
/// {GE, LGE, NLGE, NC, LNC, NLNC} and their /n variants {GEn, ...}.
struct MetricSpec {
    MetricShape fg = MetricShape::abs_linear;
    GammaMode gamma = GammaMode::one;
    MatrixKind matrix = MatrixKind::adjacency;
};

/// The 12 metric names in canonical report order.
const std::vector<std::string>& spectral_metric_names();

bool is_spectral_metric_name(const std::string& name);

/// Name -> spec. Throws UsageError for unknown names, listing valid ones.
MetricSpec metric_spec_for(const std::string& name);

std::string metric_name_for(const MetricSpec& spec);

/// Evaluate the generalized metric on a precomputed spectrum.
/// Energy family returns 0 on an empty spectrum; the exp_log family
/// throws DomainError (log of an empty sum).
double evaluate_metric(const Spectrum& spectrum, MetricShape fg, GammaMode gamma);

double evaluate_metric(const WeightedGraph& g, const MetricSpec& spec,
                       bool topology_only = false);

double named_metric(const WeightedGraph& g, const std::string& name,
                    bool topology_only = false);

}  // namespace specnet

#endif
