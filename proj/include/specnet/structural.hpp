#ifndef SPECNET_STRUCTURAL_HPP
#define SPECNET_STRUCTURAL_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "specnet/graph.hpp"

namespace specnet {

/// e - n + 2p, the number of linearly independent paths. Requires n >= 1.
long long cyclomatic_complexity(const WeightedGraph& g);

/// e / (n(n-1)/2). Requires n >= 2.
double density(const WeightedGraph& g);

/// density - 2/n, the excess over the connected minimum (trees). Requires n >= 2.
double density_delta(const WeightedGraph& g);

using AbsoluteDensityFn = std::function<double(const WeightedGraph&)>;

/// Size-adjusted density. The default definition is density * diameter;
/// no canonical formula exists, so an alternative can be plugged in.
/// Requires n >= 2 and e >= 1 (the diameter adjustment needs an edge).
double absolute_density(const WeightedGraph& g);
double absolute_density(const WeightedGraph& g, const AbsoluteDensityFn& formula);

/// Cycle-space dimension e - n + p ("loop count").
std::size_t load(const WeightedGraph& g);

/// All structural metrics of a single graph. Fields that are undefined for
/// the given graph (density family on n < 2, absolute density on e = 0,
/// cyclomatic on the empty graph) are left empty.
struct StructuralReport {
    std::size_t n = 0;
    std::size_t e = 0;
    std::size_t p = 0;
    std::optional<long long> cyclomatic;
    std::optional<double> density;
    std::optional<double> density_delta;
    std::optional<double> absolute_density;
    std::size_t load = 0;
};

StructuralReport structural_report(const WeightedGraph& g);

/// Structural metric names in canonical report order.
const std::vector<std::string>& structural_metric_names();

}  // namespace specnet

#endif
