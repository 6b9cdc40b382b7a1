#include "specnet/structural.hpp"

#include "specnet/errors.hpp"

namespace specnet {

long long cyclomatic_complexity(const WeightedGraph& g) {
    if (g.node_count() == 0) {
        throw DomainError("cyclomatic complexity requires at least one node");
    }
    return static_cast<long long>(g.edge_count()) -
           static_cast<long long>(g.node_count()) +
           2LL * static_cast<long long>(component_count(g));
}

double density(const WeightedGraph& g) {
    const auto n = static_cast<double>(g.node_count());
    if (g.node_count() < 2) {
        throw DomainError("density requires at least two nodes");
    }
    return static_cast<double>(g.edge_count()) / (n * (n - 1.0) / 2.0);
}

double density_delta(const WeightedGraph& g) {
    return density(g) - 2.0 / static_cast<double>(g.node_count());
}

double absolute_density(const WeightedGraph& g) {
    if (g.node_count() < 2) {
        throw DomainError("absolute density requires at least two nodes");
    }
    if (g.edge_count() == 0) {
        throw DomainError("absolute density is undefined on an edgeless graph");
    }
    return density(g) * static_cast<double>(diameter(g));
}

double absolute_density(const WeightedGraph& g, const AbsoluteDensityFn& formula) {
    if (g.node_count() < 2) {
        throw DomainError("absolute density requires at least two nodes");
    }
    if (g.edge_count() == 0) {
        throw DomainError("absolute density is undefined on an edgeless graph");
    }
    return formula(g);
}

std::size_t load(const WeightedGraph& g) {
    return cycle_rank(g);
}

StructuralReport structural_report(const WeightedGraph& g) {
    StructuralReport r;
    r.n = g.node_count();
    r.e = g.edge_count();
    r.p = component_count(g);
    r.load = load(g);
    if (r.n >= 1) {
        r.cyclomatic = cyclomatic_complexity(g);
    }
    if (r.n >= 2) {
        r.density = density(g);
        r.density_delta = density_delta(g);
        if (r.e >= 1) {
            r.absolute_density = absolute_density(g);
        }
    }
    return r;
}

const std::vector<std::string>& structural_metric_names() {
    static const std::vector<std::string> names = {
        "Cyclomatic Complexity", "Density", "Density Delta", "Absolute Density", "Load",
    };
    return names;
}

}  // namespace specnet
