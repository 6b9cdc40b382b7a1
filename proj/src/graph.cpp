#include "specnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "specnet/errors.hpp"

namespace specnet {

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::generic: return "generic";
        case NodeKind::requirement: return "requirement";
        case NodeKind::entity: return "entity";
    }
    return "generic";
}

NodeKind node_kind_from_string(const std::string& s) {
    if (s == "generic") return NodeKind::generic;
    if (s == "requirement") return NodeKind::requirement;
    if (s == "entity") return NodeKind::entity;
    throw ValidationError("unknown node kind '" + s + "'");
}

WeightedGraph::WeightedGraph(std::vector<NodeRecord> nodes, std::vector<EdgeRecord> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
    index_.reserve(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const NodeRecord& node = nodes_[i];
        if (node.id.empty()) {
            throw ValidationError("node with empty id");
        }
        if (!index_.emplace(node.id, i).second) {
            throw ValidationError("duplicate node id '" + node.id + "'");
        }
        if (!(node.alpha > 0.0) || !std::isfinite(node.alpha)) {
            throw ValidationError("node '" + node.id + "' has non-positive alpha");
        }
    }

    adjacency_.resize(nodes_.size());
    endpoints_.reserve(edges_.size());
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const EdgeRecord& edge : edges_) {
        auto iu = index_.find(edge.u);
        auto iv = index_.find(edge.v);
        if (iu == index_.end() || iv == index_.end()) {
            throw ValidationError("edge (" + edge.u + ", " + edge.v +
                                  ") references an unknown node");
        }
        std::size_t a = iu->second;
        std::size_t b = iv->second;
        if (a == b) {
            throw ValidationError("self-loop on node '" + edge.u + "'");
        }
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
            throw ValidationError("duplicate edge (" + edge.u + ", " + edge.v + ")");
        }
        if (edge.weight_mode == WeightMode::explicit_weight &&
            (!(edge.weight > 0.0) || !std::isfinite(edge.weight))) {
            throw ValidationError("edge (" + edge.u + ", " + edge.v +
                                  ") has non-positive explicit weight");
        }
        endpoints_.emplace_back(a, b);
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
}

std::size_t WeightedGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw ValidationError("unknown node id '" + id + "'");
    }
    return it->second;
}

double WeightedGraph::edge_weight(std::size_t edge_index) const {
    const EdgeRecord& edge = edges_[edge_index];
    if (edge.weight_mode == WeightMode::explicit_weight) {
        return edge.weight;
    }
    auto [a, b] = endpoints_[edge_index];
    return std::sqrt(nodes_[a].alpha * nodes_[b].alpha);
}

std::pair<std::size_t, std::size_t> WeightedGraph::edge_endpoints(std::size_t edge_index) const {
    return endpoints_[edge_index];
}

namespace {

std::vector<int> component_labels(const WeightedGraph& g, std::size_t& count) {
    std::vector<int> label(g.node_count(), -1);
    count = 0;
    for (std::size_t start = 0; start < g.node_count(); ++start) {
        if (label[start] >= 0) continue;
        int c = static_cast<int>(count++);
        std::deque<std::size_t> queue{start};
        label[start] = c;
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v : g.adjacency()[u]) {
                if (label[v] < 0) {
                    label[v] = c;
                    queue.push_back(v);
                }
            }
        }
    }
    return label;
}

}  // namespace

std::vector<std::vector<std::string>> connected_components(const WeightedGraph& g) {
    std::size_t count = 0;
    std::vector<int> label = component_labels(g, count);
    std::vector<std::vector<std::string>> parts(count);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        parts[label[i]].push_back(g.nodes()[i].id);
    }
    return parts;
}

std::size_t component_count(const WeightedGraph& g) {
    std::size_t count = 0;
    component_labels(g, count);
    return count;
}

std::size_t cycle_rank(const WeightedGraph& g) {
    // e - n + p; non-negative because a forest maximizes n - p at e edges.
    return g.edge_count() + component_count(g) - g.node_count();
}

std::size_t diameter(const WeightedGraph& g) {
    if (g.node_count() == 0) {
        throw DomainError("diameter of the empty graph is undefined");
    }
    std::size_t best = 0;
    std::vector<long> dist(g.node_count());
    for (std::size_t start = 0; start < g.node_count(); ++start) {
        std::fill(dist.begin(), dist.end(), -1L);
        dist[start] = 0;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v : g.adjacency()[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    best = std::max(best, static_cast<std::size_t>(dist[v]));
                    queue.push_back(v);
                }
            }
        }
    }
    return best;
}

}  // namespace specnet
