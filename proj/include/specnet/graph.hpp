#ifndef SPECNET_GRAPH_HPP
#define SPECNET_GRAPH_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace specnet {

enum class NodeKind { generic, requirement, entity };

const char* to_string(NodeKind kind);
NodeKind node_kind_from_string(const std::string& s);

/// A node with its component complexity alpha (> 0, default 1).
struct NodeRecord {
    std::string id;
    double alpha = 1.0;
    std::string label;
    NodeKind kind = NodeKind::generic;
};

enum class WeightMode { derived, explicit_weight };

/// An undirected edge. In derived mode the effective weight is
/// beta_uv = sqrt(alpha_u * alpha_v); in explicit mode it is the stored value.
struct EdgeRecord {
    std::string u;
    std::string v;
    WeightMode weight_mode = WeightMode::derived;
    double weight = 0.0;  // used only in explicit mode, must be > 0
};

/// Simple undirected weighted graph. Immutable after construction; the
/// constructor validates all structural invariants (unique ids, existing
/// endpoints, no self-loops, no duplicate undirected edges, positive alpha
/// and explicit weights) and throws ValidationError on violation.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(std::vector<NodeRecord> nodes, std::vector<EdgeRecord> edges);

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<NodeRecord>& nodes() const { return nodes_; }
    const std::vector<EdgeRecord>& edges() const { return edges_; }

    bool has_node(const std::string& id) const { return index_.count(id) != 0; }
    std::size_t index_of(const std::string& id) const;

    double alpha(std::size_t node_index) const { return nodes_[node_index].alpha; }

    /// Effective weight of edge k, honoring its weight mode.
    double edge_weight(std::size_t edge_index) const;

    /// Endpoint node indices of edge k.
    std::pair<std::size_t, std::size_t> edge_endpoints(std::size_t edge_index) const;

    /// Neighbor indices per node.
    const std::vector<std::vector<std::size_t>>& adjacency() const { return adjacency_; }

private:
    std::vector<NodeRecord> nodes_;
    std::vector<EdgeRecord> edges_;
    std::vector<std::pair<std::size_t, std::size_t>> endpoints_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Connected components as lists of node ids, ordered by first occurrence
/// in the node list. Empty graph yields zero components.
std::vector<std::vector<std::string>> connected_components(const WeightedGraph& g);

std::size_t component_count(const WeightedGraph& g);

/// First Betti number e - n + p; the dimension of the cycle space.
std::size_t cycle_rank(const WeightedGraph& g);

/// Longest shortest path in hops, maximized over components.
/// Single node -> 0. Throws DomainError on the empty graph.
std::size_t diameter(const WeightedGraph& g);

}  // namespace specnet

#endif
