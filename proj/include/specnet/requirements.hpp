#ifndef SPECNET_REQUIREMENTS_HPP
#define SPECNET_REQUIREMENTS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "specnet/graph.hpp"

namespace specnet {

/// One requirement statement parsed from a structured document.
struct RequirementRecord {
    std::string id;                       // dotted-decimal, e.g. "1.2.3"
    std::string text;
    std::optional<std::string> parent_id; // id minus last segment; may be unknown
    std::vector<std::string> refs;        // resolved cross-references
    std::vector<std::string> entities;    // canonical lexicon terms mentioned
};

struct UnresolvedRef {
    std::string from;
    std::string to;
};

struct ParseResult {
    std::vector<RequirementRecord> records;
    std::vector<UnresolvedRef> unresolved_refs;
};

/// Reference extraction patterns. Each pattern is a case-insensitive regex;
/// the target id is either the "<id>" placeholder (replaced by the dotted-id
/// grammar) or the pattern's first capture group.
struct ParseOptions {
    std::vector<std::string> ref_patterns;  // empty -> built-in defaults
};

bool is_valid_requirement_id(const std::string& id);

/// Parses a requirements document. Each requirement starts at line start with
/// a dotted-decimal id followed by whitespace; digit-initial lines with a
/// malformed id are a validation error, other lines continue the current
/// requirement text. Entities are matched case-insensitively as whole words
/// against the lexicon. References to unknown ids are dropped and reported.
/// Duplicate ids throw ValidationError listing the collisions.
ParseResult parse_requirements(const std::string& doc,
                               const std::vector<std::string>& lexicon,
                               const ParseOptions& options = {});

enum class LayerType { hierarchy, reference, entity_mention };

const char* to_string(LayerType layer);
LayerType layer_from_string(const std::string& s);

/// The three-layer requirement network: hierarchy (parent-child), reference
/// (cross-references), entity_mention (requirement <-> entity, bipartite).
struct LayeredRequirementGraph {
    struct TypedEdge {
        LayerType layer;
        std::string a;  // requirement id
        std::string b;  // requirement id, or entity label for entity_mention
    };

    std::vector<std::string> requirement_ids;  // document order
    std::vector<std::string> entity_labels;    // first-mention order
    std::vector<TypedEdge> edges;
    std::map<LayerType, double> layer_weights = {
        {LayerType::hierarchy, 1.0},
        {LayerType::reference, 1.0},
        {LayerType::entity_mention, 1.0},
    };

    std::size_t layer_edge_count(LayerType layer) const;
};

LayeredRequirementGraph build_layered_graph(const std::vector<RequirementRecord>& records);

struct ProjectionOptions {
    std::set<LayerType> layers = {LayerType::hierarchy, LayerType::reference,
                                  LayerType::entity_mention};
    bool collapse_entities = false;
    /// Node alpha looked up by label, then by node kind name, default 1.0.
    std::map<std::string, double> alpha_table;
};

/// Projects selected layers to a single weighted graph. Edges meeting on the
/// same unordered pair accumulate their per-layer weights as an explicit
/// weight. collapse_entities replaces each entity node by a clique over the
/// requirements mentioning it (one entity-weight contribution per shared
/// entity). Entity node ids are prefixed "entity:" to keep the id space
/// disjoint from requirement ids.
WeightedGraph project(const LayeredRequirementGraph& layered,
                      const ProjectionOptions& options = {});

}  // namespace specnet

#endif
