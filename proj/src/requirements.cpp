#include "specnet/requirements.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "specnet/errors.hpp"

namespace specnet {

const char* to_string(LayerType layer) {
    switch (layer) {
        case LayerType::hierarchy: return "hierarchy";
        case LayerType::reference: return "reference";
        case LayerType::entity_mention: return "entity_mention";
    }
    return "hierarchy";
}

LayerType layer_from_string(const std::string& s) {
    if (s == "hierarchy") return LayerType::hierarchy;
    if (s == "reference") return LayerType::reference;
    if (s == "entity_mention") return LayerType::entity_mention;
    throw UsageError("unknown layer '" + s + "' (hierarchy|reference|entity_mention)");
}

bool is_valid_requirement_id(const std::string& id) {
    if (id.empty()) return false;
    bool in_digits = false;
    for (char c : id) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            in_digits = true;
        } else if (c == '.') {
            if (!in_digits) return false;  // empty segment
            in_digits = false;
        } else {
            return false;
        }
    }
    return in_digits;  // must not end on a dot
}

namespace {

constexpr const char* kIdGrammar = R"((\d+(?:\.\d+)*))";

const std::vector<std::string>& default_ref_patterns() {
    static const std::vector<std::string> patterns = {
        R"(\b(?:see|per|ref\.?|as defined in)\s+<id>)",
        R"(\bREQ-<id>)",
    };
    return patterns;
}

std::string substitute_id_grammar(const std::string& pattern) {
    const std::string placeholder = "<id>";
    std::string out = pattern;
    auto pos = out.find(placeholder);
    while (pos != std::string::npos) {
        out.replace(pos, placeholder.size(), kIdGrammar);
        pos = out.find(placeholder, pos + 1);
    }
    return out;
}

std::vector<std::regex> compile_ref_patterns(const ParseOptions& options) {
    const auto& sources =
        options.ref_patterns.empty() ? default_ref_patterns() : options.ref_patterns;
    std::vector<std::regex> compiled;
    compiled.reserve(sources.size());
    for (const auto& source : sources) {
        try {
            compiled.emplace_back(substitute_id_grammar(source),
                                  std::regex::ECMAScript | std::regex::icase);
        } catch (const std::regex_error& err) {
            throw UsageError("invalid reference pattern '" + source + "': " + err.what());
        }
    }
    return compiled;
}

// Whole-word, case-insensitive matcher for a lexicon term; interior
// whitespace in the term matches any whitespace run.
std::regex compile_term(const std::string& term) {
    std::string pattern = "\\b";
    bool in_space = false;
    for (char c : term) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!in_space) pattern += "\\s+";
            in_space = true;
            continue;
        }
        in_space = false;
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            pattern += c;
        } else {
            pattern += '\\';
            pattern += c;
        }
    }
    pattern += "\\b";
    return std::regex(pattern, std::regex::ECMAScript | std::regex::icase);
}

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::optional<std::string> derive_parent(const std::string& id) {
    auto dot = id.rfind('.');
    if (dot == std::string::npos) return std::nullopt;
    return id.substr(0, dot);
}

}  // namespace

ParseResult parse_requirements(const std::string& doc,
                               const std::vector<std::string>& lexicon,
                               const ParseOptions& options) {
    std::vector<std::regex> ref_patterns = compile_ref_patterns(options);

    ParseResult result;
    std::istringstream stream(doc);
    std::string line;
    std::size_t line_no = 0;
    RequirementRecord* current = nullptr;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (std::isdigit(static_cast<unsigned char>(line.front()))) {
            auto ws = line.find_first_of(" \t");
            std::string id = line.substr(0, ws);
            if (!is_valid_requirement_id(id)) {
                throw ValidationError("line " + std::to_string(line_no) +
                                      ": malformed requirement id '" + id + "'");
            }
            RequirementRecord record;
            record.id = id;
            record.text = ws == std::string::npos ? "" : trim(line.substr(ws));
            result.records.push_back(std::move(record));
            current = &result.records.back();
        } else if (current != nullptr) {
            std::string continuation = trim(line);
            if (!continuation.empty()) {
                if (!current->text.empty()) current->text += ' ';
                current->text += continuation;
            }
        }
        // non-requirement lines before the first id are preamble, ignored
    }

    // duplicate ids are collected in full before failing
    std::map<std::string, std::size_t> occurrences;
    for (const auto& record : result.records) ++occurrences[record.id];
    std::string collisions;
    for (const auto& [id, count] : occurrences) {
        if (count > 1) collisions += (collisions.empty() ? "" : ", ") + id;
    }
    if (!collisions.empty()) {
        throw ValidationError("duplicate requirement ids: " + collisions);
    }

    std::vector<std::regex> terms;
    terms.reserve(lexicon.size());
    for (const auto& term : lexicon) terms.push_back(compile_term(term));

    std::set<std::pair<std::string, std::string>> unresolved_seen;
    for (auto& record : result.records) {
        record.parent_id = derive_parent(record.id);

        for (const auto& pattern : ref_patterns) {
            auto begin = std::sregex_iterator(record.text.begin(), record.text.end(), pattern);
            for (auto it = begin; it != std::sregex_iterator(); ++it) {
                if (it->size() < 2 || !(*it)[1].matched) {
                    throw UsageError("reference pattern must capture the target id "
                                     "(use <id> or a capture group)");
                }
                std::string target = (*it)[1].str();
                if (target == record.id) continue;
                if (!occurrences.count(target)) {
                    if (unresolved_seen.insert({record.id, target}).second) {
                        result.unresolved_refs.push_back({record.id, target});
                    }
                    continue;
                }
                if (std::find(record.refs.begin(), record.refs.end(), target) ==
                    record.refs.end()) {
                    record.refs.push_back(target);
                }
            }
        }

        for (std::size_t t = 0; t < terms.size(); ++t) {
            if (lexicon[t].empty()) continue;
            if (std::regex_search(record.text, terms[t]) &&
                std::find(record.entities.begin(), record.entities.end(), lexicon[t]) ==
                    record.entities.end()) {
                record.entities.push_back(lexicon[t]);
            }
        }
    }
    return result;
}

std::size_t LayeredRequirementGraph::layer_edge_count(LayerType layer) const {
    std::size_t count = 0;
    for (const auto& edge : edges) {
        if (edge.layer == layer) ++count;
    }
    return count;
}

LayeredRequirementGraph build_layered_graph(const std::vector<RequirementRecord>& records) {
    LayeredRequirementGraph layered;
    std::set<std::string> known;
    for (const auto& record : records) {
        layered.requirement_ids.push_back(record.id);
        known.insert(record.id);
    }

    for (const auto& record : records) {
        if (record.parent_id && known.count(*record.parent_id)) {
            layered.edges.push_back({LayerType::hierarchy, *record.parent_id, record.id});
        }
    }

    std::set<std::pair<std::string, std::string>> seen_refs;
    for (const auto& record : records) {
        for (const auto& target : record.refs) {
            auto key = std::minmax(record.id, target);
            if (seen_refs.insert({key.first, key.second}).second) {
                layered.edges.push_back({LayerType::reference, record.id, target});
            }
        }
    }

    std::set<std::string> seen_entities;
    for (const auto& record : records) {
        for (const auto& entity : record.entities) {
            if (seen_entities.insert(entity).second) {
                layered.entity_labels.push_back(entity);
            }
            layered.edges.push_back({LayerType::entity_mention, record.id, entity});
        }
    }
    return layered;
}

WeightedGraph project(const LayeredRequirementGraph& layered, const ProjectionOptions& options) {
    if (options.layers.empty()) {
        throw UsageError("projection needs at least one layer");
    }
    for (const auto& [label, alpha] : options.alpha_table) {
        if (!(alpha > 0.0)) {
            throw ValidationError("alpha for '" + label + "' must be positive");
        }
    }

    const bool want_entities =
        options.layers.count(LayerType::entity_mention) && !options.collapse_entities;

    std::vector<NodeRecord> nodes;
    std::map<std::string, std::size_t> node_index;  // graph id -> index
    auto alpha_for = [&](const std::string& label, NodeKind kind) {
        auto it = options.alpha_table.find(label);
        if (it != options.alpha_table.end()) return it->second;
        it = options.alpha_table.find(to_string(kind));
        if (it != options.alpha_table.end()) return it->second;
        return 1.0;
    };
    for (const auto& id : layered.requirement_ids) {
        node_index[id] = nodes.size();
        nodes.push_back({id, alpha_for(id, NodeKind::requirement), id, NodeKind::requirement});
    }
    if (want_entities) {
        for (const auto& label : layered.entity_labels) {
            std::string id = "entity:" + label;
            node_index[id] = nodes.size();
            nodes.push_back({id, alpha_for(label, NodeKind::entity), label, NodeKind::entity});
        }
    }

    // Accumulate per-pair weights; map keys give a deterministic edge order.
    std::map<std::pair<std::size_t, std::size_t>, double> pair_weight;
    auto add_weight = [&](const std::string& a, const std::string& b, double w) {
        auto ia = node_index.at(a);
        auto ib = node_index.at(b);
        pair_weight[{std::min(ia, ib), std::max(ia, ib)}] += w;
    };

    std::map<std::string, std::vector<std::string>> entity_mentions;  // label -> req ids
    for (const auto& edge : layered.edges) {
        if (!options.layers.count(edge.layer)) continue;
        double w = layered.layer_weights.at(edge.layer);
        switch (edge.layer) {
            case LayerType::hierarchy:
            case LayerType::reference:
                add_weight(edge.a, edge.b, w);
                break;
            case LayerType::entity_mention:
                if (options.collapse_entities) {
                    entity_mentions[edge.b].push_back(edge.a);
                } else {
                    add_weight(edge.a, "entity:" + edge.b, w);
                }
                break;
        }
    }
    if (options.collapse_entities && options.layers.count(LayerType::entity_mention)) {
        double w = layered.layer_weights.at(LayerType::entity_mention);
        for (const auto& [label, reqs] : entity_mentions) {
            for (std::size_t i = 0; i < reqs.size(); ++i) {
                for (std::size_t j = i + 1; j < reqs.size(); ++j) {
                    add_weight(reqs[i], reqs[j], w);
                }
            }
        }
    }

    std::vector<EdgeRecord> edges;
    edges.reserve(pair_weight.size());
    for (const auto& [pair, weight] : pair_weight) {
        edges.push_back({nodes[pair.first].id, nodes[pair.second].id,
                         WeightMode::explicit_weight, weight});
    }
    return WeightedGraph(std::move(nodes), std::move(edges));
}

}  // namespace specnet
