#include "specnet/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "specnet/errors.hpp"

namespace specnet::io {

double round_sig(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    return std::strtod(buf, nullptr);
}

std::string format_sig(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    return buf;
}

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

WeightedGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("edges")) {
        throw ValidationError("graph document must contain 'nodes' and 'edges' arrays");
    }
    std::vector<NodeRecord> nodes;
    for (const auto& jn : j.at("nodes")) {
        NodeRecord node;
        if (!jn.contains("id")) {
            throw ValidationError("graph node without 'id'");
        }
        node.id = jn.at("id").get<std::string>();
        node.alpha = jn.value("alpha", 1.0);
        node.label = jn.value("label", std::string{});
        node.kind = node_kind_from_string(jn.value("kind", std::string{"generic"}));
        nodes.push_back(std::move(node));
    }
    std::vector<EdgeRecord> edges;
    for (const auto& je : j.at("edges")) {
        EdgeRecord edge;
        if (!je.contains("u") || !je.contains("v")) {
            throw ValidationError("graph edge without 'u'/'v'");
        }
        edge.u = je.at("u").get<std::string>();
        edge.v = je.at("v").get<std::string>();
        if (je.contains("weight")) {
            edge.weight_mode = WeightMode::explicit_weight;
            edge.weight = je.at("weight").get<double>();
        }
        edges.push_back(std::move(edge));
    }
    return WeightedGraph(std::move(nodes), std::move(edges));
}

json graph_to_json(const WeightedGraph& g) {
    json j;
    j["nodes"] = json::array();
    for (const auto& node : g.nodes()) {
        json jn;
        jn["id"] = node.id;
        if (node.alpha != 1.0) jn["alpha"] = round_sig(node.alpha);
        if (!node.label.empty()) jn["label"] = node.label;
        if (node.kind != NodeKind::generic) jn["kind"] = to_string(node.kind);
        j["nodes"].push_back(std::move(jn));
    }
    j["edges"] = json::array();
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        const EdgeRecord& edge = g.edges()[k];
        json je;
        je["u"] = edge.u;
        je["v"] = edge.v;
        if (edge.weight_mode == WeightMode::explicit_weight) {
            je["weight"] = round_sig(edge.weight);
        }
        j["edges"].push_back(std::move(je));
    }
    return j;
}

WeightedGraph graph_from_edge_list(const std::string& text) {
    std::vector<NodeRecord> nodes;
    std::vector<EdgeRecord> edges;
    std::set<std::string> seen;
    std::istringstream stream(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string u, v, extra;
        if (!(fields >> u)) continue;  // blank
        if (!(fields >> v) || (fields >> extra)) {
            throw ValidationError("edge list line " + std::to_string(line_no) +
                                  ": expected 'u v'");
        }
        for (const auto& id : {u, v}) {
            if (seen.insert(id).second) nodes.push_back({id, 1.0, "", NodeKind::generic});
        }
        edges.push_back({u, v, WeightMode::derived, 0.0});
    }
    return WeightedGraph(std::move(nodes), std::move(edges));
}

IntegrationTask task_from_json(const json& j) {
    if (!j.is_object() || !j.contains("task_id") || !j.contains("components") ||
        !j.contains("assembly")) {
        throw ValidationError(
            "task document must contain 'task_id', 'components', and 'assembly'");
    }
    IntegrationTask task;
    task.task_id = j.at("task_id").get<std::string>();
    for (const auto& jc : j.at("components")) {
        task.components.push_back(graph_from_json(jc));
    }
    task.assembly = graph_from_json(j.at("assembly"));
    task.provenance = j.value("provenance", std::string{});
    validate_task(task);
    return task;
}

json task_to_json(const IntegrationTask& task) {
    json j;
    j["task_id"] = task.task_id;
    j["components"] = json::array();
    for (const auto& comp : task.components) j["components"].push_back(graph_to_json(comp));
    j["assembly"] = graph_to_json(task.assembly);
    if (!task.provenance.empty()) j["provenance"] = task.provenance;
    return j;
}

json baseline_to_json(const BaselineProfile& profile) {
    json j;
    j["schema_version"] = profile.schema_version;
    j["corpus_size"] = profile.corpus_size;
    if (!profile.created_at.empty()) j["created_at"] = profile.created_at;
    j["metrics"] = json::object();
    for (const auto& [name, ms] : profile.metrics) {
        j["metrics"][name] = {{"mean", round_sig(ms.mean)}, {"sd", round_sig(ms.sd)}};
    }
    return j;
}

BaselineProfile baseline_from_json(const json& j) {
    if (!j.is_object() || !j.contains("metrics") || !j.contains("corpus_size")) {
        throw ValidationError("baseline profile must contain 'corpus_size' and 'metrics'");
    }
    BaselineProfile profile;
    profile.schema_version = j.value("schema_version", 1);
    profile.corpus_size = j.at("corpus_size").get<std::size_t>();
    profile.created_at = j.value("created_at", std::string{});
    for (const auto& [name, jm] : j.at("metrics").items()) {
        MeanSd ms;
        ms.mean = jm.at("mean").get<double>();
        ms.sd = jm.at("sd").get<double>();
        if (ms.sd < 0.0) {
            throw ValidationError("baseline metric '" + name + "' has negative sd");
        }
        profile.metrics[name] = ms;
    }
    if (profile.corpus_size < 2) {
        throw ValidationError("baseline profile corpus_size must be >= 2");
    }
    return profile;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failed on '" + path.string() + "'");
    }
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << contents;
    out.flush();
    if (!out) {
        throw IoError("write failed on '" + path.string() + "'");
    }
}

json parse_json(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw IoError("malformed JSON in " + what);
    }
    return j;
}

long CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return static_cast<long>(i);
    }
    return -1;
}

CsvTable parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool any = false;
    auto end_field = [&]() {
        row.push_back(field);
        field.clear();
        any = true;
    };
    auto end_row = [&]() {
        end_field();
        rows.push_back(row);
        row.clear();
        any = false;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            if (!field.empty() || any || !row.empty()) end_row();
        } else if (c != '\r') {
            field += c;
        }
    }
    if (!field.empty() || any || !row.empty()) end_row();

    CsvTable table;
    if (!rows.empty()) {
        table.header = rows.front();
        table.rows.assign(rows.begin() + 1, rows.end());
    }
    return table;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace specnet::io
