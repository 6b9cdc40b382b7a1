// specnet command line: extract requirement graphs, compute complexity
// metrics, correlate them with effort data, and gate against baselines.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "specnet/errors.hpp"
#include "specnet/graph.hpp"
#include "specnet/io.hpp"
#include "specnet/requirements.hpp"
#include "specnet/spectral.hpp"
#include "specnet/stats.hpp"
#include "specnet/structural.hpp"
#include "specnet/tasks.hpp"
#include "specnet/version.hpp"

namespace fs = std::filesystem;
using specnet::io::json;

namespace {

std::string now_iso8601() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json report_header(bool no_timestamp) {
    json j;
    j["schema_version"] = specnet::kReportSchemaVersion;
    j["tool"] = {{"name", specnet::kToolName}, {"version", specnet::kToolVersion}};
    if (!no_timestamp) j["created_at"] = now_iso8601();
    return j;
}

void emit_output(const std::string& out_path, const std::string& contents) {
    if (out_path.empty() || out_path == "-") {
        std::cout << contents;
        if (!contents.empty() && contents.back() != '\n') std::cout << '\n';
    } else {
        specnet::io::write_file(out_path, contents);
    }
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

std::string slug(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        } else if (!out.empty() && out.back() != '_') {
            out += '_';
        }
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream stream(csv);
    while (std::getline(stream, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = item.find_last_not_of(" \t");
        items.push_back(item.substr(b, e - b + 1));
    }
    return items;
}

bool parse_number(const std::string& text, double& out) {
    auto b = text.find_first_not_of(" \t");
    if (b == std::string::npos) return false;
    auto e = text.find_last_not_of(" \t");
    std::string trimmed = text.substr(b, e - b + 1);
    char* end = nullptr;
    out = std::strtod(trimmed.c_str(), &end);
    return end == trimmed.c_str() + trimmed.size() && !trimmed.empty();
}

// key=value pairs from repeatable flags
std::map<std::string, double> parse_assignments(const std::vector<std::string>& items,
                                                const std::string& flag) {
    std::map<std::string, double> out;
    for (const auto& item : items) {
        auto eq = item.rfind('=');
        double value = 0.0;
        if (eq == std::string::npos || eq == 0 || !parse_number(item.substr(eq + 1), value)) {
            throw specnet::UsageError(flag + " expects KEY=NUMBER, got '" + item + "'");
        }
        out[item.substr(0, eq)] = value;
    }
    return out;
}

json metric_map_to_json(const std::map<std::string, double>& values) {
    json j = json::object();
    for (const auto& [name, value] : values) j[name] = specnet::io::round_sig(value);
    return j;
}

json structural_to_json(const specnet::StructuralReport& r) {
    json j;
    j["n"] = r.n;
    j["e"] = r.e;
    j["p"] = r.p;
    if (r.cyclomatic) j["cyclomatic"] = *r.cyclomatic;
    if (r.density) j["density"] = specnet::io::round_sig(*r.density);
    if (r.density_delta) j["density_delta"] = specnet::io::round_sig(*r.density_delta);
    if (r.absolute_density)
        j["absolute_density"] = specnet::io::round_sig(*r.absolute_density);
    j["load"] = r.load;
    return j;
}

json flags_to_json(const std::vector<specnet::BaselineFlag>& flags) {
    json arr = json::array();
    for (const auto& flag : flags) {
        json j;
        j["metric"] = flag.metric;
        j["value"] = specnet::io::round_sig(flag.value);
        if (flag.reason != "unknown metric") {
            j["mean"] = specnet::io::round_sig(flag.mean);
            j["sd"] = specnet::io::round_sig(flag.sd);
        }
        j["reason"] = flag.reason;
        arr.push_back(std::move(j));
    }
    return arr;
}

// ---------------------------------------------------------------- extract

struct ExtractArgs {
    std::string input;
    std::string lexicon;
    std::string out;
    std::string report;
    std::vector<std::string> ref_patterns;
    std::string layers = "hierarchy,reference,entity_mention";
    bool collapse_entities = false;
    std::vector<std::string> layer_weights;
    std::vector<std::string> alphas;
    bool no_timestamp = false;
};

std::vector<std::string> read_lexicon(const std::string& path) {
    std::vector<std::string> terms;
    if (path.empty()) return terms;
    std::istringstream stream(specnet::io::read_file(path));
    std::string line;
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t");
        std::string term = line.substr(b, e - b + 1);
        if (term.empty() || term[0] == '#') continue;
        terms.push_back(term);
    }
    return terms;
}

int run_extract(const ExtractArgs& args) {
    std::string doc = specnet::io::read_file(args.input);
    std::vector<std::string> lexicon = read_lexicon(args.lexicon);

    specnet::ParseOptions parse_options;
    parse_options.ref_patterns = args.ref_patterns;
    specnet::ParseResult parsed = specnet::parse_requirements(doc, lexicon, parse_options);

    specnet::LayeredRequirementGraph layered = specnet::build_layered_graph(parsed.records);
    for (const auto& [key, value] : parse_assignments(args.layer_weights, "--layer-weight")) {
        if (value <= 0.0) throw specnet::ValidationError("layer weight must be positive");
        layered.layer_weights[specnet::layer_from_string(key)] = value;
    }

    specnet::ProjectionOptions proj;
    proj.layers.clear();
    for (const auto& name : split_list(args.layers)) {
        proj.layers.insert(specnet::layer_from_string(name));
    }
    proj.collapse_entities = args.collapse_entities;
    proj.alpha_table = parse_assignments(args.alphas, "--alpha");

    specnet::WeightedGraph graph = specnet::project(layered, proj);

    json graph_json = specnet::io::graph_to_json(graph);
    emit_output(args.out, json_text(graph_json));

    json report = report_header(args.no_timestamp);
    report["input"] = {{"path", args.input},
                       {"digest", "fnv1a64:" + specnet::io::fnv1a64_hex(doc)}};
    report["counts"] = {{"requirements", layered.requirement_ids.size()},
                        {"entities", layered.entity_labels.size()}};
    report["layer_edges"] = {
        {"hierarchy", layered.layer_edge_count(specnet::LayerType::hierarchy)},
        {"reference", layered.layer_edge_count(specnet::LayerType::reference)},
        {"entity_mention", layered.layer_edge_count(specnet::LayerType::entity_mention)},
    };
    json unresolved = json::array();
    for (const auto& ref : parsed.unresolved_refs) {
        unresolved.push_back({{"from", ref.from}, {"to", ref.to}});
    }
    report["unresolved_refs"] = unresolved;
    report["projection"] = {{"layers", split_list(args.layers)},
                            {"collapse_entities", proj.collapse_entities},
                            {"nodes", graph.node_count()},
                            {"edges", graph.edge_count()}};
    json warnings = json::array();
    if (parsed.records.empty()) warnings.push_back("document contains no requirements");
    if (!parsed.unresolved_refs.empty()) {
        warnings.push_back(std::to_string(parsed.unresolved_refs.size()) +
                           " unresolved reference(s) dropped");
    }
    report["warnings"] = warnings;

    std::string report_path = args.report;
    if (report_path.empty() && !args.out.empty() && args.out != "-") {
        report_path = args.out + ".report.json";
    }
    if (!report_path.empty()) {
        specnet::io::write_file(report_path, json_text(report));
    }
    for (const auto& w : warnings) {
        std::cerr << "warning: " << w.get<std::string>() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
    std::string input;
    std::string metrics;     // empty = all
    std::string level = "both";
    bool topology_only = false;
    bool integration_delta = false;
    std::string baseline;    // optional profile for inline flagging
    double z_threshold = 2.0;
    std::string out;
    std::string format = "json";
    bool no_timestamp = false;
};

std::vector<fs::path> collect_inputs(const std::string& input) {
    fs::path p(input);
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(p)) {
            if (entry.is_regular_file()) files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        if (files.empty()) {
            throw specnet::UsageError("directory '" + input + "' contains no files");
        }
        return files;
    }
    if (!fs::exists(p, ec)) {
        throw specnet::IoError("input '" + input + "' does not exist");
    }
    return {p};
}

struct LoadedInput {
    std::string id;
    std::string digest;
    bool is_task = false;
    specnet::WeightedGraph graph;
    specnet::IntegrationTask task;
};

LoadedInput load_input(const fs::path& path) {
    LoadedInput loaded;
    loaded.id = path.stem().string();
    std::string text = specnet::io::read_file(path);
    loaded.digest = "fnv1a64:" + specnet::io::fnv1a64_hex(text);
    if (path.extension() == ".json") {
        json j = specnet::io::parse_json(text, path.string());
        if (j.contains("task_id")) {
            loaded.is_task = true;
            loaded.task = specnet::io::task_from_json(j);
            loaded.id = loaded.task.task_id;
        } else {
            loaded.graph = specnet::io::graph_from_json(j);
        }
    } else {
        loaded.graph = specnet::io::graph_from_edge_list(text);
    }
    return loaded;
}

struct MetricSelection {
    bool all = true;
    std::set<std::string> names;

    bool wants(const std::string& name) const { return all || names.count(name); }
    bool explicit_request(const std::string& name) const { return !all && names.count(name); }
};

MetricSelection parse_selection(const std::string& metrics) {
    MetricSelection sel;
    if (metrics.empty()) return sel;
    sel.all = false;
    std::set<std::string> valid;
    for (const auto* list : {&specnet::spectral_metric_names(),
                             &specnet::structural_metric_names(),
                             &specnet::molecule_metric_names(),
                             &specnet::integration_metric_names()}) {
        valid.insert(list->begin(), list->end());
    }
    for (const auto& name : split_list(metrics)) {
        if (!valid.count(name)) {
            std::string msg = "unknown metric '" + name + "'; valid names:";
            for (const auto& v : valid) msg += " '" + v + "'";
            throw specnet::UsageError(msg);
        }
        sel.names.insert(name);
    }
    return sel;
}

// Computes one graph entry. Metrics that are undefined on this graph are
// errors when explicitly requested and warnings when part of the default set.
json analyze_graph_entry(const specnet::WeightedGraph& graph, const MetricSelection& sel,
                         bool topology_only, std::map<std::string, double>& flat) {
    json entry;
    json warnings = json::array();
    std::map<std::string, double> values;

    for (const auto& name : specnet::spectral_metric_names()) {
        if (!sel.wants(name)) continue;
        try {
            values[name] = specnet::named_metric(graph, name, topology_only);
        } catch (const specnet::DomainError& err) {
            if (sel.explicit_request(name)) throw;
            warnings.push_back(name + ": " + err.what());
        }
    }

    specnet::StructuralReport sr = specnet::structural_report(graph);
    auto structural_value = [&](const std::string& name) -> std::optional<double> {
        if (name == "Cyclomatic Complexity")
            return sr.cyclomatic ? std::optional<double>(static_cast<double>(*sr.cyclomatic))
                                 : std::nullopt;
        if (name == "Density") return sr.density;
        if (name == "Density Delta") return sr.density_delta;
        if (name == "Absolute Density") return sr.absolute_density;
        if (name == "Load") return static_cast<double>(sr.load);
        return std::nullopt;
    };
    for (const auto& name : specnet::structural_metric_names()) {
        if (!sel.wants(name)) continue;
        auto value = structural_value(name);
        if (value) {
            values[name] = *value;
        } else if (sel.explicit_request(name)) {
            throw specnet::DomainError(name + " is undefined on this graph (n=" +
                                       std::to_string(sr.n) + ", e=" + std::to_string(sr.e) + ")");
        } else {
            warnings.push_back(name + ": undefined on this graph, omitted");
        }
    }

    entry["kind"] = "graph";
    entry["graph_summary"] = {{"n", sr.n}, {"e", sr.e}, {"p", sr.p}};
    entry["metrics"] = metric_map_to_json(values);
    entry["structural"] = structural_to_json(sr);
    entry["warnings"] = warnings;
    flat = values;
    return entry;
}

json analyze_task_entry(const specnet::IntegrationTask& task, const MetricSelection& sel,
                        const AnalyzeArgs& args, std::map<std::string, double>& flat) {
    json entry;
    entry["kind"] = "task";
    entry["task_id"] = task.task_id;
    json warnings = json::array();

    auto filter = [&](std::map<std::string, double> values) {
        if (!sel.all) {
            for (auto it = values.begin(); it != values.end();) {
                it = sel.names.count(it->first) ? std::next(it) : values.erase(it);
            }
        }
        return values;
    };

    if (args.level == "molecule" || args.level == "both") {
        specnet::MetricMap m = specnet::molecule_level_metrics(task, args.topology_only);
        auto values = filter(m.values);
        entry["molecule_level"] = metric_map_to_json(values);
        for (const auto& w : m.warnings) warnings.push_back(w);
        flat.insert(values.begin(), values.end());
    }
    if (args.level == "integration" || args.level == "both") {
        specnet::MetricMap m = specnet::integration_level_metrics(task, args.topology_only);
        auto values = filter(m.values);
        entry["integration_level"] = metric_map_to_json(values);
        for (const auto& w : m.warnings) warnings.push_back(w);
        flat.insert(values.begin(), values.end());
        if (args.integration_delta) {
            specnet::MetricMap d = specnet::integration_level_deltas(task, args.topology_only);
            entry["integration_delta"] = metric_map_to_json(filter(d.values));
            for (const auto& w : d.warnings) warnings.push_back(w);
        }
    }
    entry["warnings"] = warnings;
    return entry;
}

std::string analyze_csv(const std::vector<std::pair<std::string, std::map<std::string, double>>>& rows) {
    // canonical column order: spectral, structural, molecule, integration
    std::vector<std::string> order;
    for (const auto* list : {&specnet::spectral_metric_names(),
                             &specnet::structural_metric_names(),
                             &specnet::molecule_metric_names(),
                             &specnet::integration_metric_names()}) {
        order.insert(order.end(), list->begin(), list->end());
    }
    std::vector<std::string> columns;
    for (const auto& name : order) {
        for (const auto& [id, values] : rows) {
            if (values.count(name)) {
                columns.push_back(name);
                break;
            }
        }
    }
    std::ostringstream out;
    out << "id";
    for (const auto& c : columns) out << ',' << specnet::io::csv_escape(c);
    out << '\n';
    for (const auto& [id, values] : rows) {
        out << specnet::io::csv_escape(id);
        for (const auto& c : columns) {
            out << ',';
            auto it = values.find(c);
            if (it != values.end()) out << specnet::io::format_sig(it->second);
        }
        out << '\n';
    }
    return out.str();
}

int run_analyze(const AnalyzeArgs& args) {
    if (args.level != "molecule" && args.level != "integration" && args.level != "both") {
        throw specnet::UsageError("--level must be molecule, integration, or both");
    }
    if (args.format != "json" && args.format != "csv") {
        throw specnet::UsageError("--format must be json or csv");
    }
    MetricSelection sel = parse_selection(args.metrics);

    std::optional<specnet::BaselineProfile> profile;
    if (!args.baseline.empty()) {
        profile = specnet::io::baseline_from_json(specnet::io::parse_json(
            specnet::io::read_file(args.baseline), args.baseline));
    }

    json report = report_header(args.no_timestamp);
    report["inputs"] = json::array();
    std::vector<std::pair<std::string, std::map<std::string, double>>> csv_rows;

    for (const fs::path& path : collect_inputs(args.input)) {
        LoadedInput loaded = load_input(path);
        std::map<std::string, double> flat;
        json entry = loaded.is_task
                         ? analyze_task_entry(loaded.task, sel, args, flat)
                         : analyze_graph_entry(loaded.graph, sel, args.topology_only, flat);
        entry["path"] = path.string();
        entry["digest"] = loaded.digest;
        if (profile) {
            entry["baseline_flags"] =
                flags_to_json(specnet::baseline_check(*profile, flat, args.z_threshold));
        }
        report["inputs"].push_back(std::move(entry));
        csv_rows.emplace_back(loaded.id, std::move(flat));
    }

    if (args.format == "csv") {
        emit_output(args.out, analyze_csv(csv_rows));
    } else {
        emit_output(args.out, json_text(report));
    }
    return 0;
}

// ---------------------------------------------------------------- correlate

struct CorrelateArgs {
    std::string metrics_csv;
    std::string effort_csv;
    std::string join_key = "task_id";
    std::string effort_column = "effort";
    std::string columns;  // empty = all except join key
    double ci_level = 0.95;
    std::string regression;  // comma list of linear,quadratic
    bool ks = false;
    std::string out;
    std::string format = "json";
    std::string plot_out;
    bool no_timestamp = false;
};

json regression_to_json(const specnet::stats::RegressionResult& r) {
    json j;
    j["degree"] = r.degree;
    json beta = json::array();
    for (double b : r.beta) beta.push_back(specnet::io::round_sig(b));
    j["beta"] = beta;
    json pv = json::array();
    for (double p : r.p_values) pv.push_back(specnet::io::round_sig(p));
    j["p_values"] = pv;
    j["r_squared"] = specnet::io::round_sig(r.r_squared);
    j["dof"] = r.dof;
    return j;
}

int run_correlate(const CorrelateArgs& args) {
    if (args.format != "json" && args.format != "csv") {
        throw specnet::UsageError("--format must be json or csv");
    }
    std::vector<int> degrees;
    for (const auto& name : split_list(args.regression)) {
        if (name == "linear") degrees.push_back(1);
        else if (name == "quadratic") degrees.push_back(2);
        else throw specnet::UsageError("--regression accepts linear and/or quadratic");
    }

    specnet::io::CsvTable metrics =
        specnet::io::parse_csv(specnet::io::read_file(args.metrics_csv));
    specnet::io::CsvTable effort =
        specnet::io::parse_csv(specnet::io::read_file(args.effort_csv));

    long mkey = metrics.column(args.join_key);
    long ekey = effort.column(args.join_key);
    if (mkey < 0) {
        // analyze CSVs label the key column "id"
        mkey = metrics.column("id");
    }
    if (mkey < 0 || ekey < 0) {
        throw specnet::UsageError("join key '" + args.join_key +
                                  "' must be present in both files");
    }
    long ecol = effort.column(args.effort_column);
    if (ecol < 0) {
        throw specnet::UsageError("effort column '" + args.effort_column + "' not found");
    }

    std::map<std::string, double> effort_by_key;
    for (const auto& row : effort.rows) {
        double value = 0.0;
        if (parse_number(row[static_cast<std::size_t>(ecol)], value)) {
            effort_by_key[row[static_cast<std::size_t>(ekey)]] = value;
        }
    }

    struct Joined {
        std::vector<std::string> keys;
        std::vector<double> effort;
        std::vector<std::vector<std::string>> cells;
    } joined;
    for (const auto& row : metrics.rows) {
        auto it = effort_by_key.find(row[static_cast<std::size_t>(mkey)]);
        if (it == effort_by_key.end()) continue;
        joined.keys.push_back(it->first);
        joined.effort.push_back(it->second);
        joined.cells.push_back(row);
    }
    if (joined.keys.size() < 4) {
        throw specnet::UsageError("join produced " + std::to_string(joined.keys.size()) +
                                  " rows; need at least 4");
    }

    std::vector<std::string> wanted = split_list(args.columns);
    std::vector<long> selected;
    for (std::size_t c = 0; c < metrics.header.size(); ++c) {
        if (static_cast<long>(c) == mkey) continue;
        if (!wanted.empty() &&
            std::find(wanted.begin(), wanted.end(), metrics.header[c]) == wanted.end()) {
            continue;
        }
        selected.push_back(static_cast<long>(c));
    }
    if (!wanted.empty() && selected.size() != wanted.size()) {
        throw specnet::UsageError("a requested column is missing from the metrics file");
    }

    json report = report_header(args.no_timestamp);
    report["join"] = {{"key", args.join_key},
                      {"rows", joined.keys.size()},
                      {"effort_column", args.effort_column}};
    report["ci_level"] = args.ci_level;
    report["metrics"] = json::object();

    std::ostringstream csv;
    csv << "metric,n,r,ci_low,ci_high";
    for (int degree : degrees) csv << ",r2_degree" << degree;
    csv << '\n';

    for (long c : selected) {
        const std::string& name = metrics.header[static_cast<std::size_t>(c)];
        std::vector<double> xs, ys;
        for (std::size_t i = 0; i < joined.cells.size(); ++i) {
            double v = 0.0;
            if (parse_number(joined.cells[i][static_cast<std::size_t>(c)], v)) {
                xs.push_back(v);
                ys.push_back(joined.effort[i]);
            }
        }
        json entry;
        entry["n"] = xs.size();
        json notes = json::array();
        bool have_r = false;
        double r = 0.0;
        if (xs.size() < 4) {
            notes.push_back("skipped: fewer than 4 paired numeric observations");
        } else {
            try {
                r = specnet::stats::pearson(xs, ys);
                have_r = true;
                entry["r"] = specnet::io::round_sig(r);
                try {
                    auto [lo, hi] = specnet::stats::fisher_ci(r, xs.size(), args.ci_level);
                    entry["ci"] = {specnet::io::round_sig(lo), specnet::io::round_sig(hi)};
                } catch (const specnet::DomainError&) {
                    notes.push_back("confidence interval degenerate at |r| = 1");
                }
            } catch (const specnet::DomainError&) {
                notes.push_back("undefined correlation (zero variance)");
            }
            for (int degree : degrees) {
                std::string key = degree == 1 ? "linear" : "quadratic";
                try {
                    entry["regression"][key] =
                        regression_to_json(specnet::stats::ols_poly(xs, ys, degree));
                } catch (const specnet::Error& err) {
                    notes.push_back(key + " fit failed: " + err.what());
                }
            }
        }
        entry["notes"] = notes;
        report["metrics"][name] = entry;

        csv << specnet::io::csv_escape(name) << ',' << xs.size() << ',';
        if (have_r) csv << specnet::io::format_sig(r);
        csv << ',';
        if (entry.contains("ci")) csv << specnet::io::format_sig(entry["ci"][0].get<double>());
        csv << ',';
        if (entry.contains("ci")) csv << specnet::io::format_sig(entry["ci"][1].get<double>());
        for (int degree : degrees) {
            std::string key = degree == 1 ? "linear" : "quadratic";
            csv << ',';
            if (entry.contains("regression") && entry["regression"].contains(key)) {
                csv << specnet::io::format_sig(
                    entry["regression"][key]["r_squared"].get<double>());
            }
        }
        csv << '\n';

        if (!args.plot_out.empty() && xs.size() >= 4) {
            fs::create_directories(args.plot_out);
            std::vector<std::size_t> order(xs.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
            std::vector<specnet::stats::RegressionResult> fits;
            for (int degree : degrees) {
                try {
                    fits.push_back(specnet::stats::ols_poly(xs, ys, degree));
                } catch (const specnet::Error&) {
                }
            }
            std::ostringstream plot;
            plot << "x,y";
            for (const auto& fit : fits) plot << ",fit_degree" << fit.degree;
            plot << '\n';
            for (std::size_t i : order) {
                plot << specnet::io::format_sig(xs[i]) << ','
                     << specnet::io::format_sig(ys[i]);
                for (const auto& fit : fits) {
                    double yhat = fit.beta[0] + fit.beta[1] * xs[i];
                    if (fit.degree == 2) yhat += fit.beta[2] * xs[i] * xs[i];
                    plot << ',' << specnet::io::format_sig(yhat);
                }
                plot << '\n';
            }
            specnet::io::write_file(fs::path(args.plot_out) / (slug(name) + ".csv"),
                                    plot.str());
        }
    }

    if (args.ks) {
        specnet::stats::KsResult ks = specnet::stats::ks_normal(joined.effort);
        report["ks_normality"] = {{"column", args.effort_column},
                                  {"statistic", specnet::io::round_sig(ks.statistic)},
                                  {"p_value", specnet::io::round_sig(ks.p_value)},
                                  {"n", ks.n},
                                  {"caveat", specnet::stats::ks_normal_caveat()}};
    }

    emit_output(args.out, args.format == "csv" ? csv.str() : json_text(report));
    return 0;
}

// ---------------------------------------------------------------- baseline

struct BaselineArgs {
    std::vector<std::string> inputs;
    std::string profile;
    double z_threshold = 2.0;
    std::string out;
    bool no_timestamp = false;
};

// Pulls the flat metric rows out of an analyze report document.
std::vector<std::map<std::string, double>> rows_from_report(const json& report,
                                                            const std::string& what) {
    if (!report.contains("inputs") || !report.at("inputs").is_array()) {
        throw specnet::ValidationError("'" + what + "' is not an analyze report");
    }
    std::vector<std::map<std::string, double>> rows;
    for (const auto& entry : report.at("inputs")) {
        std::map<std::string, double> flat;
        for (const char* section : {"metrics", "molecule_level", "integration_level"}) {
            if (!entry.contains(section)) continue;
            for (const auto& [name, value] : entry.at(section).items()) {
                flat[name] = value.get<double>();
            }
        }
        rows.push_back(std::move(flat));
    }
    return rows;
}

int run_baseline_build(const BaselineArgs& args) {
    std::vector<std::map<std::string, double>> rows;
    for (const auto& input : args.inputs) {
        json report = specnet::io::parse_json(specnet::io::read_file(input), input);
        auto file_rows = rows_from_report(report, input);
        rows.insert(rows.end(), file_rows.begin(), file_rows.end());
    }
    specnet::BaselineProfile profile = specnet::baseline_build(rows);
    if (!args.no_timestamp) profile.created_at = now_iso8601();
    emit_output(args.out, json_text(specnet::io::baseline_to_json(profile)));
    return 0;
}

int run_baseline_check(const BaselineArgs& args) {
    specnet::BaselineProfile profile = specnet::io::baseline_from_json(
        specnet::io::parse_json(specnet::io::read_file(args.profile), args.profile));

    json report = report_header(args.no_timestamp);
    report["profile"] = args.profile;
    report["z_threshold"] = args.z_threshold;
    report["inputs"] = json::array();
    std::size_t total_flags = 0;
    for (const auto& input : args.inputs) {
        json parsed = specnet::io::parse_json(specnet::io::read_file(input), input);
        for (const auto& row : rows_from_report(parsed, input)) {
            auto flags = specnet::baseline_check(profile, row, args.z_threshold);
            total_flags += flags.size();
            json entry;
            entry["path"] = input;
            entry["flags"] = flags_to_json(flags);
            report["inputs"].push_back(std::move(entry));
        }
    }
    report["flag_count"] = total_flags;
    emit_output(args.out, json_text(report));
    return total_flags == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural and spectral complexity metrics for requirement "
                 "and integration graphs"};
    app.set_version_flag("--version", specnet::kToolVersion);
    app.set_config("--config", "", "key-value config file; flags override");
    app.require_subcommand(1);

    ExtractArgs extract;
    CLI::App* cmd_extract = app.add_subcommand(
        "extract", "parse a requirements document into a graph");
    cmd_extract->add_option("--input", extract.input, "requirements text file")->required();
    cmd_extract->add_option("--lexicon", extract.lexicon, "entity lexicon, one term per line");
    cmd_extract->add_option("--out", extract.out, "graph interchange JSON (default stdout)");
    cmd_extract->add_option("--report", extract.report,
                            "extraction report path (default <out>.report.json)");
    cmd_extract->add_option("--ref-pattern", extract.ref_patterns,
                            "reference regex with <id> placeholder (repeatable, replaces defaults)");
    cmd_extract->add_option("--layers", extract.layers,
                            "projection layers (default hierarchy,reference,entity_mention)");
    cmd_extract->add_flag("--collapse-entities", extract.collapse_entities,
                          "replace entity nodes by requirement cliques");
    cmd_extract->add_option("--layer-weight", extract.layer_weights,
                            "per-layer weight LAYER=W (repeatable)");
    cmd_extract->add_option("--alpha", extract.alphas,
                            "node alpha LABEL=A or KIND=A (repeatable)");
    cmd_extract->add_flag("--no-timestamp", extract.no_timestamp, "omit created_at");

    AnalyzeArgs analyze;
    CLI::App* cmd_analyze =
        app.add_subcommand("analyze", "compute metrics for graph or task files");
    cmd_analyze->add_option("--input", analyze.input, "graph/task file or directory")->required();
    cmd_analyze->add_option("--metrics", analyze.metrics, "comma list of metric names (default all)");
    cmd_analyze->add_option("--level", analyze.level, "molecule|integration|both (tasks)");
    cmd_analyze->add_flag("--topology-only", analyze.topology_only,
                          "ignore alpha/weights; classical matrices");
    cmd_analyze->add_flag("--integration-delta", analyze.integration_delta,
                          "also report assembly-minus-components deltas");
    cmd_analyze->add_option("--baseline", analyze.baseline, "baseline profile for inline flags");
    cmd_analyze->add_option("--z-threshold", analyze.z_threshold, "baseline z threshold");
    cmd_analyze->add_option("--out", analyze.out, "report path (default stdout)");
    cmd_analyze->add_option("--format", analyze.format, "json|csv");
    cmd_analyze->add_flag("--no-timestamp", analyze.no_timestamp, "omit created_at");

    CorrelateArgs correlate;
    CLI::App* cmd_correlate = app.add_subcommand(
        "correlate", "correlate metric columns with effort data");
    cmd_correlate->add_option("--input", correlate.metrics_csv, "metrics CSV")->required();
    cmd_correlate->add_option("--effort", correlate.effort_csv, "effort CSV")->required();
    cmd_correlate->add_option("--join", correlate.join_key, "join key column (default task_id)");
    cmd_correlate->add_option("--effort-column", correlate.effort_column,
                              "effort column name (default effort)");
    cmd_correlate->add_option("--columns", correlate.columns,
                              "metric columns to use (default: all)");
    cmd_correlate->add_option("--ci", correlate.ci_level, "confidence level (default 0.95)");
    cmd_correlate->add_option("--regression", correlate.regression,
                              "fit polynomials: linear,quadratic");
    cmd_correlate->add_flag("--ks-normality", correlate.ks,
                            "Kolmogorov-Smirnov normality test of the effort column");
    cmd_correlate->add_option("--out", correlate.out, "report path (default stdout)");
    cmd_correlate->add_option("--format", correlate.format, "json|csv");
    cmd_correlate->add_option("--plot-out", correlate.plot_out,
                              "directory for plottable per-metric CSVs");
    cmd_correlate->add_flag("--no-timestamp", correlate.no_timestamp, "omit created_at");

    BaselineArgs baseline;
    CLI::App* cmd_baseline = app.add_subcommand("baseline", "baseline profiles and checks");
    cmd_baseline->require_subcommand(1);
    CLI::App* cmd_build = cmd_baseline->add_subcommand("build", "build a profile from reports");
    cmd_build->add_option("--input", baseline.inputs, "analyze report JSON(s)")->required();
    cmd_build->add_option("--out", baseline.out, "profile path (default stdout)");
    cmd_build->add_flag("--no-timestamp", baseline.no_timestamp, "omit created_at");
    CLI::App* cmd_check = cmd_baseline->add_subcommand("check", "check reports against a profile");
    cmd_check->add_option("--profile", baseline.profile, "baseline profile JSON")->required();
    cmd_check->add_option("--input", baseline.inputs, "analyze report JSON(s)")->required();
    cmd_check->add_option("--z-threshold", baseline.z_threshold, "flag threshold (default 2.0)");
    cmd_check->add_option("--out", baseline.out, "flag report path (default stdout)");
    cmd_check->add_flag("--no-timestamp", baseline.no_timestamp, "omit created_at");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        json err = {{"error", {{"category", "usage"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return static_cast<int>(specnet::ErrorCategory::usage);
    }

    try {
        if (cmd_extract->parsed()) return run_extract(extract);
        if (cmd_analyze->parsed()) return run_analyze(analyze);
        if (cmd_correlate->parsed()) return run_correlate(correlate);
        if (cmd_baseline->parsed()) {
            if (cmd_build->parsed()) return run_baseline_build(baseline);
            if (cmd_check->parsed()) return run_baseline_check(baseline);
        }
    } catch (const specnet::Error& e) {
        json err = {{"error",
                     {{"category", specnet::to_string(e.category())}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        json err = {{"error", {{"category", "domain"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return static_cast<int>(specnet::ErrorCategory::domain);
    }
    return 0;
}
