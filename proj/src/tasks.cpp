#include "specnet/tasks.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "specnet/errors.hpp"
#include "specnet/spectral.hpp"
#include "specnet/structural.hpp"

namespace specnet {

void validate_task(const IntegrationTask& task) {
    std::set<std::string> assembly_ids;
    for (const auto& node : task.assembly.nodes()) assembly_ids.insert(node.id);

    std::set<std::string> seen;
    for (std::size_t c = 0; c < task.components.size(); ++c) {
        const WeightedGraph& comp = task.components[c];
        if (comp.node_count() == 0) {
            throw ValidationError("task '" + task.task_id + "': component " +
                                  std::to_string(c) + " is empty");
        }
        if (component_count(comp) != 1) {
            throw ValidationError("task '" + task.task_id + "': component " +
                                  std::to_string(c) + " is not connected");
        }
        for (const auto& node : comp.nodes()) {
            if (!seen.insert(node.id).second) {
                throw ValidationError("task '" + task.task_id + "': node '" + node.id +
                                      "' appears in more than one component");
            }
            if (!assembly_ids.count(node.id)) {
                throw ValidationError("task '" + task.task_id + "': component node '" +
                                      node.id + "' is missing from the assembly");
            }
        }
    }
}

const std::vector<std::string>& molecule_metric_names() {
    static const std::vector<std::string> names = {
        "Total Cyclomatic Complexity", "Average Cyclomatic Complexity",
        "Average GE", "Average LGE", "Average Density", "Average Absolute Density",
    };
    return names;
}

const std::vector<std::string>& integration_metric_names() {
    static const std::vector<std::string> names = {
        "Integration GE", "Integration LGE", "Integration Density",
        "Integration Absolute Density", "Integration Density Delta", "Integration Load",
    };
    return names;
}

namespace {

// Averages f over the components on which it is defined (DomainError marks
// a component as skipped); reports the skip count, omits the entry when
// nothing remains.
template <typename Fn>
void average_over_components(MetricMap& out, const std::string& name,
                             const std::vector<WeightedGraph>& components, Fn&& f) {
    double sum = 0.0;
    std::size_t used = 0;
    for (const WeightedGraph& comp : components) {
        try {
            sum += f(comp);
            ++used;
        } catch (const DomainError&) {
            // undefined on this component
        }
    }
    if (used == 0) {
        out.warnings.push_back(name + ": undefined on every component, omitted");
        return;
    }
    if (used < components.size()) {
        std::ostringstream w;
        w << name << ": skipped " << (components.size() - used) << " of "
          << components.size() << " components (undefined)";
        out.warnings.push_back(w.str());
    }
    out.values[name] = sum / static_cast<double>(used);
}

}  // namespace

MetricMap molecule_level_metrics(const IntegrationTask& task, bool topology_only) {
    if (task.components.empty()) {
        throw ValidationError("task '" + task.task_id + "' has no components");
    }
    MetricMap out;

    double total_cc = 0.0;
    for (const WeightedGraph& comp : task.components) {
        total_cc += static_cast<double>(cyclomatic_complexity(comp));
    }
    out.values["Total Cyclomatic Complexity"] = total_cc;
    out.values["Average Cyclomatic Complexity"] =
        total_cc / static_cast<double>(task.components.size());

    average_over_components(out, "Average GE", task.components,
                            [&](const WeightedGraph& g) { return named_metric(g, "GE", topology_only); });
    average_over_components(out, "Average LGE", task.components,
                            [&](const WeightedGraph& g) { return named_metric(g, "LGE", topology_only); });
    average_over_components(out, "Average Density", task.components,
                            [](const WeightedGraph& g) { return density(g); });
    average_over_components(out, "Average Absolute Density", task.components,
                            [](const WeightedGraph& g) { return absolute_density(g); });
    return out;
}

MetricMap integration_level_metrics(const IntegrationTask& task, bool topology_only) {
    if (task.assembly.node_count() == 0) {
        throw ValidationError("task '" + task.task_id + "' has an empty assembly");
    }
    MetricMap out;
    const WeightedGraph& a = task.assembly;
    out.values["Integration GE"] = named_metric(a, "GE", topology_only);
    out.values["Integration LGE"] = named_metric(a, "LGE", topology_only);
    out.values["Integration Load"] = static_cast<double>(load(a));
    auto try_metric = [&](const std::string& name, auto&& f) {
        try {
            out.values[name] = f(a);
        } catch (const DomainError& err) {
            out.warnings.push_back(name + ": " + err.what());
        }
    };
    try_metric("Integration Density", [](const WeightedGraph& g) { return density(g); });
    try_metric("Integration Absolute Density",
               [](const WeightedGraph& g) { return absolute_density(g); });
    try_metric("Integration Density Delta",
               [](const WeightedGraph& g) { return density_delta(g); });
    return out;
}

MetricMap integration_level_deltas(const IntegrationTask& task, bool topology_only) {
    MetricMap assembly = integration_level_metrics(task, topology_only);
    if (task.components.empty()) {
        throw ValidationError("task '" + task.task_id + "' has no components");
    }
    MetricMap out;

    // Extensive metrics: assembly minus component sum.
    double ge_sum = 0.0, lge_sum = 0.0, load_sum = 0.0;
    for (const WeightedGraph& comp : task.components) {
        ge_sum += named_metric(comp, "GE", topology_only);
        lge_sum += named_metric(comp, "LGE", topology_only);
        load_sum += static_cast<double>(load(comp));
    }
    out.values["Integration GE"] = assembly.values.at("Integration GE") - ge_sum;
    out.values["Integration LGE"] = assembly.values.at("Integration LGE") - lge_sum;
    out.values["Integration Load"] = assembly.values.at("Integration Load") - load_sum;

    // Density family: assembly minus component mean, where both sides exist.
    auto delta_vs_mean = [&](const std::string& name, auto&& f) {
        auto it = assembly.values.find(name);
        if (it == assembly.values.end()) {
            out.warnings.push_back(name + ": undefined on assembly, delta omitted");
            return;
        }
        MetricMap mean_map;
        average_over_components(mean_map, name, task.components, f);
        auto mit = mean_map.values.find(name);
        if (mit == mean_map.values.end()) {
            out.warnings.push_back(name + ": undefined on every component, delta omitted");
            return;
        }
        for (auto& w : mean_map.warnings) out.warnings.push_back(w);
        out.values[name] = it->second - mit->second;
    };
    delta_vs_mean("Integration Density", [](const WeightedGraph& g) { return density(g); });
    delta_vs_mean("Integration Absolute Density",
                  [](const WeightedGraph& g) { return absolute_density(g); });
    delta_vs_mean("Integration Density Delta",
                  [](const WeightedGraph& g) { return density_delta(g); });
    return out;
}

TaskMetricRow task_metric_row(const IntegrationTask& task, bool topology_only) {
    TaskMetricRow row;
    row.task_id = task.task_id;
    row.molecule_level = molecule_level_metrics(task, topology_only).values;
    row.integration_level = integration_level_metrics(task, topology_only).values;
    return row;
}

std::map<std::string, double> flatten_row(const TaskMetricRow& row) {
    std::map<std::string, double> flat = row.molecule_level;
    flat.insert(row.integration_level.begin(), row.integration_level.end());
    return flat;
}

BaselineProfile baseline_build(const std::vector<std::map<std::string, double>>& rows) {
    if (rows.size() < 2) {
        throw UsageError("baseline requires at least 2 rows, got " +
                         std::to_string(rows.size()));
    }
    std::map<std::string, std::vector<double>> columns;
    for (const auto& row : rows) {
        for (const auto& [name, value] : row) columns[name].push_back(value);
    }
    BaselineProfile profile;
    profile.corpus_size = rows.size();
    for (const auto& [name, values] : columns) {
        if (values.size() < 2) continue;  // cannot estimate spread
        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= static_cast<double>(values.size());
        double ss = 0.0;
        for (double v : values) ss += (v - mean) * (v - mean);
        MeanSd stats;
        stats.mean = mean;
        stats.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
        profile.metrics[name] = stats;
    }
    return profile;
}

BaselineProfile baseline_build(const std::vector<TaskMetricRow>& corpus) {
    std::vector<std::map<std::string, double>> rows;
    rows.reserve(corpus.size());
    for (const auto& row : corpus) rows.push_back(flatten_row(row));
    return baseline_build(rows);
}

std::vector<BaselineFlag> baseline_check(const BaselineProfile& profile,
                                         const std::map<std::string, double>& row,
                                         double z_threshold) {
    if (!(z_threshold > 0.0)) {
        throw UsageError("z threshold must be positive");
    }
    std::vector<BaselineFlag> flags;
    for (const auto& [name, value] : row) {
        auto it = profile.metrics.find(name);
        if (it == profile.metrics.end()) {
            flags.push_back({name, value, 0.0, 0.0, "unknown metric"});
            continue;
        }
        const MeanSd& ms = it->second;
        double deviation = std::abs(value - ms.mean);
        if (ms.sd > 0.0) {
            if (deviation > z_threshold * ms.sd) {
                flags.push_back({name, value, ms.mean, ms.sd, "exceeds z threshold"});
            }
        } else if (deviation > 0.0) {
            flags.push_back({name, value, ms.mean, ms.sd, "deviation with zero sd"});
        }
    }
    return flags;
}

}  // namespace specnet
