#ifndef SPECNET_TASKS_HPP
#define SPECNET_TASKS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "specnet/graph.hpp"

namespace specnet {

/// An integration task: component subgraphs ("molecules") plus the
/// assembled target structure.
struct IntegrationTask {
    std::string task_id;
    std::vector<WeightedGraph> components;
    WeightedGraph assembly;
    std::string provenance;
};

/// Enforces the task invariants: assembly node set contains the union of
/// component node sets, components are connected and pairwise disjoint.
/// Throws ValidationError.
void validate_task(const IntegrationTask& task);

/// A computed metric map plus warnings about entries that had to skip
/// components (or could not be computed at all).
struct MetricMap {
    std::map<std::string, double> values;
    std::vector<std::string> warnings;
};

const std::vector<std::string>& molecule_metric_names();
const std::vector<std::string>& integration_metric_names();

/// Molecule-level metrics: Total/Average Cyclomatic Complexity plus the
/// averages of GE, LGE, Density, and Absolute Density over the components.
/// Components on which a density-family metric is undefined are skipped and
/// the skip is reported; an entry with no computable component is omitted.
MetricMap molecule_level_metrics(const IntegrationTask& task,
                                 bool topology_only = false);

/// Integration-level metrics computed on the assembled graph.
MetricMap integration_level_metrics(const IntegrationTask& task,
                                    bool topology_only = false);

/// Opt-in delta variant: assembly value minus the component sum (GE, LGE,
/// Load) or component mean (density family), reading "complexity introduced
/// when combining components" literally. Not part of the default row.
MetricMap integration_level_deltas(const IntegrationTask& task,
                                   bool topology_only = false);

/// One row of the per-task metric table.
struct TaskMetricRow {
    std::string task_id;
    std::map<std::string, double> molecule_level;
    std::map<std::string, double> integration_level;
};

TaskMetricRow task_metric_row(const IntegrationTask& task,
                              bool topology_only = false);

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
};

/// Per-metric mean/sd profile over a corpus, for baseline comparisons.
struct BaselineProfile {
    int schema_version = 1;
    std::size_t corpus_size = 0;
    std::string created_at;  // empty when suppressed
    std::map<std::string, MeanSd> metrics;
};

/// Sample mean and sd (n-1 denominator) per metric over >= 2 rows.
/// Metrics absent from some rows are profiled over the rows that carry them
/// (still requiring >= 2 observations). Throws UsageError on fewer rows.
BaselineProfile baseline_build(const std::vector<std::map<std::string, double>>& rows);
BaselineProfile baseline_build(const std::vector<TaskMetricRow>& corpus);

/// Flattens a task row into a single metric map (names are unique across levels).
std::map<std::string, double> flatten_row(const TaskMetricRow& row);

struct BaselineFlag {
    std::string metric;
    double value = 0.0;
    double mean = 0.0;
    double sd = 0.0;
    std::string reason;  // "exceeds z threshold" | "deviation with zero sd" | "unknown metric"
};

/// Flags metrics deviating from the profile: |value - mean| > z_threshold*sd
/// when sd > 0; any deviation when sd = 0; unknown metrics are flagged, not
/// errors. Requires z_threshold > 0.
std::vector<BaselineFlag> baseline_check(const BaselineProfile& profile,
                                         const std::map<std::string, double>& row,
                                         double z_threshold = 2.0);

}  // namespace specnet

#endif
