// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria 8 and 9 drive the installed CLI end to end; the
// numeric criteria go through the library against independent oracles.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "specnet/graph.hpp"
#include "specnet/io.hpp"
#include "specnet/matrix.hpp"
#include "specnet/requirements.hpp"
#include "specnet/spectral.hpp"
#include "specnet/stats.hpp"
#include "specnet/structural.hpp"
#include "specnet/tasks.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using namespace specnet;
using testsupport::SimpleGraph;
using testsupport::to_weighted;

namespace {

struct Criterion {
    std::string name;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    template <typename T>
    void require_eq(const T& a, const T& b, const std::string& what) {
        if (!(a == b)) {
            std::ostringstream msg;
            msg << what << " (got " << a << ", want " << b << ")";
            failures.push_back(msg.str());
        }
    }
    void require_close(double a, double b, double tol, const std::string& what) {
        if (!(std::abs(a - b) <= tol)) {
            std::ostringstream msg;
            msg.precision(15);
            msg << what << " (got " << a << ", want " << b << ", tol " << tol << ")";
            failures.push_back(msg.str());
        }
    }
};

int finish(std::vector<Criterion>& criteria) {
    int failed = 0;
    for (const auto& c : criteria) {
        if (c.failures.empty()) {
            std::cout << "[PASS] " << c.name << "\n";
        } else {
            ++failed;
            std::cout << "[FAIL] " << c.name << "\n";
            std::size_t shown = 0;
            for (const auto& f : c.failures) {
                std::cout << "        - " << f << "\n";
                if (++shown == 5) {
                    std::cout << "        - (" << c.failures.size() - shown
                              << " more)\n";
                    break;
                }
            }
        }
        for (const auto& n : c.notes) std::cout << "        note: " << n << "\n";
    }
    std::cout << (failed == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
              << criteria.size() - failed << "/" << criteria.size() << ")\n";
    return failed == 0 ? 0 : 1;
}

int run_cli(const std::string& args, const fs::path& log_dir, const std::string& tag,
            std::string* out = nullptr) {
    fs::path out_path = log_dir / (tag + ".out");
    fs::path err_path = log_dir / (tag + ".err");
    std::string cmd = std::string(SPECNET_CLI_PATH) + " " + args + " > " +
                      out_path.string() + " 2> " + err_path.string();
    int status = std::system(cmd.c_str());
    if (out && fs::exists(out_path)) *out = io::read_file(out_path);
    return WEXITSTATUS(status);
}

// component subgraphs of a graph, for wrapping an extracted network as an
// integration task
IntegrationTask task_from_graph(const std::string& task_id, const WeightedGraph& g) {
    IntegrationTask task;
    task.task_id = task_id;
    task.assembly = g;
    for (const auto& part : connected_components(g)) {
        std::vector<NodeRecord> nodes;
        std::vector<EdgeRecord> edges;
        std::map<std::string, bool> member;
        for (const auto& id : part) member[id] = true;
        for (const auto& node : g.nodes()) {
            if (member.count(node.id)) nodes.push_back(node);
        }
        for (const auto& edge : g.edges()) {
            if (member.count(edge.u) && member.count(edge.v)) edges.push_back(edge);
        }
        task.components.emplace_back(std::move(nodes), std::move(edges));
    }
    validate_task(task);
    return task;
}

std::vector<std::string> read_lines(const fs::path& path) {
    std::vector<std::string> lines;
    std::istringstream stream(io::read_file(path));
    std::string line;
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t");
        std::string term = line.substr(b, e - b + 1);
        if (!term.empty() && term[0] != '#') lines.push_back(term);
    }
    return lines;
}

double simpson_t_two_sided_p(double t, int dof) {
    const double v = dof;
    const double log_norm = std::lgamma((v + 1.0) / 2.0) - std::lgamma(v / 2.0) -
                            0.5 * std::log(v * 3.14159265358979323846);
    auto pdf = [&](double x) {
        return std::exp(log_norm - (v + 1.0) / 2.0 * std::log1p(x * x / v));
    };
    const int steps = 40000;
    const double a = -std::abs(t);
    const double h = 2.0 * std::abs(t) / steps;
    double sum = pdf(a) + pdf(std::abs(t));
    for (int i = 1; i < steps; ++i) sum += pdf(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return 1.0 - sum * h / 3.0;
}

}  // namespace

// ------------------------------------------------------------------ criteria

static void criterion_fisher(Criterion& c) {
    struct Row {
        const char* metric;
        double r, lo, hi;
    };
    // Published correlation rows, molecule level then integration level.
    const std::vector<Row> rows = {
        {"Total Cyclomatic Complexity", 0.8919, 0.504, 0.9804},
        {"Average Cyclomatic Complexity", 0.9125, 0.5822, 0.9843},
        {"Average Graph Energy", 0.9420, 0.7059, 0.9897},
        {"Average Laplacian Graph Energy", 0.9426, 0.7086, 0.9898},
        {"Average Density", -0.4163, -0.8667, 0.4081},
        {"Average Absolute Density", -0.3446, -0.8443, 0.4756},
        {"Integration GE", 0.9545, 0.7631, 0.992},
        {"Integration LGE", 0.9572, 0.7758, 0.9925},
        {"Integration Density", -0.3627, -0.8501, 0.4594},
        {"Integration Absolute Density", -0.4720, -0.883, 0.3486},
        {"Integration Density Delta", 0.3626, -0.4595, 0.8501},
        {"Integration Load", 0.9546, 0.7636, 0.992},
    };
    auto begin = std::chrono::steady_clock::now();
    for (const auto& row : rows) {
        auto [lo, hi] = stats::fisher_ci(row.r, 8, 0.95);
        c.require_close(lo, row.lo, 0.003, std::string(row.metric) + " lower bound");
        c.require_close(hi, row.hi, 0.003, std::string(row.metric) + " upper bound");
    }
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin);
    c.require(elapsed.count() < 1.0, "12 intervals must compute in under a second");
}

static void criterion_closed_form(Criterion& c) {
    const double tol = 1e-9;
    for (std::size_t n = 2; n <= 8; ++n) {
        double ge = named_metric(to_weighted(testsupport::complete_graph(n)), "GE", true);
        c.require_close(ge, 2.0 * (n - 1.0), tol, "GE(K_" + std::to_string(n) + ")");
    }
    for (std::size_t k = 2; k <= 8; ++k) {
        double ge = named_metric(to_weighted(testsupport::star_graph(k)), "GE", true);
        c.require_close(ge, 2.0 * std::sqrt(static_cast<double>(k)), tol,
                        "GE(K_{1," + std::to_string(k) + "})");
    }
    WeightedGraph c4 = to_weighted(testsupport::cycle_graph(4));
    c.require_close(named_metric(c4, "GE", true), 4.0, tol, "GE(C_4)");
    WeightedGraph k2 = to_weighted(testsupport::complete_graph(2));
    c.require_close(named_metric(k2, "LGE", true), 2.0, tol, "LGE(K_2)");
    c.require_close(named_metric(k2, "NLGE", true), 2.0, tol, "NLGE(K_2)");
    c.require_close(named_metric(k2, "NCn", true), std::log(std::cosh(1.0)), tol,
                    "NCn(K_2) = ln(cosh 1)");
}

static void criterion_family_equivalence(Criterion& c) {
    std::mt19937 rng(20250811);
    for (int i = 0; i < 100; ++i) {
        SimpleGraph simple = testsupport::random_graph_min_degree1(rng, 2, 12, 0.35);
        WeightedGraph g = to_weighted(simple);
        const std::string tag = " (graph " + std::to_string(i) + ")";
        c.require_close(named_metric(g, "GE", true), testsupport::direct_ge(simple), 1e-9,
                        "GE vs direct sum of |adjacency eigenvalues|" + tag);
        c.require_close(named_metric(g, "GEn", true), testsupport::direct_gen(simple),
                        1e-9, "GEn vs direct 1/n-scaled form" + tag);
        c.require_close(named_metric(g, "LGE", true), testsupport::direct_lge(simple),
                        1e-9, "LGE vs direct |mu - 2m/n| sum" + tag);
        c.require_close(named_metric(g, "NLGE", true), testsupport::direct_nlge(simple),
                        1e-9, "NLGE vs direct |nu - 1| sum" + tag);
        c.require_close(named_metric(g, "NCn", true), testsupport::direct_ncn(simple),
                        1e-9, "NCn vs direct ln(mean exp)" + tag);
    }
    c.notes.push_back(
        "sampled graphs have minimum degree 1: the generalized trace-centered "
        "form equals the centered-at-1 normalized-Laplacian formula only when "
        "no vertex is isolated");
}

static void criterion_spectral_properties(Criterion& c) {
    const double tol = 1e-9;
    std::mt19937 rng(777);

    for (int i = 0; i < 30; ++i) {
        SimpleGraph g1 = testsupport::random_graph(rng, 2, 8, 0.4);
        SimpleGraph g2 = testsupport::random_graph(rng, 2, 8, 0.4);
        SimpleGraph joint;
        joint.n = g1.n + g2.n;
        joint.edges = g1.edges;
        for (auto [u, v] : g2.edges) joint.edges.emplace_back(u + g1.n, v + g1.n);
        c.require_close(named_metric(to_weighted(joint), "GE", true),
                        named_metric(to_weighted(g1), "GE", true) +
                            named_metric(to_weighted(g2), "GE", true),
                        tol, "GE additivity over a disjoint union");

        SimpleGraph padded = g1;
        padded.n += 4;
        c.require_close(named_metric(to_weighted(padded), "GE", true),
                        named_metric(to_weighted(g1), "GE", true), tol,
                        "GE invariance to isolated vertices");
    }

    SimpleGraph edgeless;
    edgeless.n = 6;
    c.require(named_metric(to_weighted(edgeless), "GE", true) == 0.0,
              "GE of an edgeless graph is exactly 0");
    for (int i = 0; i < 30; ++i) {
        SimpleGraph g = testsupport::random_graph(rng, 2, 9, 0.3);
        double ge = named_metric(to_weighted(g), "GE", true);
        if (g.edges.empty()) {
            c.require(std::abs(ge) <= tol, "GE vanishes without edges");
        } else {
            c.require(ge > tol, "GE positive when an edge exists");
        }
    }

    std::uniform_real_distribution<double> alpha_dist(0.5, 2.5);
    for (int i = 0; i < 20; ++i) {
        SimpleGraph simple = testsupport::random_graph(rng, 2, 8, 0.5);
        std::vector<NodeRecord> nodes;
        for (std::size_t k = 0; k < simple.n; ++k)
            nodes.push_back({"n" + std::to_string(k), alpha_dist(rng)});
        std::vector<EdgeRecord> edges;
        for (auto [u, v] : simple.edges)
            edges.push_back({"n" + std::to_string(u), "n" + std::to_string(v)});
        std::vector<NodeRecord> scaled = nodes;
        const double factor = 3.5;
        for (auto& node : scaled) node.alpha *= factor;
        double base = named_metric(WeightedGraph(nodes, edges), "GE", false);
        double lifted = named_metric(WeightedGraph(scaled, edges), "GE", false);
        c.require(std::abs(lifted - factor * base) <= tol * std::max(1.0, factor * base),
                  "weighted GE homogeneity under uniform alpha scaling");
    }

    for (int i = 0; i < 200; ++i) {
        SimpleGraph simple = testsupport::random_graph(rng, 1, 10, 0.3);
        WeightedGraph g = to_weighted(simple);

        SystemMatrix a = build_matrix(g, MatrixKind::adjacency, true);
        Spectrum sa = eigendecompose(a);
        double sum_a = 0.0;
        for (double lambda : sa.eigenvalues) sum_a += lambda;
        c.require(std::abs(sum_a) <= 1e-9 * std::max<double>(1.0, g.node_count()),
                  "adjacency eigenvalues sum to zero");

        SystemMatrix l = build_matrix(g, MatrixKind::laplacian, true);
        Spectrum sl = eigendecompose(l);
        double sum_l = 0.0;
        std::size_t zeros = 0;
        double ztol = 1e-9 * std::max(1.0, l.entries.cwiseAbs().rowwise().sum().maxCoeff());
        for (double mu : sl.eigenvalues) {
            sum_l += mu;
            c.require(mu > -ztol, "laplacian is positive semidefinite");
            if (std::abs(mu) < ztol) ++zeros;
        }
        c.require(std::abs(sum_l - 2.0 * static_cast<double>(g.edge_count())) <=
                      1e-9 * std::max(1.0, 2.0 * static_cast<double>(g.edge_count())),
                  "laplacian eigenvalues sum to 2e");
        c.require_eq(zeros, component_count(g),
                     "laplacian zero-eigenvalue multiplicity equals p");

        Spectrum sn = eigendecompose(build_matrix(g, MatrixKind::normalized_laplacian, true));
        for (double nu : sn.eigenvalues) {
            c.require(nu >= -1e-9 && nu <= 2.0 + 1e-9,
                      "normalized laplacian spectrum within [0, 2]");
        }
    }
}

static void criterion_structural_bruteforce(Criterion& c) {
    std::mt19937 rng(4242);
    for (int i = 0; i < 200; ++i) {
        SimpleGraph simple = testsupport::random_graph(rng, 1, 10, 0.35);
        WeightedGraph g = to_weighted(simple);
        std::size_t extras = testsupport::spanning_forest_extra_edges(simple);
        std::size_t p = testsupport::count_components(simple);
        c.require_eq(load(g), extras, "Load equals spanning-forest residual edges");
        c.require_eq(cyclomatic_complexity(g), static_cast<long long>(extras + p),
                     "Cyclomatic complexity equals residual edges plus p");
    }
    for (int i = 0; i < 50; ++i) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(2, 40)(rng);
        WeightedGraph tree = to_weighted(testsupport::random_tree(rng, n));
        c.require(density_delta(tree) == 0.0,
                  "Density Delta is exactly zero on a tree (n=" + std::to_string(n) + ")");
    }
}

static void criterion_inverted_trend(Criterion& c) {
    // Frozen NLGEn(P_n) for n = 3..10. The sequence is not monotone: it
    // oscillates with path parity (P_4 > P_3), while each parity subsequence
    // falls. The assertion covers the computed direction; the qualitative
    // "lower for more components" description holds within, not across,
    // parity classes over this range.
    const std::vector<double> frozen = {
        2.0 / 3.0,          // P_3
        0.75,               // P_4
        0.682842712474619,  // P_5
        0.706011329583298,  // P_6
        0.676007258363382,  // P_7
        0.686744900864507,  // P_8
        0.669704388544842,  // P_9
        0.675877048314363,  // P_10
    };
    std::vector<double> computed;
    for (std::size_t n = 3; n <= 10; ++n) {
        computed.push_back(named_metric(to_weighted(testsupport::path_graph(n)), "NLGEn", true));
    }
    for (std::size_t i = 0; i < frozen.size(); ++i) {
        c.require_close(computed[i], frozen[i], 1e-9,
                        "NLGEn(P_" + std::to_string(i + 3) + ")");
    }
    for (std::size_t n : {4, 6, 8}) {
        c.require(computed[n + 2 - 3] < computed[n - 3],
                  "even-path subsequence decreases at n=" + std::to_string(n));
    }
    for (std::size_t n : {5, 7}) {
        c.require(computed[n + 2 - 3] < computed[n - 3],
                  "odd-path subsequence decreases at n=" + std::to_string(n));
    }
    c.require(computed[1] > computed[0],
              "P_4 exceeds P_3, so the strict n-monotone reading fails");
    c.notes.push_back(
        "amended per the criterion's own clause: NLGEn(P_n) for n=3..10 is not "
        "strictly decreasing (parity oscillation); the test pins the computed "
        "values and the per-parity downward direction instead");
}

static void criterion_statistics(Criterion& c) {
    // exact fits
    std::vector<double> x = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
    std::vector<double> ylin, yquad;
    for (double v : x) {
        ylin.push_back(2.0 + 3.0 * v);
        yquad.push_back(1.0 + 0.0 * v + 2.0 * v * v);
    }
    stats::RegressionResult lin = stats::ols_poly(x, ylin, 1);
    c.require_close(lin.beta[0], 2.0, 1e-8, "noiseless linear intercept");
    c.require_close(lin.beta[1], 3.0, 1e-8, "noiseless linear slope");
    c.require(lin.r_squared > 1.0 - 1e-12, "noiseless linear r^2");
    stats::RegressionResult quad = stats::ols_poly(x, yquad, 2);
    c.require_close(quad.beta[0], 1.0, 1e-8, "noiseless quadratic beta0");
    c.require_close(quad.beta[1], 0.0, 1e-8, "noiseless quadratic beta1");
    c.require_close(quad.beta[2], 2.0, 1e-8, "noiseless quadratic beta2");
    c.require(quad.r_squared > 1.0 - 1e-12, "noiseless quadratic r^2");

    // t distribution
    for (std::size_t dof : {1, 2, 8, 30}) {
        c.require(stats::t_cdf(0.0, dof) == 0.5, "t_cdf(0) is exactly one half");
    }
    double p = 2.0 * (1.0 - stats::t_cdf(2.306, 8));
    c.require(std::abs(p - 0.050) < 0.001, "two-sided p at t=2.306, dof=8 is 0.050");
    c.require(std::abs(p - simpson_t_two_sided_p(2.306, 8)) < 1e-8,
              "t-test p matches the quadrature oracle");

    // nested model monotonicity
    std::mt19937 rng(5150);
    std::normal_distribution<double> noise(0.0, 1.5);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> xs, ys;
        for (int i = 0; i < 14; ++i) {
            xs.push_back(0.4 * i);
            ys.push_back(1.0 + 0.7 * xs.back() + noise(rng));
        }
        double r1 = stats::ols_poly(xs, ys, 1).r_squared;
        double r2 = stats::ols_poly(xs, ys, 2).r_squared;
        c.require(r2 >= r1 - 1e-12, "quadratic r^2 never drops below linear r^2");
    }

    // Kolmogorov-Smirnov calibration
    std::mt19937 ks_rng(6021023);
    std::normal_distribution<double> normal(50.0, 6.0);
    int accepted = 0;
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<double> sample;
        for (int i = 0; i < 100; ++i) sample.push_back(normal(ks_rng));
        if (stats::ks_normal(sample).p_value > 0.05) ++accepted;
    }
    c.require(accepted >= 90, "seeded normal samples accepted in >= 90/100 runs (got " +
                                  std::to_string(accepted) + ")");

    auto reject_grid = [&](std::size_t n) {
        std::vector<double> grid(n);
        for (std::size_t i = 0; i < n; ++i)
            grid[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        return stats::ks_normal(grid);
    };
    stats::KsResult grid1000 = reject_grid(1000);
    c.require(grid1000.p_value < 0.05,
              "uniform grid rejected at n=1000 (p=" + std::to_string(grid1000.p_value) + ")");
    stats::KsResult grid100 = reject_grid(100);
    c.notes.push_back(
        "with moments estimated from the data a uniform grid reaches only D~=" +
        std::to_string(grid100.statistic) + " at n=100 (asymptotic p~=" +
        std::to_string(grid100.p_value) +
        "); the plain Kolmogorov p-value is conservative there, so rejection is "
        "asserted at n=1000 where D*sqrt(n) clears the 5% line");
}

static void criterion_extraction(Criterion& c, const fs::path& scratch) {
    const fs::path data = fs::path(SPECNET_TEST_DATA_DIR);
    const fs::path doc = data / "landing_gear.txt";
    const fs::path lexicon = data / "lexicon.txt";

    auto run_once = [&](const std::string& tag) {
        fs::path graph_path = scratch / (tag + ".json");
        fs::path report_path = scratch / (tag + ".report.json");
        int code = run_cli("extract --input " + doc.string() + " --lexicon " +
                               lexicon.string() + " --out " + graph_path.string() +
                               " --report " + report_path.string() + " --no-timestamp",
                           scratch, "extract_" + tag);
        c.require(code == 0, "extract exits 0");
        return std::make_pair(io::read_file(graph_path), io::read_file(report_path));
    };
    auto [graph1, report1] = run_once("lg1");
    auto [graph2, report2] = run_once("lg2");
    c.require(graph1 == graph2, "repeated extraction is byte-identical (graph)");
    c.require(report1 == report2, "repeated extraction is byte-identical (report)");

    // hand-counted totals for the bundled document:
    //   11 requirements; 7 entities (landing gear, main strut, shock absorber,
    //   wheel assembly, actuator, position sensor, controller);
    //   hierarchy 8 (1-1.1, 1-1.2, 1-1.3, 2-2.1, 2-2.2, 2-2.3, 3-3.1, 3-3.2);
    //   references 6 (1.2-1.1, 1.3-1.1, 2.2-2.1, 2.3-2.1, 3.1-2.1, 3.2-1.3);
    //   entity mentions 16 (3+3+1+1+3+2+3 across the seven entities)
    io::json report = io::parse_json(report1, "extraction report");
    c.require_eq(report["counts"]["requirements"].get<std::size_t>(), std::size_t{11},
                 "requirement count");
    c.require_eq(report["counts"]["entities"].get<std::size_t>(), std::size_t{7},
                 "entity count");
    c.require_eq(report["layer_edges"]["hierarchy"].get<std::size_t>(), std::size_t{8},
                 "hierarchy edge count");
    c.require_eq(report["layer_edges"]["reference"].get<std::size_t>(), std::size_t{6},
                 "reference edge count");
    c.require_eq(report["layer_edges"]["entity_mention"].get<std::size_t>(),
                 std::size_t{16}, "entity mention edge count");
    c.require(report["unresolved_refs"].empty(), "no unresolved references");

    WeightedGraph projected = io::graph_from_json(io::parse_json(graph1, "graph"));
    c.require_eq(projected.node_count(), std::size_t{18}, "projected node count (11+7)");
    c.require_eq(projected.edge_count(), std::size_t{30}, "projected edge count (8+6+16)");

    // hierarchy layer alone is a forest
    ParseResult parsed = parse_requirements(io::read_file(doc), read_lines(lexicon));
    LayeredRequirementGraph layered = build_layered_graph(parsed.records);
    ProjectionOptions hier;
    hier.layers = {LayerType::hierarchy};
    c.require_eq(cycle_rank(project(layered, hier)), std::size_t{0},
                 "hierarchy layer has cycle rank 0");
}

static void criterion_pipeline(Criterion& c, const fs::path& scratch) {
    const fs::path data = fs::path(SPECNET_TEST_DATA_DIR);
    const fs::path corpus = data / "corpus";
    const fs::path lexicon = data / "corpus_lexicon.txt";
    fs::path graphs = scratch / "graphs";
    fs::path tasks = scratch / "tasks";
    fs::path reports = scratch / "reports";
    fs::create_directories(graphs);
    fs::create_directories(tasks);
    fs::create_directories(reports);

    // stage 1: extraction
    std::vector<std::string> ids;
    for (int k = 1; k <= 8; ++k) ids.push_back("t" + std::to_string(k));
    for (const auto& id : ids) {
        int code = run_cli("extract --input " + (corpus / (id + ".txt")).string() +
                               " --lexicon " + lexicon.string() + " --out " +
                               (graphs / (id + ".json")).string() + " --report " +
                               (reports / (id + ".report.json")).string() +
                               " --no-timestamp",
                           scratch, "extract_" + id);
        c.require(code == 0, "extract " + id + " exits 0");
    }

    // wrap each extracted network as an integration task (components =
    // connected components, assembly = whole network)
    for (const auto& id : ids) {
        WeightedGraph g = io::graph_from_json(
            io::parse_json(io::read_file(graphs / (id + ".json")), id));
        IntegrationTask task = task_from_graph(id, g);
        io::write_file(tasks / (id + ".json"), io::task_to_json(task).dump(2) + "\n");
    }

    // stage 2: quantification
    int code = run_cli("analyze --input " + tasks.string() + " --format csv --out " +
                           (scratch / "metrics.csv").string() + " --no-timestamp",
                       scratch, "analyze");
    c.require(code == 0, "analyze exits 0");

    io::CsvTable metrics = io::parse_csv(io::read_file(scratch / "metrics.csv"));
    long id_col = metrics.column("id");
    long ge_col = metrics.column("Integration GE");
    c.require(id_col >= 0 && ge_col >= 0, "metrics CSV carries id and Integration GE");
    c.require_eq(metrics.rows.size(), std::size_t{8}, "one metric row per task");

    // synthetic effort: affine in Integration GE plus seeded noise
    std::mt19937 rng(424242);
    std::normal_distribution<double> noise(0.0, 3.0);
    std::ostringstream effort;
    effort << "task_id,effort\n";
    for (const auto& row : metrics.rows) {
        double ge = std::strtod(row[static_cast<std::size_t>(ge_col)].c_str(), nullptr);
        effort << row[static_cast<std::size_t>(id_col)] << ','
               << (20.0 + 3.0 * ge + noise(rng)) << '\n';
    }
    io::write_file(scratch / "effort.csv", effort.str());

    // stage 3: decision support
    std::string out;
    code = run_cli("correlate --input " + (scratch / "metrics.csv").string() +
                       " --effort " + (scratch / "effort.csv").string() +
                       " --regression linear --no-timestamp",
                   scratch, "correlate", &out);
    c.require(code == 0, "correlate exits 0");
    io::json report = io::parse_json(out, "correlation report");
    c.require(report["metrics"].contains("Integration GE"),
              "correlation report covers Integration GE");
    double r = report["metrics"]["Integration GE"]["r"].get<double>();
    c.require(r > 0.9, "Integration GE vs effort correlation r=" + std::to_string(r) +
                           " exceeds 0.9");
}

int main() {
    fs::path scratch =
        fs::temp_directory_path() / ("specnet_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(scratch);

    std::vector<Criterion> criteria;
    auto add = [&](const std::string& name, auto&& body) {
        Criterion c;
        c.name = name;
        body(c);
        criteria.push_back(std::move(c));
    };

    add("C1 Fisher CI reproduction of the published correlation tables",
        [&](Criterion& c) { criterion_fisher(c); });
    add("C2 closed-form spectral oracles", [&](Criterion& c) { criterion_closed_form(c); });
    add("C3 generalized metric matches direct formulas on 100 random graphs",
        [&](Criterion& c) { criterion_family_equivalence(c); });
    add("C4 spectral property suite", [&](Criterion& c) { criterion_spectral_properties(c); });
    add("C5 structural metrics match brute-force cycle counting",
        [&](Criterion& c) { criterion_structural_bruteforce(c); });
    add("C6 normalized-Laplacian path trend (computed direction)",
        [&](Criterion& c) { criterion_inverted_trend(c); });
    add("C7 regression, t-test, and K-S calibration",
        [&](Criterion& c) { criterion_statistics(c); });
    add("C8 extraction determinism and hand-counted totals",
        [&](Criterion& c) { criterion_extraction(c, scratch); });
    add("C9 end-to-end extract/analyze/correlate pipeline",
        [&](Criterion& c) { criterion_pipeline(c, scratch); });

    return finish(criteria);
}
