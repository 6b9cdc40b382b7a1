#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "specnet/io.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() /
                   ("specnet_cli_test_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter++));
    fs::create_directories(dir);
    return dir;
}

CliResult run_cli(const std::string& args, const fs::path& dir) {
    fs::path out = dir / "stdout.txt";
    fs::path err = dir / "stderr.txt";
    std::string cmd = std::string(SPECNET_CLI_PATH) + " " + args + " > " + out.string() +
                      " 2> " + err.string();
    int status = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WEXITSTATUS(status);
    result.out = fs::exists(out) ? specnet::io::read_file(out) : "";
    result.err = fs::exists(err) ? specnet::io::read_file(err) : "";
    return result;
}

void write(const fs::path& path, const std::string& text) {
    specnet::io::write_file(path, text);
}

const char* kDoc =
    "1 The system shall deploy.\n"
    "1.1 The gear (see 1.2) shall lock.\n"
    "1.2 The actuator shall extend.\n";

}  // namespace

TEST_CASE("extract produces the documented graph and is byte-stable") {
    fs::path dir = scratch_dir();
    write(dir / "doc.txt", kDoc);
    write(dir / "lex.txt", "gear\nactuator\n");

    std::string base = "extract --input " + (dir / "doc.txt").string() + " --lexicon " +
                       (dir / "lex.txt").string() + " --no-timestamp ";
    CliResult first = run_cli(base + "--out " + (dir / "g1.json").string(), dir);
    REQUIRE(first.exit_code == 0);
    CliResult second = run_cli(base + "--out " + (dir / "g2.json").string(), dir);
    REQUIRE(second.exit_code == 0);

    std::string g1 = specnet::io::read_file(dir / "g1.json");
    std::string g2 = specnet::io::read_file(dir / "g2.json");
    CHECK(g1 == g2);

    auto parsed = specnet::io::graph_from_json(specnet::io::parse_json(g1, "g1"));
    CHECK(parsed.node_count() == 5);
    CHECK(parsed.edge_count() == 5);

    std::string report = specnet::io::read_file(dir / "g1.json.report.json");
    std::string report2 = specnet::io::read_file(dir / "g2.json.report.json");
    CHECK(report == report2);
}

TEST_CASE("extract of an empty document warns and exits 0") {
    fs::path dir = scratch_dir();
    write(dir / "empty.txt", "");
    CliResult r = run_cli("extract --input " + (dir / "empty.txt").string() +
                              " --no-timestamp --out " + (dir / "g.json").string(),
                          dir);
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("no requirements") != std::string::npos);
    auto g = specnet::io::graph_from_json(
        specnet::io::parse_json(specnet::io::read_file(dir / "g.json"), "g"));
    CHECK(g.node_count() == 0);
}

TEST_CASE("extract rejects malformed ids with the validation exit code") {
    fs::path dir = scratch_dir();
    write(dir / "bad.txt", "1..2 broken line\n");
    CliResult r = run_cli("extract --input " + (dir / "bad.txt").string() + " --out " +
                              (dir / "g.json").string(),
                          dir);
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("\"category\":\"validation\"") != std::string::npos);
}

TEST_CASE("missing input file maps to the io exit code") {
    fs::path dir = scratch_dir();
    CliResult r = run_cli("extract --input " + (dir / "absent.txt").string(), dir);
    CHECK(r.exit_code == 5);
    CHECK(r.err.find("\"category\":\"io\"") != std::string::npos);
}

TEST_CASE("analyze a K4 edge list") {
    fs::path dir = scratch_dir();
    write(dir / "k4.txt", "a b\na c\na d\nb c\nb d\nc d\n");
    CliResult r = run_cli("analyze --input " + (dir / "k4.txt").string() +
                              " --metrics GE --no-timestamp",
                          dir);
    REQUIRE(r.exit_code == 0);
    auto report = specnet::io::parse_json(r.out, "report");
    CHECK(report["inputs"][0]["metrics"]["GE"].get<double>() == doctest::Approx(6.0));
}

TEST_CASE("analyze a task file reports both levels") {
    fs::path dir = scratch_dir();
    write(dir / "task.json", R"({
      "task_id": "T1",
      "components": [
        {"nodes": [{"id":"a"},{"id":"b"},{"id":"c"}],
         "edges": [{"u":"a","v":"b"},{"u":"b","v":"c"}]}
      ],
      "assembly": {"nodes": [{"id":"a"},{"id":"b"},{"id":"c"},{"id":"d"}],
                   "edges": [{"u":"a","v":"b"},{"u":"b","v":"c"},{"u":"c","v":"d"}]}
    })");
    CliResult r = run_cli("analyze --input " + (dir / "task.json").string() +
                              " --level both --no-timestamp",
                          dir);
    REQUIRE(r.exit_code == 0);
    auto report = specnet::io::parse_json(r.out, "report");
    const auto& entry = report["inputs"][0];
    CHECK(entry["task_id"] == "T1");
    // tree assembly attains the minimum density exactly
    CHECK(entry["integration_level"]["Integration Density Delta"].get<double>() == 0.0);
    CHECK(entry["molecule_level"]["Total Cyclomatic Complexity"].get<double>() == 1.0);
}

TEST_CASE("explicitly requesting an undefined metric is a domain error") {
    fs::path dir = scratch_dir();
    write(dir / "empty_graph.json", R"({"nodes": [], "edges": []})");
    CliResult r = run_cli("analyze --input " + (dir / "empty_graph.json").string() +
                              " --metrics NLNC --no-timestamp",
                          dir);
    CHECK(r.exit_code == 4);
    CHECK(r.err.find("\"category\":\"domain\"") != std::string::npos);

    // but the default set degrades to warnings on the same input
    CliResult ok = run_cli("analyze --input " + (dir / "empty_graph.json").string() +
                               " --no-timestamp",
                           dir);
    CHECK(ok.exit_code == 0);
}

TEST_CASE("unknown metric names are usage errors") {
    fs::path dir = scratch_dir();
    write(dir / "k2.txt", "a b\n");
    CliResult r = run_cli("analyze --input " + (dir / "k2.txt").string() +
                              " --metrics Nope --no-timestamp",
                          dir);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("valid names") != std::string::npos);
}

TEST_CASE("analyze over a directory orders rows by file name") {
    fs::path dir = scratch_dir();
    fs::path inputs = dir / "graphs";
    fs::create_directories(inputs);
    write(inputs / "b.txt", "x y\n");
    write(inputs / "a.txt", "p q\nq r\n");
    CliResult r = run_cli("analyze --input " + inputs.string() +
                              " --format csv --no-timestamp",
                          dir);
    REQUIRE(r.exit_code == 0);
    auto table = specnet::io::parse_csv(r.out);
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0][0] == "a");
    CHECK(table.rows[1][0] == "b");
}

TEST_CASE("correlate reports r = 1 for a self-join and survives constants") {
    fs::path dir = scratch_dir();
    write(dir / "metrics.csv",
          "task_id,GE,Const\nT1,1,5\nT2,2,5\nT3,3,5\nT4,4,5\nT5,5,5\n");
    write(dir / "effort.csv",
          "task_id,effort\nT1,1\nT2,2\nT3,3\nT4,4\nT5,5\n");
    CliResult r = run_cli("correlate --input " + (dir / "metrics.csv").string() +
                              " --effort " + (dir / "effort.csv").string() +
                              " --no-timestamp",
                          dir);
    REQUIRE(r.exit_code == 0);
    auto report = specnet::io::parse_json(r.out, "report");
    CHECK(report["metrics"]["GE"]["r"].get<double>() == doctest::Approx(1.0));
    // |r| = 1 makes the interval degenerate; reported as a note
    CHECK(report["metrics"]["GE"]["notes"].size() == 1);
    CHECK(report["metrics"]["Const"]["notes"][0].get<std::string>().find(
              "zero variance") != std::string::npos);
}

TEST_CASE("correlate enforces the minimum join size") {
    fs::path dir = scratch_dir();
    write(dir / "metrics.csv", "task_id,GE\nT1,1\nT2,2\nT3,3\n");
    write(dir / "effort.csv", "task_id,effort\nT1,1\nT2,2\nT3,3\n");
    CliResult r = run_cli("correlate --input " + (dir / "metrics.csv").string() +
                              " --effort " + (dir / "effort.csv").string(),
                          dir);
    CHECK(r.exit_code == 2);
}

TEST_CASE("correlate fits regressions and runs the normality check on request") {
    fs::path dir = scratch_dir();
    std::ostringstream metrics, effort;
    metrics << "task_id,GE\n";
    effort << "task_id,effort\n";
    for (int i = 1; i <= 10; ++i) {
        metrics << "T" << i << ',' << i << '\n';
        effort << "T" << i << ',' << (3.0 + 2.0 * i + 0.1 * ((i % 3) - 1)) << '\n';
    }
    write(dir / "metrics.csv", metrics.str());
    write(dir / "effort.csv", effort.str());
    CliResult r = run_cli("correlate --input " + (dir / "metrics.csv").string() +
                              " --effort " + (dir / "effort.csv").string() +
                              " --regression linear,quadratic --ks-normality" +
                              " --plot-out " + (dir / "plots").string() +
                              " --no-timestamp",
                          dir);
    REQUIRE(r.exit_code == 0);
    auto report = specnet::io::parse_json(r.out, "report");
    const auto& ge = report["metrics"]["GE"];
    CHECK(ge["regression"]["linear"]["r_squared"].get<double>() > 0.99);
    CHECK(ge["regression"]["quadratic"]["beta"].size() == 3);
    CHECK(report["ks_normality"]["n"].get<int>() == 10);
    CHECK(report["ks_normality"].contains("caveat"));
    CHECK(fs::exists(dir / "plots" / "ge.csv"));
}

TEST_CASE("baseline build and check round trip through the CLI") {
    fs::path dir = scratch_dir();
    write(dir / "g1.txt", "a b\nb c\n");
    write(dir / "g2.txt", "a b\nb c\nc a\n");

    REQUIRE(run_cli("analyze --input " + (dir / "g1.txt").string() +
                        " --no-timestamp --out " + (dir / "r1.json").string(),
                    dir).exit_code == 0);
    REQUIRE(run_cli("analyze --input " + (dir / "g2.txt").string() +
                        " --no-timestamp --out " + (dir / "r2.json").string(),
                    dir).exit_code == 0);

    CliResult build = run_cli("baseline build --input " + (dir / "r1.json").string() +
                                  " --input " + (dir / "r2.json").string() +
                                  " --no-timestamp --out " + (dir / "profile.json").string(),
                              dir);
    REQUIRE(build.exit_code == 0);

    // a corpus row sits within z = 0.71 of the two-row profile: no flags
    CliResult ok = run_cli("baseline check --profile " + (dir / "profile.json").string() +
                               " --input " + (dir / "r1.json").string() +
                               " --z-threshold 2.0 --no-timestamp",
                           dir);
    CHECK(ok.exit_code == 0);

    // a wildly deviating row gates the pipeline
    write(dir / "hot.json", R"({"inputs": [{"metrics": {"GE": 99999.0}}]})");
    CliResult hot = run_cli("baseline check --profile " + (dir / "profile.json").string() +
                                " --input " + (dir / "hot.json").string() +
                                " --no-timestamp",
                            dir);
    CHECK(hot.exit_code == 1);

    // checking against identical corpus rows flags nothing
    CliResult identical = run_cli(
        "baseline build --input " + (dir / "r1.json").string() + " --input " +
            (dir / "r1.json").string() + " --no-timestamp --out " +
            (dir / "same.json").string(),
        dir);
    REQUIRE(identical.exit_code == 0);
    CliResult clean = run_cli("baseline check --profile " + (dir / "same.json").string() +
                                  " --input " + (dir / "r1.json").string() +
                                  " --no-timestamp",
                              dir);
    CHECK(clean.exit_code == 0);
}

TEST_CASE("config files provide flag defaults") {
    fs::path dir = scratch_dir();
    write(dir / "k2.txt", "a b\n");
    write(dir / "conf.ini", "[analyze]\nmetrics=GE\nno-timestamp=true\n");
    CliResult r = run_cli("--config " + (dir / "conf.ini").string() + " analyze --input " +
                              (dir / "k2.txt").string(),
                          dir);
    REQUIRE(r.exit_code == 0);
    auto report = specnet::io::parse_json(r.out, "report");
    CHECK(report["inputs"][0]["metrics"].size() == 1);
    CHECK_FALSE(report.contains("created_at"));
}

TEST_CASE("analyze json output is byte-identical across runs") {
    fs::path dir = scratch_dir();
    write(dir / "g.txt", "a b\nb c\nc d\nd a\n");
    CliResult r1 = run_cli("analyze --input " + (dir / "g.txt").string() + " --no-timestamp",
                           dir);
    CliResult r2 = run_cli("analyze --input " + (dir / "g.txt").string() + " --no-timestamp",
                           dir);
    CHECK(r1.out == r2.out);
    CHECK(!r1.out.empty());
}
