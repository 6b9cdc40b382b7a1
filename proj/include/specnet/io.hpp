#ifndef SPECNET_IO_HPP
#define SPECNET_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "specnet/graph.hpp"
#include "specnet/tasks.hpp"

namespace specnet::io {

using json = nlohmann::ordered_json;

// -- numeric formatting -------------------------------------------------

/// Rounds through a %.*g text round-trip so serialized reports carry at most
/// `digits` significant digits, identically on every platform.
double round_sig(double value, int digits = 10);

std::string format_sig(double value, int digits = 10);

// -- digests -------------------------------------------------------------

/// FNV-1a 64-bit content digest, hex encoded. Not cryptographic; used to tie
/// reports to their inputs.
std::string fnv1a64_hex(std::string_view bytes);

// -- graph interchange ---------------------------------------------------

WeightedGraph graph_from_json(const json& j);
json graph_to_json(const WeightedGraph& g);

/// Whitespace-separated `u v` pairs, one edge per line; '#' starts a comment.
/// All alphas default to 1.
WeightedGraph graph_from_edge_list(const std::string& text);

IntegrationTask task_from_json(const json& j);
json task_to_json(const IntegrationTask& task);

json baseline_to_json(const BaselineProfile& profile);
BaselineProfile baseline_from_json(const json& j);

// -- files ---------------------------------------------------------------

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

json parse_json(const std::string& text, const std::string& what);

// -- CSV -----------------------------------------------------------------

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Column index by name; -1 when absent.
    long column(const std::string& name) const;
};

/// Minimal RFC-4180-style reader: quoted fields, embedded commas/quotes.
CsvTable parse_csv(const std::string& text);

std::string csv_escape(const std::string& field);

}  // namespace specnet::io

#endif
