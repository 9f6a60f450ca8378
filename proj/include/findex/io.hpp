#pragma once

#include "findex/graph.hpp"
#include "findex/invariants.hpp"
#include "findex/verify.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

namespace findex {

// Edge-list document:
//
//   # comment
//   n <vertex_count>
//   <u> <v>
//   ...
//
// Blank lines and lines whose first non-space character is '#' are ignored.
// The header must be the first content line. Duplicate edges are rejected.

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::filesystem::path& path);

/// Header plus edges in canonical (min, max) lexicographic order.
std::string serialize_edge_list(const Graph& g);

nlohmann::ordered_json to_json(const Integer& value);
nlohmann::ordered_json to_json(const InvariantReport& r);
nlohmann::ordered_json to_json(const VerificationRecord& r);
// Summary object for a suite run, including the first printed-theorem-4
// mismatch when there is one.
nlohmann::ordered_json summary_to_json(const SuiteResult& result);

}  // namespace findex
