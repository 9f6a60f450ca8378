#include "findex/io.hpp"

#include "findex/error.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace findex {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<std::size_t> parse_index(std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

Error malformed(std::size_t line, const std::string& why) {
  return Error(ErrorKind::malformed_line, "line " + std::to_string(line) + ": " + why, line);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::optional<std::size_t> vertex_count;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!vertex_count) {
      if (tokens.front() != "n") {
        throw Error(ErrorKind::missing_header,
                    "line " + std::to_string(line_no) + ": expected header 'n <vertex_count>'",
                    line_no);
      }
      if (tokens.size() != 2) throw malformed(line_no, "header takes exactly one value");
      vertex_count = parse_index(tokens[1]);
      if (!vertex_count) throw malformed(line_no, "invalid vertex count '" + std::string(tokens[1]) + "'");
      continue;
    }

    if (tokens.size() != 2) throw malformed(line_no, "expected 'u v'");
    const auto u = parse_index(tokens[0]);
    const auto v = parse_index(tokens[1]);
    if (!u || !v) throw malformed(line_no, "vertex indices must be nonnegative integers");
    edges.push_back({*u, *v});
    edge_lines.push_back(line_no);
  }
  if (!vertex_count) throw Error(ErrorKind::missing_header, "missing header 'n <vertex_count>'");

  try {
    return Graph(*vertex_count, std::move(edges));
  } catch (const Error& e) {
    if (!e.position()) throw;
    const std::size_t at = edge_lines.at(*e.position());
    throw Error(e.kind(), "line " + std::to_string(at) + ": " + e.what(), at);
  }
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (const Edge& e : g.canonical_edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

nlohmann::ordered_json to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

nlohmann::ordered_json to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["m1"] = to_json(r.m1);
  j["m2"] = to_json(r.m2);
  j["f"] = to_json(r.f);
  j["hm"] = to_json(r.hm);
  j["rezm"] = to_json(r.rezm);
  j["xi4"] = to_json(r.xi4);
  return j;
}

nlohmann::ordered_json to_json(const VerificationRecord& r) {
  nlohmann::ordered_json j;
  j["g1"] = r.g1_descriptor;
  j["g2"] = r.g2_descriptor;
  j["kind"] = std::string(to_string(r.kind));
  j["theorem"] = std::string(to_string(r.theorem));
  j["formula_value"] = to_json(r.formula_value);
  j["direct_value"] = to_json(r.direct_value);
  j["match"] = r.match;
  j["product_vertices"] = r.product_vertices;
  j["product_edges"] = r.product_edges;
  j["example1_value"] = r.example1_value ? to_json(*r.example1_value) : nlohmann::ordered_json();
  return j;
}

nlohmann::ordered_json summary_to_json(const SuiteResult& result) {
  const SuiteSummary& s = result.summary;
  nlohmann::ordered_json j;
  j["pairs"] = s.pairs;
  j["checked"] = s.checked;
  j["mismatches"] = s.mismatches;
  j["t4_printed_checked"] = s.printed_checked;
  j["t4_printed_mismatches"] = s.printed_mismatches;
  j["t4_printed_equals_t3"] = s.printed_equals_theorem3;
  if (s.first_printed_mismatch) {
    const auto& rec = result.records.at(*s.first_printed_mismatch);
    j["t4_printed_first_mismatch"] = {{"g1", rec.g1_descriptor},
                                      {"g2", rec.g2_descriptor},
                                      {"formula_value", to_json(rec.formula_value)},
                                      {"direct_value", to_json(rec.direct_value)}};
  } else {
    j["t4_printed_first_mismatch"] = nullptr;
  }
  j["example1_checked"] = s.example1_checked;
  j["example1_mismatches"] = s.example1_mismatches;
  return j;
}

}  // namespace findex
