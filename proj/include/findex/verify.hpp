#pragma once

#include "findex/closed_forms.hpp"
#include "findex/derived.hpp"
#include "findex/graph.hpp"
#include "findex/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace findex {

inline constexpr std::size_t default_product_ceiling = 5000;
inline constexpr std::size_t default_random_retries = 1000;
inline constexpr std::size_t max_enumeration_order = 7;

struct NamedGraph {
  std::string descriptor;
  Graph graph;
};

// "n=3:0-1,1-2" with edges in canonical order.
std::string describe(const Graph& g);

/// Every labeled connected simple graph on 1..max_n vertices, ordered by
/// vertex count and then by edge-subset bitmask, where bit i selects the i-th
/// pair of the lexicographic pair list. Throws Error(limit_exceeded) above 7.
std::vector<Graph> enumerate_connected(std::size_t max_n);

/// Erdos-Renyi sample conditioned on connectivity by rejection.
///
/// The generator is std::mt19937_64 seeded with `seed`. Pairs (i, j), i < j,
/// are visited in lexicographic order and each draws one 64-bit word w; the
/// edge is kept iff edge_prob >= 1 or (w >> 11) < edge_prob * 2^53. Rejected
/// attempts continue the same stream. Throws Error(retries_exhausted).
Graph random_connected(std::size_t n, double edge_prob, std::uint64_t seed,
                       std::size_t max_retries = default_random_retries);

struct VerificationRecord {
  std::string g1_descriptor;
  std::string g2_descriptor;
  DerivedKind kind = DerivedKind::S;
  TheoremId theorem = TheoremId::t1_s;
  Integer formula_value;
  Integer direct_value;
  bool match = false;
  std::size_t product_vertices = 0;
  std::size_t product_edges = 0;
  // Published path polynomial, present when both factors are paths with at
  // least two vertices.
  std::optional<Integer> example1_value;
};

/// Builds G1[G2]_kind, takes its F-index directly and compares it with the
/// theorem for `kind` (the corrected form for T). Throws Error(not_connected)
/// or Error(product_too_large).
VerificationRecord verify_pair(const NamedGraph& g1, const NamedGraph& g2, DerivedKind kind,
                               std::size_t ceiling = default_product_ceiling);
VerificationRecord verify_pair(const Graph& g1, const Graph& g2, DerivedKind kind,
                               std::size_t ceiling = default_product_ceiling);

enum class CorpusMode { exhaustive, families, random };

struct CorpusSpec {
  CorpusMode mode = CorpusMode::exhaustive;
  std::size_t max_n1 = 3;
  std::size_t max_n2 = 3;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  std::size_t ceiling = default_product_ceiling;
  // Families mode: restrict the corpus to the single pair (P_n, P_m).
  std::optional<std::pair<std::size_t, std::size_t>> paths;
  double edge_prob = 0.5;
  unsigned threads = 1;
};

struct SuiteSummary {
  std::size_t pairs = 0;
  // Theorems 1-3 and the corrected theorem 4.
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  // Printed theorem 4, one check per T-pair.
  std::size_t printed_checked = 0;
  std::size_t printed_mismatches = 0;
  // Printed theorem 4 evaluated to the theorem 3 value on every pair.
  bool printed_equals_theorem3 = true;
  std::optional<std::size_t> first_printed_mismatch;  // index into records
  std::size_t example1_checked = 0;
  std::size_t example1_mismatches = 0;
};

struct SuiteResult {
  std::vector<VerificationRecord> records;
  SuiteSummary summary;
};

/// The corpus for a spec: pairs in generation order.
std::vector<std::pair<NamedGraph, NamedGraph>> build_corpus(const CorpusSpec& spec);

/// Verifies all four kinds for every corpus pair. Each pair yields records
/// in the order S, R, Q, T (corrected), T (printed). Output is independent of
/// the thread count.
SuiteResult run_suite(const CorpusSpec& spec);

}  // namespace findex
