#pragma once

#include "findex/graph.hpp"
#include "findex/integer.hpp"

#include <cstddef>

namespace findex {

// Degree-based topological indices. Every function is exact.

/// Sum over vertices of deg(v)^k. Throws Error(invalid_exponent) for k < 2.
Integer general_first_zagreb(const Graph& g, int k);

/// M1: sum of squared degrees.
Integer first_zagreb(const Graph& g);

/// M2: sum over edges of deg(u) * deg(v).
Integer second_zagreb(const Graph& g);

/// F-index, vertex form: sum of cubed degrees.
Integer f_index(const Graph& g);

/// F-index, edge form: sum over edges of deg(u)^2 + deg(v)^2. Always equals
/// f_index(g); kept as a separate path for cross-checking.
Integer f_index_edge_form(const Graph& g);

/// HM: sum over edges of (deg(u) + deg(v))^2.
Integer hyper_zagreb(const Graph& g);

/// ReZM: sum over edges of deg(u) * deg(v) * (deg(u) + deg(v)).
Integer redefined_zagreb(const Graph& g);

struct InvariantReport {
  std::size_t n = 0;
  std::size_t m = 0;
  Integer m1;
  Integer m2;
  Integer f;
  Integer hm;
  Integer rezm;
  Integer xi4;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// Computes every field in one pass over degrees and edges and checks the
/// identities m1 = xi2, f = xi3 = edge-form F, hm = f + 2 m2. A failed
/// identity throws std::logic_error.
InvariantReport report(const Graph& g);

}  // namespace findex
