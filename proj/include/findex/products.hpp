#pragma once

#include "findex/derived.hpp"
#include "findex/graph.hpp"

#include <cstddef>
#include <variant>

namespace findex {

struct OriginalVertex {
  Vertex u = 0;
  friend bool operator==(const OriginalVertex&, const OriginalVertex&) = default;
};

struct InsertedVertex {
  EdgeId e;
  friend bool operator==(const InsertedVertex&, const InsertedVertex&) = default;
};

using LeftFactor = std::variant<OriginalVertex, InsertedVertex>;

struct ProductVertex {
  LeftFactor left;
  Vertex right = 0;
  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

// Left-major, right-minor numbering of product vertices:
//   flat = rank(left) * n2 + right,  rank(Original u) = u,
//   rank(Inserted e) = n1 + e.
class ProductLayout {
 public:
  ProductLayout(std::size_t n1, std::size_t m1, std::size_t n2)
      : n1_(n1), m1_(m1), n2_(n2) {}

  std::size_t vertex_count() const noexcept { return (n1_ + m1_) * n2_; }
  std::size_t flat_index(const ProductVertex& v) const;
  ProductVertex vertex(std::size_t flat) const;

 private:
  std::size_t n1_;
  std::size_t m1_;
  std::size_t n2_;
};

/// G1[G2]. Throws Error(empty_graph) if either factor has no vertices.
Graph lexicographic(const Graph& g1, const Graph& g2);

/// G1[G2]_F built from the adjacency rule directly: (u1,v1) ~ (u2,v2) iff
/// u1 = u2 is an original vertex and v1v2 in E(G2), or u1u2 in E(F(G1)).
Graph f_product(const Graph& g1, const Graph& g2, DerivedKind kind);

/// Same graph built as F(G1)[G2] minus the G2-fibres over inserted vertices.
/// Slower; exists to cross-check f_product.
Graph f_product_subtractive(const Graph& g1, const Graph& g2, DerivedKind kind);

}  // namespace findex
