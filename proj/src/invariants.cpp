#include "findex/invariants.hpp"

#include "findex/error.hpp"

#include <stdexcept>
#include <string>

namespace findex {

namespace {

Integer power(std::size_t base, int exponent) {
  return boost::multiprecision::pow(Integer(base), static_cast<unsigned>(exponent));
}

}  // namespace

Integer general_first_zagreb(const Graph& g, int k) {
  if (k < 2) {
    throw Error(ErrorKind::invalid_exponent, "exponent must be >= 2, got " + std::to_string(k));
  }
  Integer sum = 0;
  for (std::size_t d : g.degrees()) sum += power(d, k);
  return sum;
}

Integer first_zagreb(const Graph& g) { return general_first_zagreb(g, 2); }

Integer f_index(const Graph& g) { return general_first_zagreb(g, 3); }

Integer f_index_edge_form(const Graph& g) {
  const auto deg = g.degrees();
  Integer sum = 0;
  for (const Edge& e : g.edges()) sum += power(deg[e.u], 2) + power(deg[e.v], 2);
  return sum;
}

Integer second_zagreb(const Graph& g) {
  const auto deg = g.degrees();
  Integer sum = 0;
  for (const Edge& e : g.edges()) sum += Integer(deg[e.u]) * deg[e.v];
  return sum;
}

Integer hyper_zagreb(const Graph& g) {
  const auto deg = g.degrees();
  Integer sum = 0;
  for (const Edge& e : g.edges()) sum += power(deg[e.u] + deg[e.v], 2);
  return sum;
}

Integer redefined_zagreb(const Graph& g) {
  const auto deg = g.degrees();
  Integer sum = 0;
  for (const Edge& e : g.edges()) {
    sum += Integer(deg[e.u]) * deg[e.v] * (deg[e.u] + deg[e.v]);
  }
  return sum;
}

InvariantReport report(const Graph& g) {
  const auto deg = g.degrees();
  InvariantReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();

  for (std::size_t d : deg) {
    Integer sq = Integer(d) * d;
    r.m1 += sq;
    r.f += sq * d;
    r.xi4 += sq * sq;
  }
  Integer f_edges = 0;
  for (const Edge& e : g.edges()) {
    const Integer du = deg[e.u];
    const Integer dv = deg[e.v];
    r.m2 += du * dv;
    r.hm += (du + dv) * (du + dv);
    r.rezm += du * dv * (du + dv);
    f_edges += du * du + dv * dv;
  }

  if (r.m1 != general_first_zagreb(g, 2) || r.f != general_first_zagreb(g, 3)) {
    throw std::logic_error("report: xi2/xi3 disagree with M1/F");
  }
  if (r.f != f_edges) throw std::logic_error("report: vertex and edge forms of F disagree");
  if (r.hm != r.f + 2 * r.m2) throw std::logic_error("report: HM != F + 2 M2");
  return r;
}

}  // namespace findex
