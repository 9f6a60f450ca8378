#include "findex/error.hpp"
#include "findex/invariants.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace findex;

TEST_CASE("general_first_zagreb") {
  CHECK(general_first_zagreb(path_graph(3), 2) == 6);
  CHECK(general_first_zagreb(path_graph(1), 4) == 0);
  CHECK(general_first_zagreb(path_graph(3), 4) == 18);
  CHECK(general_first_zagreb(path_graph(3), 7) == 1 + 128 + 1);
  CHECK_THROWS_AS(general_first_zagreb(path_graph(3), 1), Error);
  try {
    general_first_zagreb(path_graph(3), 0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_exponent);
  }
}

TEST_CASE("f_index, second_zagreb, hyper_zagreb, redefined_zagreb spot values") {
  CHECK(f_index(path_graph(2)) == 2);
  CHECK(f_index(cycle_graph(5)) == 40);
  CHECK(f_index(complete_graph(4)) == 108);

  CHECK(second_zagreb(path_graph(3)) == 4);
  CHECK(second_zagreb(path_graph(1)) == 0);
  CHECK(second_zagreb(path_graph(4)) == 8);

  CHECK(hyper_zagreb(path_graph(3)) == 18);
  CHECK(hyper_zagreb(path_graph(1)) == 0);
  CHECK(hyper_zagreb(path_graph(4)) == 34);

  CHECK(redefined_zagreb(path_graph(3)) == 12);
  CHECK(redefined_zagreb(path_graph(1)) == 0);
  CHECK(redefined_zagreb(path_graph(5)) == 44);
}

TEST_CASE("report") {
  const InvariantReport p3 = report(path_graph(3));
  CHECK(p3.n == 3);
  CHECK(p3.m == 2);
  CHECK(p3.m1 == 6);
  CHECK(p3.m2 == 4);
  CHECK(p3.f == 10);
  CHECK(p3.hm == 18);
  CHECK(p3.rezm == 12);
  CHECK(p3.xi4 == 18);

  const InvariantReport k1 = report(path_graph(1));
  CHECK(k1 == InvariantReport{1, 0, 0, 0, 0, 0, 0, 0});

  const InvariantReport c4 = report(cycle_graph(4));
  CHECK(c4 == InvariantReport{4, 4, 16, 16, 32, 64, 64, 64});
}

TEST_CASE("report matches the matrix oracle and the cross identities on random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 10, trial % 3 == 0 ? 0.8 : 0.3);
    const auto adj = oracle::matrix_of(g);
    const auto sums = oracle::edge_sums(adj);
    const InvariantReport r = report(g);

    CHECK(r.m1 == oracle::power_sum(adj, 2));
    CHECK(r.f == oracle::power_sum(adj, 3));
    CHECK(r.xi4 == oracle::power_sum(adj, 4));
    CHECK(r.m2 == sums.m2);
    CHECK(r.hm == sums.hm);
    CHECK(r.rezm == sums.rezm);

    CHECK(general_first_zagreb(g, 2) == first_zagreb(g));
    CHECK(general_first_zagreb(g, 3) == f_index(g));
    CHECK(f_index_edge_form(g) == f_index(g));
    CHECK(hyper_zagreb(g) == f_index(g) + 2 * second_zagreb(g));
    CHECK(redefined_zagreb(g) == r.rezm);
  }
}

TEST_CASE("isolated vertices contribute nothing") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(rng, 8);
    const Graph padded(g.vertex_count() + 3, g.edges());
    InvariantReport a = report(g);
    InvariantReport b = report(padded);
    CHECK(b.n == a.n + 3);
    b.n = a.n;
    CHECK(a == b);
  }
}

TEST_CASE("values beyond 64 bits stay exact") {
  // The center term alone, 2999^8, is far past 2^64.
  const std::size_t n = 3000;
  const Graph star = gen_family(Family::star, n);
  const Integer d = n - 1;
  CHECK(general_first_zagreb(star, 8) == boost::multiprecision::pow(d, 8) + (n - 1));
  CHECK(general_first_zagreb(star, 8) > Integer(std::numeric_limits<std::uint64_t>::max()));
}
