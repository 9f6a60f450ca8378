#include "findex/verify.hpp"

#include "findex/error.hpp"
#include "findex/invariants.hpp"
#include "findex/products.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <random>
#include <sstream>
#include <thread>

namespace findex {

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << ":";
  bool first = true;
  for (const Edge& e : g.canonical_edges()) {
    out << (first ? "" : ",") << e.u << "-" << e.v;
    first = false;
  }
  return out.str();
}

std::vector<Graph> enumerate_connected(std::size_t max_n) {
  if (max_n > max_enumeration_order) {
    throw Error(ErrorKind::limit_exceeded, "enumeration is limited to " +
                                               std::to_string(max_enumeration_order) +
                                               " vertices, got " + std::to_string(max_n));
  }
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<Edge> pairs;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j) pairs.push_back({i, j});
    const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      // A connected graph on n vertices has at least n - 1 edges.
      if (static_cast<std::size_t>(std::popcount(mask)) + 1 < n) continue;
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1) edges.push_back(pairs[i]);
      }
      Graph g(n, std::move(edges));
      if (is_connected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

Graph random_connected(std::size_t n, double edge_prob, std::uint64_t seed,
                       std::size_t max_retries) {
  if (n == 0) throw Error(ErrorKind::empty_graph, "random_connected needs n >= 1");
  if (!(edge_prob > 0.0 && edge_prob <= 1.0)) {
    throw Error(ErrorKind::invalid_family_params, "edge probability must lie in (0, 1]");
  }
  std::mt19937_64 rng(seed);
  const double threshold = edge_prob * 9007199254740992.0;  // 2^53
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        const std::uint64_t word = rng();
        if (edge_prob >= 1.0 || static_cast<double>(word >> 11) < threshold) {
          edges.push_back({i, j});
        }
      }
    }
    Graph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw Error(ErrorKind::retries_exhausted,
              "no connected sample after " + std::to_string(max_retries) + " attempts");
}

namespace {

bool is_path_shaped(const Graph& g) {
  if (g.vertex_count() < 2 || g.edge_count() + 1 != g.vertex_count() || !is_connected(g)) {
    return false;
  }
  const auto deg = g.degrees();
  return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d <= 2; });
}

struct PairContext {
  const NamedGraph& g1;
  const NamedGraph& g2;
  InvariantReport r1;
  InvariantReport r2;
  bool paths;
};

PairContext prepare(const NamedGraph& g1, const NamedGraph& g2) {
  if (!is_connected(g1.graph)) {
    throw Error(ErrorKind::not_connected, "g1 (" + g1.descriptor + ") is not connected");
  }
  if (!is_connected(g2.graph)) {
    throw Error(ErrorKind::not_connected, "g2 (" + g2.descriptor + ") is not connected");
  }
  return PairContext{g1, g2, report(g1.graph), report(g2.graph),
                     is_path_shaped(g1.graph) && is_path_shaped(g2.graph)};
}

VerificationRecord make_record(const PairContext& ctx, DerivedKind kind, TheoremId theorem,
                               const Graph& product, const Integer& direct) {
  VerificationRecord rec;
  rec.g1_descriptor = ctx.g1.descriptor;
  rec.g2_descriptor = ctx.g2.descriptor;
  rec.kind = kind;
  rec.theorem = theorem;
  rec.formula_value = closed_form(theorem, ctx.r1, ctx.r2);
  rec.direct_value = direct;
  rec.match = rec.formula_value == rec.direct_value;
  rec.product_vertices = product.vertex_count();
  rec.product_edges = product.edge_count();
  if (ctx.paths) {
    rec.example1_value = example1_polynomial(kind, static_cast<std::int64_t>(ctx.r1.n),
                                             static_cast<std::int64_t>(ctx.r2.n));
  }
  return rec;
}

Graph build_checked_product(const PairContext& ctx, DerivedKind kind, std::size_t ceiling) {
  const Graph& g1 = ctx.g1.graph;
  const Graph& g2 = ctx.g2.graph;
  const std::size_t size = (g1.vertex_count() + g1.edge_count()) * g2.vertex_count();
  if (size > ceiling) {
    throw Error(ErrorKind::product_too_large, "product has " + std::to_string(size) +
                                                  " vertices, ceiling is " +
                                                  std::to_string(ceiling));
  }
  return f_product(g1, g2, kind);
}

// Records for one pair in canonical order: S, R, Q, T corrected, T printed.
std::vector<VerificationRecord> verify_all_kinds(const NamedGraph& g1, const NamedGraph& g2,
                                                 std::size_t ceiling) {
  const PairContext ctx = prepare(g1, g2);
  std::vector<VerificationRecord> out;
  for (DerivedKind kind : all_derived_kinds) {
    const Graph product = build_checked_product(ctx, kind, ceiling);
    const Integer direct = f_index(product);
    out.push_back(make_record(ctx, kind, verified_theorem(kind), product, direct));
    if (kind == DerivedKind::T) {
      out.push_back(make_record(ctx, kind, TheoremId::t4_t_printed, product, direct));
    }
  }
  return out;
}

std::string family_name(Family f, std::size_t a) {
  return std::string(to_string(f)) + "(" + std::to_string(a) + ")";
}

std::vector<NamedGraph> family_corpus(std::size_t max_n) {
  std::vector<NamedGraph> out;
  // Small members that coincide with an earlier family are skipped
  // (K2 = P2, K3 = C3, star(3) = P3).
  for (std::size_t n = 1; n <= max_n; ++n) out.push_back({family_name(Family::path, n), path_graph(n)});
  for (std::size_t n = 3; n <= max_n; ++n) out.push_back({family_name(Family::cycle, n), cycle_graph(n)});
  for (std::size_t n = 4; n <= max_n; ++n) out.push_back({family_name(Family::complete, n), complete_graph(n)});
  for (std::size_t n = 4; n <= max_n; ++n) out.push_back({family_name(Family::star, n), gen_family(Family::star, n)});
  for (std::size_t a = 2; a <= max_n; ++a) {
    for (std::size_t b = a; a + b <= max_n; ++b) {
      out.push_back({std::string("complete_bipartite(") + std::to_string(a) + "," +
                         std::to_string(b) + ")",
                     gen_family(Family::complete_bipartite, a, b)});
    }
  }
  return out;
}

std::vector<NamedGraph> named(std::vector<Graph> graphs) {
  std::vector<NamedGraph> out;
  out.reserve(graphs.size());
  for (auto& g : graphs) {
    std::string d = describe(g);
    out.push_back({std::move(d), std::move(g)});
  }
  return out;
}

}  // namespace

VerificationRecord verify_pair(const NamedGraph& g1, const NamedGraph& g2, DerivedKind kind,
                               std::size_t ceiling) {
  const PairContext ctx = prepare(g1, g2);
  const Graph product = build_checked_product(ctx, kind, ceiling);
  return make_record(ctx, kind, verified_theorem(kind), product, f_index(product));
}

VerificationRecord verify_pair(const Graph& g1, const Graph& g2, DerivedKind kind,
                               std::size_t ceiling) {
  return verify_pair(NamedGraph{describe(g1), g1}, NamedGraph{describe(g2), g2}, kind, ceiling);
}

std::vector<std::pair<NamedGraph, NamedGraph>> build_corpus(const CorpusSpec& spec) {
  std::vector<NamedGraph> left;
  std::vector<NamedGraph> right;
  std::vector<std::pair<NamedGraph, NamedGraph>> pairs;

  switch (spec.mode) {
    case CorpusMode::exhaustive: {
      const std::size_t n1 = spec.max_n1;
      const std::size_t max_m1 = n1 > 0 ? n1 * (n1 - 1) / 2 : 0;
      const std::size_t worst = (n1 + max_m1) * spec.max_n2;
      if (worst > spec.ceiling) {
        throw Error(ErrorKind::product_too_large,
                    "exhaustive bounds allow products of " + std::to_string(worst) +
                        " vertices, ceiling is " + std::to_string(spec.ceiling));
      }
      left = named(enumerate_connected(spec.max_n1));
      right = named(enumerate_connected(spec.max_n2));
      break;
    }
    case CorpusMode::families:
      if (spec.paths) {
        const auto [n, m] = *spec.paths;
        left.push_back({family_name(Family::path, n), path_graph(n)});
        right.push_back({family_name(Family::path, m), path_graph(m)});
      } else {
        left = family_corpus(spec.max_n1);
        right = family_corpus(spec.max_n2);
      }
      break;
    case CorpusMode::random: {
      if (spec.max_n1 == 0 || spec.max_n2 == 0) {
        throw Error(ErrorKind::invalid_family_params, "random mode needs max_n1, max_n2 >= 1");
      }
      std::mt19937_64 rng(spec.seed);
      for (std::size_t i = 0; i < spec.sample_count; ++i) {
        const std::size_t n1 = 1 + rng() % spec.max_n1;
        const std::size_t n2 = 1 + rng() % spec.max_n2;
        const std::uint64_t s1 = rng();
        const std::uint64_t s2 = rng();
        Graph g1 = random_connected(n1, spec.edge_prob, s1);
        Graph g2 = random_connected(n2, spec.edge_prob, s2);
        pairs.emplace_back(NamedGraph{describe(g1), std::move(g1)},
                           NamedGraph{describe(g2), std::move(g2)});
      }
      return pairs;
    }
  }

  pairs.reserve(left.size() * right.size());
  for (const auto& a : left)
    for (const auto& b : right) pairs.emplace_back(a, b);
  return pairs;
}

SuiteResult run_suite(const CorpusSpec& spec) {
  const auto corpus = build_corpus(spec);
  std::vector<std::vector<VerificationRecord>> per_pair(corpus.size());
  std::vector<std::exception_ptr> failures(corpus.size());

  auto work = [&](std::size_t i) {
    try {
      per_pair[i] = verify_all_kinds(corpus[i].first, corpus[i].second, spec.ceiling);
    } catch (const Error& e) {
      failures[i] = std::make_exception_ptr(
          Error(e.kind(), "pair (" + corpus[i].first.descriptor + ", " +
                              corpus[i].second.descriptor + "): " + e.what()));
    } catch (...) {
      failures[i] = std::current_exception();
    }
  };

  const unsigned threads = std::max(1u, spec.threads);
  if (threads == 1 || corpus.size() < 2) {
    for (std::size_t i = 0; i < corpus.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) work(i);
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  SuiteResult result;
  SuiteSummary& s = result.summary;
  s.pairs = corpus.size();
  for (auto& records : per_pair) {
    std::optional<Integer> theorem3;
    for (auto& rec : records) {
      if (rec.theorem == TheoremId::t3_q) theorem3 = rec.formula_value;
      if (rec.theorem == TheoremId::t4_t_printed) {
        ++s.printed_checked;
        if (!rec.match) {
          ++s.printed_mismatches;
          if (!s.first_printed_mismatch) s.first_printed_mismatch = result.records.size();
        }
        if (!theorem3 || *theorem3 != rec.formula_value) s.printed_equals_theorem3 = false;
      } else {
        ++s.checked;
        if (!rec.match) ++s.mismatches;
        if (rec.example1_value) {
          ++s.example1_checked;
          if (*rec.example1_value != rec.direct_value) ++s.example1_mismatches;
        }
      }
      result.records.push_back(std::move(rec));
    }
  }
  return result;
}

}  // namespace findex
