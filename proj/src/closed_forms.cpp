#include "findex/closed_forms.hpp"

#include "findex/error.hpp"

#include <stdexcept>
#include <string>

namespace findex {

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::t1_s: return "T1";
    case TheoremId::t2_r: return "T2";
    case TheoremId::t3_q: return "T3";
    case TheoremId::t4_t_printed: return "T4-printed";
    case TheoremId::t4_t_corrected: return "T4-corrected";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (TheoremId id : all_theorems) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

DerivedKind product_kind(TheoremId id) {
  switch (id) {
    case TheoremId::t1_s: return DerivedKind::S;
    case TheoremId::t2_r: return DerivedKind::R;
    case TheoremId::t3_q: return DerivedKind::Q;
    case TheoremId::t4_t_printed:
    case TheoremId::t4_t_corrected: return DerivedKind::T;
  }
  throw std::invalid_argument("unknown theorem");
}

TheoremId verified_theorem(DerivedKind kind) {
  switch (kind) {
    case DerivedKind::S: return TheoremId::t1_s;
    case DerivedKind::R: return TheoremId::t2_r;
    case DerivedKind::Q: return TheoremId::t3_q;
    case DerivedKind::T: return TheoremId::t4_t_corrected;
  }
  throw std::invalid_argument("unknown derived kind");
}

namespace {

// Q- and printed T-product formula.
Integer q_product_form(const InvariantReport& g1, const InvariantReport& g2) {
  const Integer n1 = g1.n, m1 = g1.m, n2 = g2.n, m2 = g2.m;
  const Integer n2_2 = n2 * n2;
  const Integer n2_4 = n2_2 * n2_2;
  return n1 * g2.f - n2_4 * g1.f + 3 * n2_4 * g1.rezm + 2 * n2_4 * g1.hm +
         6 * n2_2 * m2 * g1.m1 + 6 * n2 * m1 * g2.m1 + n2_4 * g1.xi4 - 4 * n2_4 * g1.m2;
}

}  // namespace

Integer closed_form(TheoremId id, const InvariantReport& g1, const InvariantReport& g2) {
  const Integer n1 = g1.n, m1 = g1.m, n2 = g2.n, m2 = g2.m;
  const Integer n2_2 = n2 * n2;
  const Integer n2_4 = n2_2 * n2_2;

  Integer value;
  switch (id) {
    case TheoremId::t1_s:
      value = n2_4 * g1.f + n1 * g2.f + 6 * n2_2 * m2 * g1.m1 + 6 * n2 * m1 * g2.m1 +
              8 * n2_4 * m1;
      break;
    case TheoremId::t2_r:
      value = 8 * n2_4 * g1.f + n1 * g2.f + 24 * n2_2 * m2 * g1.m1 + 12 * n2 * m1 * g2.m1 +
              8 * n2_4 * m1;
      break;
    case TheoremId::t3_q:
    case TheoremId::t4_t_printed:
      value = q_product_form(g1, g2);
      break;
    case TheoremId::t4_t_corrected:
      value = n1 * g2.f + 6 * n2_4 * g1.f + 3 * n2_4 * g1.rezm + 2 * n2_4 * g1.hm +
              24 * n2_2 * m2 * g1.m1 + 12 * n2 * m1 * g2.m1 + n2_4 * g1.xi4 -
              4 * n2_4 * g1.m2;
      break;
  }
  if (value < 0) {
    throw std::logic_error("closed_form " + std::string(to_string(id)) + " is negative");
  }
  return value;
}

Integer example1_polynomial(DerivedKind kind, std::int64_t n_in, std::int64_t m_in) {
  if (n_in < 2 || m_in < 2) {
    throw Error(ErrorKind::invalid_family_params,
                "path polynomials need n >= 2 and m >= 2, got n=" + std::to_string(n_in) +
                    " m=" + std::to_string(m_in));
  }
  const Integer n = n_in, m = m_in;
  const Integer m2 = m * m, m3 = m2 * m, m4 = m3 * m;
  switch (kind) {
    case DerivedKind::S:
      return 16 * n * m4 - 22 * m4 + 24 * n * m3 - 36 * m3 + 12 * m2 - 28 * n * m + 36 * m -
             14 * n;
    case DerivedKind::R:
      return 72 * n * m4 - 120 * m4 + 96 * n * m3 - 144 * m3 - 48 * n * m2 + 96 * m2 -
             64 * n * m + 72 * m - 14 * n;
    case DerivedKind::Q:
      return 72 * n * m4 - 152 * m4 + 24 * n * m3 - 36 * m3 + 12 * m2 - 28 * n * m + 36 * m -
             14 * n;
    case DerivedKind::T:
      return 128 * n * m4 - 250 * m4 + 96 * n * m3 - 144 * m3 - 48 * n * m2 + 96 * m2 -
             64 * n * m + 72 * m - 14 * n;
  }
  throw std::invalid_argument("unknown derived kind");
}

}  // namespace findex
