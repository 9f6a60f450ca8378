#pragma once

#include "findex/derived.hpp"
#include "findex/integer.hpp"
#include "findex/invariants.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace findex {

// Closed-form F-index expressions for the four F-products.
//
// t4_t_printed reproduces the published statement for the T-product, which is
// a verbatim copy of the Q-product formula and is not an identity.
// t4_t_corrected is the sum of the four contributions in its derivation:
//   n1 F(G2) + 6 n2^4 F(G1) + 3 n2^4 ReZM(G1) + 2 n2^4 HM(G1)
//   + 24 n2^2 m2 M1(G1) + 12 n2 m1 M1(G2) + n2^4 xi4(G1) - 4 n2^4 M2(G1).
enum class TheoremId { t1_s, t2_r, t3_q, t4_t_printed, t4_t_corrected };

inline constexpr std::array<TheoremId, 5> all_theorems{
    TheoremId::t1_s, TheoremId::t2_r, TheoremId::t3_q, TheoremId::t4_t_printed,
    TheoremId::t4_t_corrected};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);

DerivedKind product_kind(TheoremId id);

// The theorem checked for a product kind; T maps to the corrected form.
TheoremId verified_theorem(DerivedKind kind);

/// Right-hand side of the theorem for G1, G2 described by their reports.
/// Throws std::logic_error if the value comes out negative.
Integer closed_form(TheoremId id, const InvariantReport& g1, const InvariantReport& g2);

/// The published polynomial for F(Pn[Pm]_kind), evaluated as printed.
/// Throws Error(invalid_family_params) unless n >= 2 and m >= 2.
///
/// The Q and T polynomials assume interior path vertices and disagree with the
/// true value at n = 2.
Integer example1_polynomial(DerivedKind kind, std::int64_t n, std::int64_t m);

}  // namespace findex
