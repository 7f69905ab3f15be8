#pragma once

#include <utility>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

// The canonical left ideals of a brace. socle = ker lambda intersect Z(A,+)
// and center = socle intersect fix; the center is recomputed element-wise as
// a cross-check at construction.
struct DistinguishedSets {
  ElementSet fix;            // fixed by every lambda_y
  ElementSet lambda_kernel;  // lambda_x = id
  ElementSet socle;
  ElementSet center;
};

DistinguishedSets distinguished_sets(const SkewBrace& b);

// Shorthand for distinguished_sets(b).center.
ElementSet brace_center(const SkewBrace& b);

// Additive subgroup stable under lambda_x for every x in the carrier.
bool is_left_ideal(const SkewBrace& b, const ElementSet& s);

// Normal in both groups and lambda-stable. The star criterion
// (+-normal and S*A + A*S inside S) is evaluated alongside and any
// disagreement raises InternalInconsistency.
bool is_ideal(const SkewBrace& b, const ElementSet& s);

// Additive subgroup generated by all i*j with i in lhs, j in rhs.
ElementSet star_product(const SkewBrace& b, const ElementSet& lhs, const ElementSet& rhs);

// Additive subgroup generated by s + t.
ElementSet sum_of_left_ideals(const SkewBrace& b, const ElementSet& s, const ElementSet& t);

// I*J + J*I for two ideals. The element-wise sum set must already be a
// subgroup here; the function checks that it equals the generated one and
// raises InternalInconsistency otherwise.
ElementSet star_sum_of_ideals(const SkewBrace& b, const ElementSet& i, const ElementSet& j);

// Least ideal containing s.
ElementSet ideal_closure(const SkewBrace& b, const ElementSet& s);

// Every ideal, canonically ordered (size, then mask). Computed from
// principal closures and pairwise joins, which reach the whole ideal
// lattice since every ideal is the join of the principal ideals of its
// elements.
std::vector<ElementSet> all_ideals(const SkewBrace& b);

struct QuotientBrace {
  SkewBrace brace;
  std::vector<int> projection;
};

// Quotient modulo an ideal; coset labels follow quotient_group.
QuotientBrace quotient_brace(const SkewBrace& b, const ElementSet& ideal);

}  // namespace skewbrace
