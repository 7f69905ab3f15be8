#pragma once

#include <optional>
#include <vector>

#include "skewbrace/substructures.hpp"

namespace skewbrace {

// Central-extension data for a brace with nontrivial center: theta is the
// additive cocycle, phi the circle cocycle, both normalized (zero whenever
// an argument is zero) and valued in the kernel by index. transversal maps
// quotient elements to the least member of their coset.
struct Cocycles {
  int quotient_order = 0;
  int kernel_order = 0;
  std::vector<int> theta;        // quotient_order^2 kernel indices
  std::vector<int> phi;          // quotient_order^2 kernel indices
  std::vector<int> transversal;  // quotient_order brace elements

  int theta_at(int x, int y) const { return theta[x * quotient_order + y]; }
  int phi_at(int x, int y) const { return phi[x * quotient_order + y]; }
};

// Brace on K x H with componentwise addition and
// (k1,h1) o (k2,h2) = (k1 + k2 + theta(h1,h2), h1 o h2), for an abelian K
// and a theta additive in each argument for both operations of H.
// Elements are numbered k * |H| + h. The kernel K x {0} always lands inside
// the center, and the construction cannot raise the nilpotency class by
// more than one; both facts are checked.
SkewBrace bilinear_brace(const SkewBrace& h, const FiniteGroup& k,
                         const std::vector<std::vector<int>>& theta);

// Brace on E x F x A whose circle operation twists the third coordinate by
// omega(e1, f2). Elements are numbered (e * |F| + f) * |A| + a. The result
// has central nilpotency class at most 2.
SkewBrace heisenberg_brace(const FiniteGroup& e, const FiniteGroup& f, const FiniteGroup& a,
                           const std::vector<std::vector<int>>& omega);

struct CentralExtension {
  SkewBrace quotient;
  FiniteGroup kernel;  // the center as an abelian group, relabeled 0..m-1
  Cocycles cocycles;
};

// Splits a brace with nontrivial center into its central quotient plus
// cocycles, using the least-element transversal. The compatibility equation
// between the two cocycles is verified on every triple, and rebuilding is
// checked to give a brace isomorphic to the input.
// Throws TrivialCenter when the center is 0.
CentralExtension extract_cocycles(const SkewBrace& b);

// Inverse direction: brace on Q x K from cocycle data. Elements are
// numbered x * |K| + a. Validates the cocycle identities
// (CocycleIdentityFails) and the compatibility equation (CompatibilityFails)
// before building, and checks that {0} x K is a central ideal after.
SkewBrace rebuild_from_cocycles(const SkewBrace& q, const FiniteGroup& k, const Cocycles& c);

// A bijection preserving both operations, or nullopt. Backtracks over
// generator images, pruning by element orders under both operations.
std::optional<std::vector<int>> braces_isomorphic(const SkewBrace& lhs, const SkewBrace& rhs);

}  // namespace skewbrace
