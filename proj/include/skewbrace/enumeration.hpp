#pragma once

#include <vector>

#include "skewbrace/constructions.hpp"

namespace skewbrace {

// All automorphisms of g, found by backtracking over generator images.
// Throws TooLarge above max_order.
std::vector<std::vector<int>> automorphisms(const FiniteGroup& g, int max_order = 12);

struct BraceFamily {
  FiniteGroup base_group;
  std::vector<SkewBrace> braces;
  // Filled by classify_up_to_iso: indices of class representatives, and for
  // each brace the position of its class in iso_classes.
  std::vector<int> iso_classes;
  std::vector<int> class_of;
};

// Every brace structure with the given additive group, found by assigning
// each element an additive automorphism subject to the translation law
// lam_{x + lam_x(y)} = lam_x lam_y and reading off x o y = x + lam_x(y).
// For orders up to 4 the outcome is cross-checked against a brute-force
// scan over all group tables on the carrier. Throws TooLarge above
// max_order (exhaustive search; default 8).
BraceFamily enumerate_braces_on(const FiniteGroup& g, int max_order = 8);

// Groups the members into isomorphism classes. Representatives are the
// least members of their class in circle-table order, listed ascending.
BraceFamily classify_up_to_iso(BraceFamily family);

// Every group table on n elements with identity 0, as flat tables in
// lexicographic order. The brute-force oracle behind the enumeration
// cross-check; exposed for the tests. Capped at n <= 5.
std::vector<std::vector<int>> all_group_tables(int n);

}  // namespace skewbrace
