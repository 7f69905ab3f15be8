#pragma once

#include "skewbrace/group.hpp"

namespace skewbrace {

// Ready-made tables for the groups used throughout the tests and the
// bundled constructions. All of them put the identity at index 0.

FiniteGroup cyclic_group(int n);

// Index of (a, b) is a*|h| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// Permutations of three letters in lexicographic order, composed left
// after right.
FiniteGroup symmetric3();

// Order 2n: indices 0..n-1 are rotations, n..2n-1 reflections.
FiniteGroup dihedral_group(int n);

// Quaternion units 1, -1, i, -i, j, -j, k, -k in that order.
FiniteGroup quaternion8();

}  // namespace skewbrace
