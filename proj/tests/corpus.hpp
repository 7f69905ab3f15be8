#pragma once

#include <string>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/groups.hpp"

namespace testsupport {

struct NamedBrace {
  std::string name;
  skewbrace::SkewBrace brace;
};

// The Klein/cyclic brace of order 4: addition is bitwise xor on (k, h)
// pairs coded as 2k + h, and (k1,h1) o (k2,h2) = (k1+k2+h1*h2, h1+h2).
// Tables are spelled out so the tests do not depend on the constructions
// they are checking.
skewbrace::SkewBrace make_b4();

// Opposite brace of the symmetric group on three letters.
skewbrace::SkewBrace make_ops3();

// Theta/omega matrices used by the bundled constructions.
std::vector<std::vector<int>> product_matrix(int rows, int cols, int modulus);

// Every brace on every group of order at most 6.
std::vector<NamedBrace> enumerated_corpus();

// The named constructions: B4, OpS3, opposite braces of the dihedral and
// quaternion groups of order 8, the twisted products of order 8 and 27,
// and three bilinear extensions.
std::vector<NamedBrace> named_corpus();

// enumerated_corpus + named_corpus.
std::vector<NamedBrace> full_corpus();

}  // namespace testsupport
