#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

// A set-theoretic solution candidate: a total map r on pairs, with the
// derived one-sided tables sigma_x(y) = first(r(x,y)) and
// tau_y(x) = second(r(x,y)) filled in at construction.
struct Solution {
  int size = 0;
  std::vector<std::pair<int, int>> map;  // row-major, map[x * size + y]
  std::vector<int> sigma;                // sigma[x * size + y] = sigma_x(y)
  std::vector<int> tau;                  // tau[y * size + x] = tau_y(x)

  std::pair<int, int> apply(int x, int y) const { return map[x * size + y]; }
};

// Validates entry ranges and derives sigma/tau.
Solution make_solution(int n, std::vector<std::pair<int, int>> table);

// r(x, y) = (y, x).
Solution flip_solution(int n);

struct BraidCheck {
  bool holds = true;
  std::array<int, 3> witness{};  // first failing triple when !holds
};

// Exhaustive braid-relation check over all triples.
BraidCheck check_ybe(const Solution& s);

struct DegeneracyCheck {
  bool nondegenerate = true;
  bool involutive = true;
  std::string witness;  // describes the first failure, if any
};

// sigma_x and tau_y must all be bijections; involutive means r o r = id.
DegeneracyCheck check_nondegenerate_involutive(const Solution& s);

// The solution attached to a brace:
// r(x, y) = (lambda_x(y), bar(lambda_x(y)) o x o y). The result is checked
// to satisfy the braid relation and to be non-degenerate; a failure would
// mean a bug and raises InternalInconsistency.
Solution canonical_solution(const SkewBrace& b);

}  // namespace skewbrace
