#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "skewbrace/substructures.hpp"

namespace skewbrace {

struct Partition {
  std::vector<int> class_id;  // numbered by first occurrence
  int class_count = 0;

  bool same_class(int a, int b) const { return class_id[a] == class_id[b]; }
};

// The pairs (x, y) with -x + y in a fixed ideal, as an algebra under the
// componentwise brace operations. Encoding: pair_index = x * |J| + j where
// y = x + J[j]. Closure under all operations is verified at construction:
// pair by pair on small universes, through the carrier-level ideal axioms
// (the same property) on large ones.
class PairAlgebra {
public:
  PairAlgebra(const SkewBrace& b, const ElementSet& ideal);

  int size() const noexcept { return static_cast<int>(first_.size()); }

  int encode(int x, int y) const;
  std::pair<int, int> decode(int p) const { return {first_[p], second_[p]}; }

  static constexpr int unary_count() { return 2; }  // neg, bar
  static constexpr int binary_count() { return 2; } // add, circ

  int unary(int k, int p) const;
  int binary(int k, int p, int q) const;

  const SkewBrace& brace() const noexcept { return *brace_; }

private:
  const SkewBrace* brace_;
  std::vector<int> members_;   // the ideal, ascending
  std::vector<int> index_of_;  // carrier -> position in members_, or -1
  std::vector<int> first_, second_;  // decoded components per pair index
};

// Least equivalence containing the pairs and compatible with every basic
// operation of the algebra.
Partition congruence_generated(const SkewBrace& b,
                               std::span<const std::pair<int, int>> pairs);
Partition congruence_generated(const PairAlgebra& a,
                               std::span<const std::pair<int, int>> pairs);

// Commutator of two ideals via the diagonal congruence on the pair algebra.
// The result is checked to be an ideal inside both arguments and to be
// independent of the argument order. Throws NotAnIdeal on bad inputs.
ElementSet smith_commutator(const SkewBrace& b, const ElementSet& i, const ElementSet& j);

// Memoizes smith_commutator over one brace; the commutator is symmetric,
// so entries are cached per unordered pair.
class CommutatorOracle {
public:
  explicit CommutatorOracle(const SkewBrace& b) : brace_(&b) {}

  const ElementSet& of(const ElementSet& i, const ElementSet& j);

  const SkewBrace& brace() const noexcept { return *brace_; }

private:
  const SkewBrace* brace_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, ElementSet> cache_;
};

// [A, I] = 0.
bool is_central_ideal(const SkewBrace& b, const ElementSet& i);
bool is_central_ideal(CommutatorOracle& oracle, const ElementSet& i);

// True when the brace is abelian in the commutator sense; the equivalent
// formulations (one shared abelian group; stars and additive commutators
// vanish) are evaluated too and must agree.
bool is_abelian_brace(const SkewBrace& b);

struct AbsorbingBound {
  ElementSet bound;
  bool cap_reached = false;
  int function_count = 0;
};

// Enumerates binary polynomial functions from projections and constants
// (up to cap distinct functions), keeps the absorbing ones, and returns the
// ideal closure of their values on I x J. A sound lower bound for the
// commutator; complete only when the cap was not hit.
AbsorbingBound absorbing_lower_bound(const SkewBrace& b, const ElementSet& i,
                                     const ElementSet& j, int cap);

struct CommutatorEqualityReport {
  struct Entry {
    ElementSet lhs, rhs;        // the ideal pair
    ElementSet generated;       // ideal closure of I*J + J*I + [I,J]
    ElementSet commutator;      // smith_commutator(I, J)
    bool equal = false;         // generated == commutator
    bool raw_set_is_ideal = false;  // the plain sum set is already an ideal
  };
  std::vector<Entry> entries;
  bool equality_everywhere = true;
  bool raw_ideal_everywhere = true;
};

// Compares, over every ordered pair of ideals, the commutator with the
// least ideal containing I*J + J*I + [I,J]. Containment of the latter in
// the former is a theorem and is enforced.
CommutatorEqualityReport conjecture_commutator_equality(const SkewBrace& b);
CommutatorEqualityReport conjecture_commutator_equality(CommutatorOracle& oracle);

// Join of all central ideals; checked to coincide with the center.
ElementSet largest_central_ideal(const SkewBrace& b);
ElementSet largest_central_ideal(CommutatorOracle& oracle);

}  // namespace skewbrace
