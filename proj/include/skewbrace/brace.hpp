#pragma once

#include <string>
#include <vector>

#include "skewbrace/group.hpp"

namespace skewbrace {

// Two group structures on one carrier, tied together by the left-brace
// compatibility law x o (y + z) = (x o y) - x + (x o z). The lambda and
// star tables are filled in at construction and never recomputed.
class SkewBrace {
public:
  int order() const noexcept { return add_.order(); }

  const FiniteGroup& add_group() const noexcept { return add_; }
  const FiniteGroup& circ_group() const noexcept { return circ_; }

  int add(int a, int b) const { return add_.op(a, b); }
  int circ(int a, int b) const { return circ_.op(a, b); }

  // Additive inverse -x and circle inverse, kept separate on purpose.
  int neg(int a) const { return add_.inv(a); }
  int bar(int a) const { return circ_.inv(a); }

  // lambda_x(y) = -x + (x o y), an automorphism of the additive group.
  int lambda(int x, int y) const { return lambda_[x * order() + y]; }

  // x * y = lambda_x(y) - y; zero exactly where + and o agree.
  int star(int x, int y) const { return star_[x * order() + y]; }

  // Row x of the lambda table as a permutation of the carrier.
  std::vector<int> lambda_of(int x) const;

  const std::vector<int>& lambda_table() const noexcept { return lambda_; }
  const std::vector<int>& star_table() const noexcept { return star_; }

  ElementSet carrier() const { return ElementSet::full(order()); }

  friend bool operator==(const SkewBrace& a, const SkewBrace& b) {
    return a.add_ == b.add_ && a.circ_ == b.circ_;
  }

private:
  SkewBrace(FiniteGroup add, FiniteGroup circ, std::vector<int> lambda, std::vector<int> star)
      : add_(std::move(add)), circ_(std::move(circ)), lambda_(std::move(lambda)),
        star_(std::move(star)) {}

  friend SkewBrace make_brace(const FiniteGroup& add, const FiniteGroup& circ);

  FiniteGroup add_;
  FiniteGroup circ_;
  std::vector<int> lambda_;
  std::vector<int> star_;
};

// Verifies the brace law on every triple and precomputes lambda and star.
// Throws AxiomFails with a witness triple, or GroupInvalid when the carriers
// do not match.
SkewBrace make_brace(const FiniteGroup& add, const FiniteGroup& circ);

// Same, starting from raw tables. The two tables must share their identity
// element; it is moved to index 0 when needed (MismatchedIdentity otherwise).
SkewBrace make_brace_tables(const std::vector<std::vector<int>>& add,
                            const std::vector<std::vector<int>>& circ);

// (G, +, +): lambda is the identity everywhere.
SkewBrace trivial_brace(const FiniteGroup& g);

// (G, +, +op) with x o y = y + x: lambda_x becomes conjugation.
SkewBrace opposite_brace(const FiniteGroup& g);

// Exhaustive re-check of the identities every brace satisfies. Failures can
// only come from a library bug, so callers usually just assert all_passed().
struct IdentityReport {
  struct Entry {
    std::string name;
    bool passed = false;
    std::string witness;  // empty when passed
  };
  std::vector<Entry> entries;

  bool all_passed() const {
    for (const auto& e : entries)
      if (!e.passed) return false;
    return true;
  }
};

IdentityReport verify_identities(const SkewBrace& b);

}  // namespace skewbrace
