#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

// Terms over the signature {0, +, -, *, bar} with variables and constants.
// The circle operation is expressible through x o y = x + (x*y) + y, so it
// is deliberately not a node kind.
class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
  enum class Kind { Zero, Var, Const, Neg, Bar, Sum, Star };

  static TermPtr zero();
  static TermPtr var(int index);
  static TermPtr constant(int element);
  static TermPtr neg(TermPtr t);
  static TermPtr bar(TermPtr t);
  static TermPtr sum(TermPtr lhs, TermPtr rhs);
  static TermPtr star(TermPtr lhs, TermPtr rhs);

  Kind kind() const noexcept { return kind_; }
  int index() const noexcept { return index_; }  // variable index or constant element
  const TermPtr& lhs() const noexcept { return lhs_; }
  const TermPtr& rhs() const noexcept { return rhs_; }

  // 1 + the largest variable index, 0 for closed terms.
  int arity() const noexcept { return arity_; }

  bool uses_var(int v) const;

  std::string to_string() const;

private:
  Term(Kind kind, int index, TermPtr lhs, TermPtr rhs);

  Kind kind_;
  int index_ = 0;
  TermPtr lhs_, rhs_;
  int arity_ = 0;
};

// Throws ArityMismatch when the assignment is shorter than the arity, and
// PreconditionViolated when a constant falls outside the carrier.
int eval_term(const SkewBrace& b, const Term& t, std::span<const int> assignment);

// True when the variable never occurs inside a star node.
bool star_free_in(const Term& t, int var);

struct TranslationCheck {
  // The unique k with t(.., x+z, ..) = t(..) + k z for all z in the center,
  // reported modulo the exponent of the center. Absent only if no k works,
  // which would contradict the translation property of star-free terms.
  std::optional<int> shift;
  int modulus = 1;  // exponent of the center
};

// Checks the translation behavior of a term whose chosen variable is
// star-free, over every central z and the given assignments.
// Throws PreconditionViolated when the variable occurs inside a star.
TranslationCheck check_translation_lemma(const SkewBrace& b, const Term& t, int var,
                                         std::span<const std::vector<int>> assignments);

// Same, enumerating all n^arity assignments (capped; deterministic sample
// of max_assignments beyond the cap).
TranslationCheck check_translation_lemma(const SkewBrace& b, const Term& t, int var,
                                         int max_assignments = 4096);

// Deterministic pseudo-random term; identical arguments always produce the
// identical tree. max_depth is capped at 12.
TermPtr random_term(std::uint64_t seed, int arity, int max_depth, int carrier_size = 2);

}  // namespace skewbrace
