#include "skewbrace/term.hpp"

#include <algorithm>
#include <numeric>

#include "skewbrace/substructures.hpp"

namespace skewbrace {

Term::Term(Kind kind, int index, TermPtr lhs, TermPtr rhs)
    : kind_(kind), index_(index), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  switch (kind_) {
    case Kind::Zero:
    case Kind::Const:
      arity_ = 0;
      break;
    case Kind::Var:
      arity_ = index_ + 1;
      break;
    case Kind::Neg:
    case Kind::Bar:
      arity_ = lhs_->arity_;
      break;
    case Kind::Sum:
    case Kind::Star:
      arity_ = std::max(lhs_->arity_, rhs_->arity_);
      break;
  }
}

TermPtr Term::zero() { return TermPtr(new Term(Kind::Zero, 0, nullptr, nullptr)); }
TermPtr Term::var(int index) { return TermPtr(new Term(Kind::Var, index, nullptr, nullptr)); }
TermPtr Term::constant(int element) {
  return TermPtr(new Term(Kind::Const, element, nullptr, nullptr));
}
TermPtr Term::neg(TermPtr t) { return TermPtr(new Term(Kind::Neg, 0, std::move(t), nullptr)); }
TermPtr Term::bar(TermPtr t) { return TermPtr(new Term(Kind::Bar, 0, std::move(t), nullptr)); }
TermPtr Term::sum(TermPtr lhs, TermPtr rhs) {
  return TermPtr(new Term(Kind::Sum, 0, std::move(lhs), std::move(rhs)));
}
TermPtr Term::star(TermPtr lhs, TermPtr rhs) {
  return TermPtr(new Term(Kind::Star, 0, std::move(lhs), std::move(rhs)));
}

bool Term::uses_var(int v) const {
  switch (kind_) {
    case Kind::Var:
      return index_ == v;
    case Kind::Zero:
    case Kind::Const:
      return false;
    case Kind::Neg:
    case Kind::Bar:
      return lhs_->uses_var(v);
    case Kind::Sum:
    case Kind::Star:
      return lhs_->uses_var(v) || rhs_->uses_var(v);
  }
  return false;
}

std::string Term::to_string() const {
  switch (kind_) {
    case Kind::Zero:
      return "0";
    case Kind::Var:
      return "x" + std::to_string(index_);
    case Kind::Const:
      return "c" + std::to_string(index_);
    case Kind::Neg:
      return "-(" + lhs_->to_string() + ")";
    case Kind::Bar:
      return "bar(" + lhs_->to_string() + ")";
    case Kind::Sum:
      return "(" + lhs_->to_string() + " + " + rhs_->to_string() + ")";
    case Kind::Star:
      return "(" + lhs_->to_string() + " * " + rhs_->to_string() + ")";
  }
  return "?";
}

int eval_term(const SkewBrace& b, const Term& t, std::span<const int> assignment) {
  switch (t.kind()) {
    case Term::Kind::Zero:
      return 0;
    case Term::Kind::Var:
      if (t.index() >= static_cast<int>(assignment.size()))
        throw ValidationError(ValidationError::Kind::ArityMismatch,
                              "assignment has " + std::to_string(assignment.size()) +
                                  " values but the term uses x" + std::to_string(t.index()));
      return assignment[t.index()];
    case Term::Kind::Const:
      if (t.index() < 0 || t.index() >= b.order())
        throw ValidationError(ValidationError::Kind::PreconditionViolated,
                              "constant " + std::to_string(t.index()) + " outside the carrier");
      return t.index();
    case Term::Kind::Neg:
      return b.neg(eval_term(b, *t.lhs(), assignment));
    case Term::Kind::Bar:
      return b.bar(eval_term(b, *t.lhs(), assignment));
    case Term::Kind::Sum:
      return b.add(eval_term(b, *t.lhs(), assignment), eval_term(b, *t.rhs(), assignment));
    case Term::Kind::Star:
      return b.star(eval_term(b, *t.lhs(), assignment), eval_term(b, *t.rhs(), assignment));
  }
  return 0;
}

bool star_free_in(const Term& t, int var) {
  switch (t.kind()) {
    case Term::Kind::Star:
      if (t.lhs()->uses_var(var) || t.rhs()->uses_var(var)) return false;
      return true;  // both children are then trivially star-free in var
    case Term::Kind::Sum:
      return star_free_in(*t.lhs(), var) && star_free_in(*t.rhs(), var);
    case Term::Kind::Neg:
    case Term::Kind::Bar:
      return star_free_in(*t.lhs(), var);
    default:
      return true;
  }
}

namespace {

int center_exponent(const SkewBrace& b, const std::vector<int>& center) {
  int exponent = 1;
  for (int z : center) {
    const int ord = b.add_group().element_order(z);
    exponent = exponent / std::gcd(exponent, ord) * ord;
  }
  return exponent;
}

}  // namespace

TranslationCheck check_translation_lemma(const SkewBrace& b, const Term& t, int var,
                                         std::span<const std::vector<int>> assignments) {
  if (!star_free_in(t, var))
    throw ValidationError(ValidationError::Kind::PreconditionViolated,
                          "variable x" + std::to_string(var) + " occurs inside a star");

  const auto center = brace_center(b).members();
  const int modulus = center_exponent(b, center);

  // Candidate shifts surviving every (assignment, z) pair.
  std::vector<bool> alive(modulus, true);
  std::vector<int> scratch;
  for (const auto& assignment : assignments) {
    const int base = eval_term(b, t, assignment);
    scratch.assign(assignment.begin(), assignment.end());
    if (var >= static_cast<int>(scratch.size())) scratch.resize(var + 1, 0);
    for (int z : center) {
      const int saved = scratch[var];
      scratch[var] = b.add(saved, z);
      const int shifted = eval_term(b, t, scratch);
      scratch[var] = saved;

      int kz = 0;  // k*z as k runs upward
      for (int k = 0; k < modulus; ++k) {
        if (alive[k] && shifted != b.add(base, kz)) alive[k] = false;
        kz = b.add(kz, z);
      }
    }
  }

  TranslationCheck result;
  result.modulus = modulus;
  for (int k = 0; k < modulus; ++k)
    if (alive[k]) {
      result.shift = k;
      break;
    }
  return result;
}

TranslationCheck check_translation_lemma(const SkewBrace& b, const Term& t, int var,
                                         int max_assignments) {
  const int n = b.order();
  const int arity = std::max(t.arity(), var + 1);

  std::vector<std::vector<int>> assignments;
  long long total = 1;
  for (int i = 0; i < arity && total <= max_assignments; ++i) total *= n;

  if (arity == 0) {
    assignments.push_back({});
  } else if (total <= max_assignments) {
    std::vector<int> current(arity, 0);
    for (;;) {
      assignments.push_back(current);
      int pos = 0;
      while (pos < arity && ++current[pos] == n) current[pos++] = 0;
      if (pos == arity) break;
    }
  } else {
    // Deterministic low-discrepancy sample.
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (int s = 0; s < max_assignments; ++s) {
      std::vector<int> current(arity);
      for (int i = 0; i < arity; ++i) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        current[i] = static_cast<int>((state >> 33) % n);
      }
      assignments.push_back(std::move(current));
    }
  }

  return check_translation_lemma(b, t, var, assignments);
}

TermPtr random_term(std::uint64_t seed, int arity, int max_depth, int carrier_size) {
  if (max_depth > 12)
    throw ValidationError(ValidationError::Kind::TooLarge, "term depth capped at 12");

  // Tiny splitmix-style generator so the stream is identical everywhere.
  std::uint64_t state = seed + 0x9e3779b97f4a7c15ull;
  auto draw = [&state](int bound) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return static_cast<int>(z % static_cast<std::uint64_t>(bound));
  };

  struct Builder {
    int arity;
    int carrier;
    decltype(draw)& rng;

    TermPtr leaf() {
      const int pick = rng(arity > 0 ? 3 : 2);
      if (pick == 0) return Term::zero();
      if (pick == 1) return Term::constant(rng(carrier));
      return Term::var(rng(arity));
    }

    TermPtr build(int depth) {
      if (depth <= 0) return leaf();
      switch (rng(6)) {
        case 0:
          return leaf();
        case 1:
          return Term::neg(build(depth - 1));
        case 2:
          return Term::bar(build(depth - 1));
        case 3:
        case 4:
          return Term::sum(build(depth - 1), build(depth - 1));
        default:
          return Term::star(build(depth - 1), build(depth - 1));
      }
    }
  } builder{arity, std::max(carrier_size, 1), draw};

  return builder.build(max_depth);
}

}  // namespace skewbrace
