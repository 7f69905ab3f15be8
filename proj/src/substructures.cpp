#include "skewbrace/substructures.hpp"

#include <algorithm>

namespace skewbrace {

DistinguishedSets distinguished_sets(const SkewBrace& b) {
  const int n = b.order();

  ElementSet fix(n), kernel(n), add_center(n);
  for (int x = 0; x < n; ++x) {
    bool fixed = true, in_kernel = true, central = true;
    for (int y = 0; y < n; ++y) {
      fixed = fixed && b.lambda(y, x) == x;
      in_kernel = in_kernel && b.lambda(x, y) == y;
      central = central && b.add(x, y) == b.add(y, x);
    }
    if (fixed) fix.insert(x);
    if (in_kernel) kernel.insert(x);
    if (central) add_center.insert(x);
  }

  const ElementSet socle = kernel.intersect(add_center);
  const ElementSet center = socle.intersect(fix);

  // Element-wise forms of the center; all three computations must agree.
  ElementSet by_star(n), by_commuting(n);
  for (int x = 0; x < n; ++x) {
    bool star_ok = true, comm_ok = true;
    for (int y = 0; y < n; ++y) {
      star_ok = star_ok && b.star(x, y) == 0 && b.star(y, x) == 0 &&
                b.add(b.add(b.add(b.neg(x), b.neg(y)), x), y) == 0;
      comm_ok = comm_ok && b.add(x, y) == b.add(y, x) && b.add(x, y) == b.circ(x, y) &&
                b.add(x, y) == b.circ(y, x);
    }
    if (star_ok) by_star.insert(x);
    if (comm_ok) by_commuting.insert(x);
  }
  if (center != by_star || center != by_commuting)
    throw InternalInconsistency("the three characterizations of the center disagree");

  return DistinguishedSets{fix, kernel, socle, center};
}

ElementSet brace_center(const SkewBrace& b) { return distinguished_sets(b).center; }

bool is_left_ideal(const SkewBrace& b, const ElementSet& s) {
  if (!is_subgroup(b.add_group(), s)) return false;
  for (int x = 0; x < b.order(); ++x)
    for (int a : s.members())
      if (!s.contains(b.lambda(x, a))) return false;
  return true;
}

namespace {

bool stars_absorbed(const SkewBrace& b, const ElementSet& s) {
  for (int a : s.members())
    for (int x = 0; x < b.order(); ++x)
      if (!s.contains(b.star(a, x)) || !s.contains(b.star(x, a))) return false;
  return true;
}

}  // namespace

bool is_ideal(const SkewBrace& b, const ElementSet& s) {
  const bool add_normal =
      is_subgroup(b.add_group(), s) && is_normal_subgroup(b.add_group(), s);

  const bool direct = add_normal && is_left_ideal(b, s) &&
                      is_subgroup(b.circ_group(), s) &&
                      is_normal_subgroup(b.circ_group(), s);
  const bool by_star = add_normal && stars_absorbed(b, s);

  if (direct != by_star)
    throw InternalInconsistency("ideal criteria disagree on " + s.to_string());
  return direct;
}

ElementSet star_product(const SkewBrace& b, const ElementSet& lhs, const ElementSet& rhs) {
  ElementSet gens(b.order());
  for (int i : lhs.members())
    for (int j : rhs.members()) gens.insert(b.star(i, j));
  return subgroup_closure(b.add_group(), gens);
}

ElementSet sum_of_left_ideals(const SkewBrace& b, const ElementSet& s, const ElementSet& t) {
  return subgroup_closure(b.add_group(), s.unite(t));
}

ElementSet star_sum_of_ideals(const SkewBrace& b, const ElementSet& i, const ElementSet& j) {
  const ElementSet ij = star_product(b, i, j);
  const ElementSet ji = star_product(b, j, i);
  const ElementSet closed = sum_of_left_ideals(b, ij, ji);

  ElementSet sums(b.order());
  for (int a : ij.members())
    for (int c : ji.members()) sums.insert(b.add(a, c));
  if (sums != closed)
    throw InternalInconsistency("I*J + J*I is not a subgroup for ideals " + i.to_string() +
                                ", " + j.to_string());
  return closed;
}

ElementSet ideal_closure(const SkewBrace& b, const ElementSet& s) {
  const int n = b.order();
  ElementSet current = s;
  current.insert(0);
  for (;;) {
    ElementSet next = subgroup_closure(b.add_group(), current);
    for (int a : next.members()) {
      for (int x = 0; x < n; ++x) {
        next.insert(b.lambda(x, a));
        next.insert(b.add(b.add(x, a), b.neg(x)));
        next.insert(b.circ(b.circ(x, a), b.bar(x)));
      }
    }
    if (next == current) break;
    current = next;
  }
  if (!is_ideal(b, current))
    throw InternalInconsistency("ideal closure of " + s.to_string() + " is not an ideal");
  return current;
}

std::vector<ElementSet> all_ideals(const SkewBrace& b) {
  const int n = b.order();
  std::vector<ElementSet> found;
  auto add_unique = [&](const ElementSet& s) {
    if (std::find(found.begin(), found.end(), s) == found.end()) {
      found.push_back(s);
      return true;
    }
    return false;
  };

  add_unique(ElementSet::single(n, 0));
  for (int x = 0; x < n; ++x) add_unique(ideal_closure(b, ElementSet::single(n, x)));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      add_unique(ideal_closure(b, ElementSet::of(n, {x, y})));

  // Close under pairwise joins.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      add_unique(ideal_closure(b, found[i].unite(found[j])));

  std::sort(found.begin(), found.end());
  return found;
}

QuotientBrace quotient_brace(const SkewBrace& b, const ElementSet& ideal) {
  if (!is_ideal(b, ideal))
    throw ValidationError(ValidationError::Kind::NotAnIdeal,
                          "set " + ideal.to_string() + " is not an ideal");

  QuotientGroup add_q = quotient_group(b.add_group(), ideal);
  const auto& proj = add_q.projection;
  const int q = add_q.group.order();

  // The circle cosets coincide with the additive ones, so the projection
  // carries over; well-definedness is still checked on every pair.
  std::vector<int> circ_table(q * q, -1);
  for (int a = 0; a < b.order(); ++a)
    for (int c = 0; c < b.order(); ++c) {
      int& slot = circ_table[proj[a] * q + proj[c]];
      const int value = proj[b.circ(a, c)];
      if (slot == -1)
        slot = value;
      else if (slot != value)
        throw InternalInconsistency("circle operation is not well-defined modulo " +
                                    ideal.to_string());
    }

  SkewBrace quotient = make_brace(add_q.group, validated_group(q, std::move(circ_table)));
  return QuotientBrace{std::move(quotient), std::move(add_q.projection)};
}

}  // namespace skewbrace
