#include "skewbrace/group.hpp"

#include <algorithm>
#include <sstream>

namespace skewbrace {

std::vector<int> ElementSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (int i = 0; i < parent_order_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string ElementSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < parent_order_; ++i) {
    if (!contains(i)) continue;
    if (!first) os << ", ";
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  int x = a;
  while (x != 0) {
    x = op(x, a);
    ++k;
  }
  return k;
}

FiniteGroup validated_group(int order, std::vector<int> op) {
  if (order <= 0)
    throw ValidationError(ValidationError::Kind::GroupInvalid, "empty table");
  if (order > kMaxOrder)
    throw ValidationError(ValidationError::Kind::TooLarge,
                          "order " + std::to_string(order) + " exceeds the supported maximum " +
                              std::to_string(kMaxOrder));
  for (int v : op)
    if (v < 0 || v >= order)
      throw ValidationError(ValidationError::Kind::GroupInvalid,
                            "table entry " + std::to_string(v) + " out of range 0.." +
                                std::to_string(order - 1));

  auto at = [&](int a, int b) { return op[a * order + b]; };

  if (at(0, 0) != 0 || [&] {
        for (int a = 0; a < order; ++a)
          if (at(0, a) != a || at(a, 0) != a) return true;
        return false;
      }())
    throw ValidationError(ValidationError::Kind::NoIdentity,
                          "index 0 is not a two-sided identity");

  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw ValidationError(
              ValidationError::Kind::NotAssociative,
              "associativity fails at (" + std::to_string(a) + ", " + std::to_string(b) +
                  ", " + std::to_string(c) + ")");

  std::vector<int> inv(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (at(a, b) == 0 && at(b, a) == 0) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0)
      throw ValidationError(ValidationError::Kind::NoInverse,
                            "element " + std::to_string(a) + " has no two-sided inverse");
  }

  return FiniteGroup(order, std::move(op), std::move(inv));
}

namespace {

int find_identity(int order, const std::vector<int>& flat) {
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a)
      ok = flat[e * order + a] == a && flat[a * order + e] == a;
    if (ok) return e;
  }
  return -1;
}

}  // namespace

MadeGroup make_group_flat(int order, std::span<const int> table) {
  if (order <= 0 || static_cast<int>(table.size()) != order * order)
    throw ValidationError(ValidationError::Kind::GroupInvalid, "table is not square");
  if (order > kMaxOrder)
    throw ValidationError(ValidationError::Kind::TooLarge,
                          "order " + std::to_string(order) + " exceeds the supported maximum " +
                              std::to_string(kMaxOrder));
  std::vector<int> flat(table.begin(), table.end());
  for (int v : flat)
    if (v < 0 || v >= order)
      throw ValidationError(ValidationError::Kind::GroupInvalid,
                            "table entry " + std::to_string(v) + " out of range 0.." +
                                std::to_string(order - 1));

  int e = find_identity(order, flat);
  if (e < 0)
    throw ValidationError(ValidationError::Kind::NoIdentity, "table has no two-sided identity");

  std::vector<int> relabel(order);
  for (int i = 0; i < order; ++i) relabel[i] = i;
  if (e != 0) {
    // Swap the identity into slot 0 and rewrite the table accordingly.
    std::swap(relabel[0], relabel[e]);
    std::vector<int> moved(order * order);
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        moved[relabel[a] * order + relabel[b]] = relabel[flat[a * order + b]];
    flat = std::move(moved);
  }

  return MadeGroup{validated_group(order, std::move(flat)), std::move(relabel)};
}

MadeGroup make_group(const std::vector<std::vector<int>>& table) {
  const int order = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(order * order);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order)
      throw ValidationError(ValidationError::Kind::GroupInvalid, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return make_group_flat(order, flat);
}

ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& gens) {
  ElementSet closed(g.order());
  closed.insert(0);
  std::vector<int> queue{0};
  for (int x : gens.members()) {
    if (!closed.contains(x)) {
      closed.insert(x);
      queue.push_back(x);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int a = queue[i];
    const int ia = g.inv(a);
    if (!closed.contains(ia)) {
      closed.insert(ia);
      queue.push_back(ia);
    }
    for (std::size_t j = 0; j <= i; ++j) {
      const int b = queue[j];
      for (int p : {g.op(a, b), g.op(b, a)}) {
        if (!closed.contains(p)) {
          closed.insert(p);
          queue.push_back(p);
        }
      }
    }
  }
  return closed;
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.parent_order() != g.order() || !s.contains(0)) return false;
  const auto mem = s.members();
  for (int a : mem) {
    if (!s.contains(g.inv(a))) return false;
    for (int b : mem)
      if (!s.contains(g.op(a, b))) return false;
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s))
    throw ValidationError(ValidationError::Kind::NotASubgroup,
                          "set " + s.to_string() + " is not a subgroup");
  const auto mem = s.members();
  for (int x = 0; x < g.order(); ++x) {
    const int ix = g.inv(x);
    for (int a : mem)
      if (!s.contains(g.op(g.op(x, a), ix))) return false;
  }
  return true;
}

QuotientGroup quotient_group(const FiniteGroup& g, const ElementSet& normal) {
  if (!is_normal_subgroup(g, normal))
    throw ValidationError(ValidationError::Kind::NotNormal,
                          "set " + normal.to_string() + " is not a normal subgroup");

  const int n = g.order();
  std::vector<int> coset_min(n, -1);  // least member of the coset of x
  for (int x = 0; x < n; ++x) {
    int least = x;
    for (int a : normal.members()) least = std::min(least, g.op(x, a));
    coset_min[x] = least;
  }
  std::vector<int> reps;
  for (int x = 0; x < n; ++x)
    if (coset_min[x] == x) reps.push_back(x);
  std::sort(reps.begin(), reps.end());

  std::vector<int> projection(n);
  for (int x = 0; x < n; ++x) {
    const auto it = std::lower_bound(reps.begin(), reps.end(), coset_min[x]);
    projection[x] = static_cast<int>(it - reps.begin());
  }

  const int q = static_cast<int>(reps.size());
  std::vector<int> table(q * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) table[i * q + j] = projection[g.op(reps[i], reps[j])];

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (projection[g.op(a, b)] != table[projection[a] * q + projection[b]])
        throw InternalInconsistency("quotient projection is not a homomorphism");

  return QuotientGroup{validated_group(q, std::move(table)), std::move(projection)};
}

ElementSet group_commutator(const FiniteGroup& g, const ElementSet& s, const ElementSet& t) {
  ElementSet gens(g.order());
  for (int a : s.members())
    for (int b : t.members())
      gens.insert(g.op(g.op(g.op(g.inv(a), g.inv(b)), a), b));
  return subgroup_closure(g, gens);
}

std::optional<int> group_nilpotency_class(const FiniteGroup& g) {
  ElementSet stage = ElementSet::full(g.order());
  const ElementSet trivial = ElementSet::single(g.order(), 0);
  int steps = 0;
  while (!(stage == trivial)) {
    ElementSet next = group_commutator(g, stage, g.carrier());
    if (next == stage) return std::nullopt;
    stage = next;
    ++steps;
  }
  return steps;
}

}  // namespace skewbrace
