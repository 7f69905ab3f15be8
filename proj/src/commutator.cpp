#include "skewbrace/commutator.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

namespace skewbrace {

PairAlgebra::PairAlgebra(const SkewBrace& b, const ElementSet& ideal)
    : brace_(&b), members_(ideal.members()), index_of_(b.order(), -1) {
  const int m = static_cast<int>(members_.size());
  for (int i = 0; i < m; ++i) index_of_[members_[i]] = i;

  first_.resize(b.order() * m);
  second_.resize(b.order() * m);
  for (int x = 0; x < b.order(); ++x)
    for (int j = 0; j < m; ++j) {
      first_[x * m + j] = x;
      second_[x * m + j] = b.add(x, members_[j]);
    }

  auto related = [&](int u, int v) { return index_of_[b.add(b.neg(u), v)] >= 0; };

  const int total = size();
  for (int p = 0; p < total; ++p) {
    const auto [x, y] = decode(p);
    if (!related(b.neg(x), b.neg(y)) || !related(b.bar(x), b.bar(y)))
      throw ValidationError(ValidationError::Kind::NotAnIdeal,
                            "pair universe not closed under inverses");
  }
  if (total <= 2048) {
    for (int p = 0; p < total; ++p) {
      const auto [x, y] = decode(p);
      for (int q = 0; q < total; ++q) {
        const auto [u, v] = decode(q);
        if (!related(b.add(x, u), b.add(y, v)) || !related(b.circ(x, u), b.circ(y, v)))
          throw ValidationError(ValidationError::Kind::NotAnIdeal,
                                "pair universe not closed; the defining set is not an ideal");
      }
    }
  } else if (!is_ideal(b, ideal)) {
    throw ValidationError(ValidationError::Kind::NotAnIdeal,
                          "pair universe not closed; the defining set is not an ideal");
  }
}

int PairAlgebra::encode(int x, int y) const {
  const int j = index_of_[brace_->add(brace_->neg(x), y)];
  if (j < 0) throw InternalInconsistency("pair outside the pair algebra universe");
  return x * static_cast<int>(members_.size()) + j;
}

int PairAlgebra::unary(int k, int p) const {
  const int x = first_[p], y = second_[p];
  return k == 0 ? encode(brace_->neg(x), brace_->neg(y))
                : encode(brace_->bar(x), brace_->bar(y));
}

int PairAlgebra::binary(int k, int p, int q) const {
  const int x = first_[p], y = second_[p];
  const int u = first_[q], v = second_[q];
  return k == 0 ? encode(brace_->add(x, u), brace_->add(y, v))
                : encode(brace_->circ(x, u), brace_->circ(y, v));
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

// Propagates every merged pair through all unary translations of the basic
// operations until the relation is a congruence.
template <class Alg>
Partition generate(const Alg& alg, std::span<const std::pair<int, int>> pairs) {
  const int n = alg.size();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> work;

  for (const auto& [a, b] : pairs)
    if (uf.unite(a, b)) work.emplace_back(a, b);

  while (!work.empty()) {
    const auto [a, b] = work.back();
    work.pop_back();
    for (int k = 0; k < alg.unary_count(); ++k) {
      const int u = alg.unary(k, a), v = alg.unary(k, b);
      if (uf.unite(u, v)) work.emplace_back(u, v);
    }
    for (int k = 0; k < alg.binary_count(); ++k)
      for (int c = 0; c < n; ++c) {
        int u = alg.binary(k, a, c), v = alg.binary(k, b, c);
        if (uf.unite(u, v)) work.emplace_back(u, v);
        u = alg.binary(k, c, a);
        v = alg.binary(k, c, b);
        if (uf.unite(u, v)) work.emplace_back(u, v);
      }
  }

  Partition part;
  part.class_id.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = uf.find(i);
    if (part.class_id[root] < 0) part.class_id[root] = part.class_count++;
    part.class_id[i] = part.class_id[root];
  }
  return part;
}

// Adapter exposing a brace itself as an algebra for congruence generation.
struct BraceOps {
  const SkewBrace& b;
  int size() const { return b.order(); }
  static constexpr int unary_count() { return 2; }
  static constexpr int binary_count() { return 2; }
  int unary(int k, int x) const { return k == 0 ? b.neg(x) : b.bar(x); }
  int binary(int k, int x, int y) const { return k == 0 ? b.add(x, y) : b.circ(x, y); }
};

ElementSet delta_commutator(const SkewBrace& b, const ElementSet& i, const ElementSet& j) {
  PairAlgebra algebra(b, j);
  std::vector<std::pair<int, int>> gens;
  gens.reserve(b.order() * i.size());
  for (int a = 0; a < b.order(); ++a)
    for (int d : i.members()) {
      const int c = b.add(a, d);
      gens.emplace_back(algebra.encode(a, a), algebra.encode(c, c));
    }

  const Partition delta = congruence_generated(algebra, gens);

  ElementSet result(b.order());
  result.insert(0);
  for (int p = 0; p < algebra.size(); ++p) {
    const auto [x, y] = algebra.decode(p);
    if (delta.same_class(p, algebra.encode(y, y))) result.insert(b.add(b.neg(y), x));
  }
  return result;
}

}  // namespace

Partition congruence_generated(const SkewBrace& b,
                               std::span<const std::pair<int, int>> pairs) {
  return generate(BraceOps{b}, pairs);
}

Partition congruence_generated(const PairAlgebra& a,
                               std::span<const std::pair<int, int>> pairs) {
  return generate(a, pairs);
}

ElementSet smith_commutator(const SkewBrace& b, const ElementSet& i, const ElementSet& j) {
  if (!is_ideal(b, i))
    throw ValidationError(ValidationError::Kind::NotAnIdeal,
                          "left argument " + i.to_string() + " is not an ideal");
  if (!is_ideal(b, j))
    throw ValidationError(ValidationError::Kind::NotAnIdeal,
                          "right argument " + j.to_string() + " is not an ideal");

  const ElementSet forward = delta_commutator(b, i, j);
  const ElementSet backward = delta_commutator(b, j, i);
  if (forward != backward)
    throw InternalInconsistency("commutator of " + i.to_string() + " and " + j.to_string() +
                                " is not symmetric");
  if (!forward.subset_of(i.intersect(j)))
    throw InternalInconsistency("commutator escapes the intersection of its arguments");
  if (!is_ideal(b, forward))
    throw InternalInconsistency("commutator " + forward.to_string() + " is not an ideal");
  return forward;
}

const ElementSet& CommutatorOracle::of(const ElementSet& i, const ElementSet& j) {
  const std::pair<std::uint64_t, std::uint64_t> key{std::min(i.mask(), j.mask()),
                                                    std::max(i.mask(), j.mask())};
  const auto found = cache_.find(key);
  if (found != cache_.end()) return found->second;
  return cache_.emplace(key, smith_commutator(*brace_, i, j)).first->second;
}

bool is_central_ideal(const SkewBrace& b, const ElementSet& i) {
  return smith_commutator(b, b.carrier(), i).size() == 1;
}

bool is_central_ideal(CommutatorOracle& oracle, const ElementSet& i) {
  return oracle.of(oracle.brace().carrier(), i).size() == 1;
}

bool is_abelian_brace(const SkewBrace& b) {
  const bool by_commutator = is_central_ideal(b, b.carrier());
  const bool by_groups =
      b.add_group().table() == b.circ_group().table() && b.add_group().is_abelian();
  const bool by_star =
      star_product(b, b.carrier(), b.carrier()).size() == 1 &&
      group_commutator(b.add_group(), b.carrier(), b.carrier()).size() == 1;
  if (by_commutator != by_groups || by_groups != by_star)
    throw InternalInconsistency("abelianness criteria disagree");
  return by_commutator;
}

AbsorbingBound absorbing_lower_bound(const SkewBrace& b, const ElementSet& i,
                                     const ElementSet& j, int cap) {
  if (!is_ideal(b, i) || !is_ideal(b, j))
    throw ValidationError(ValidationError::Kind::NotAnIdeal,
                          "absorbing bound needs two ideals");
  if (cap < 1)
    throw ValidationError(ValidationError::Kind::PreconditionViolated, "cap must be positive");

  const int n = b.order();
  const int cells = n * n;
  using Fn = std::vector<std::uint8_t>;  // values on the n x n grid

  struct FnHash {
    std::size_t operator()(const Fn& f) const {
      std::size_t h = 1469598103934665603ull;
      for (auto v : f) h = (h ^ v) * 1099511628211ull;
      return h;
    }
  };

  std::vector<Fn> funcs;
  std::unordered_set<Fn, FnHash> seen;
  auto push = [&](Fn f) {
    if (static_cast<int>(funcs.size()) >= cap) return false;
    if (seen.insert(f).second) funcs.push_back(std::move(f));
    return static_cast<int>(funcs.size()) < cap;
  };

  {
    Fn p1(cells), p2(cells);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        p1[x * n + y] = static_cast<std::uint8_t>(x);
        p2[x * n + y] = static_cast<std::uint8_t>(y);
      }
    push(std::move(p1));
    push(std::move(p2));
    for (int c = 0; c < n; ++c) push(Fn(cells, static_cast<std::uint8_t>(c)));
  }

  bool cap_reached = false;
  std::size_t frontier_begin = 0;
  while (frontier_begin < funcs.size() && !cap_reached) {
    const std::size_t frontier_end = funcs.size();
    for (std::size_t a = frontier_begin; a < frontier_end && !cap_reached; ++a) {
      Fn un(cells), ba(cells);
      for (int c = 0; c < cells; ++c) {
        un[c] = static_cast<std::uint8_t>(b.neg(funcs[a][c]));
        ba[c] = static_cast<std::uint8_t>(b.bar(funcs[a][c]));
      }
      if (!push(std::move(un)) || !push(std::move(ba))) {
        cap_reached = true;
        break;
      }
      for (std::size_t o = 0; o < frontier_end && !cap_reached; ++o) {
        // Combine the frontier with everything older plus itself, both ways.
        if (o >= frontier_begin && o > a) continue;
        for (const bool flip : {false, true}) {
          const Fn& f = flip ? funcs[o] : funcs[a];
          const Fn& g = flip ? funcs[a] : funcs[o];
          Fn add(cells), circ(cells);
          for (int c = 0; c < cells; ++c) {
            add[c] = static_cast<std::uint8_t>(b.add(f[c], g[c]));
            circ[c] = static_cast<std::uint8_t>(b.circ(f[c], g[c]));
          }
          if (!push(std::move(add)) || !push(std::move(circ))) {
            cap_reached = true;
            break;
          }
        }
      }
    }
    frontier_begin = frontier_end;
  }

  ElementSet values(n);
  values.insert(0);
  for (const Fn& f : funcs) {
    bool absorbing = true;
    for (int x = 0; x < n && absorbing; ++x)
      absorbing = f[x * n] == 0 && f[x] == 0;
    if (!absorbing) continue;
    for (int a : i.members())
      for (int c : j.members()) values.insert(f[a * n + c]);
  }

  return AbsorbingBound{ideal_closure(b, values), cap_reached,
                        static_cast<int>(funcs.size())};
}

CommutatorEqualityReport conjecture_commutator_equality(CommutatorOracle& oracle) {
  const SkewBrace& b = oracle.brace();
  const std::vector<ElementSet> ideals = all_ideals(b);
  CommutatorEqualityReport report;

  // The commutator and the generated ideal are both symmetric, so compute
  // per unordered pair and emit both orders.
  std::vector<std::vector<int>> done(ideals.size(), std::vector<int>(ideals.size(), -1));
  std::vector<CommutatorEqualityReport::Entry> cache;

  for (std::size_t a = 0; a < ideals.size(); ++a)
    for (std::size_t c = 0; c <= a; ++c) {
      const ElementSet& lhs = ideals[a];
      const ElementSet& rhs = ideals[c];

      ElementSet raw(b.order());
      const ElementSet ij = star_product(b, lhs, rhs);
      const ElementSet ji = star_product(b, rhs, lhs);
      const ElementSet comm = group_commutator(b.add_group(), lhs, rhs);
      for (int u : ij.members())
        for (int v : ji.members())
          for (int w : comm.members()) raw.insert(b.add(b.add(u, v), w));

      CommutatorEqualityReport::Entry entry;
      entry.lhs = lhs;
      entry.rhs = rhs;
      entry.generated = ideal_closure(b, raw);
      entry.commutator = oracle.of(lhs, rhs);
      entry.raw_set_is_ideal = is_ideal(b, raw);
      entry.equal = entry.generated == entry.commutator;

      if (!entry.generated.subset_of(entry.commutator))
        throw InternalInconsistency("generated lower bound escapes the commutator for " +
                                    lhs.to_string() + ", " + rhs.to_string());

      done[a][c] = static_cast<int>(cache.size());
      cache.push_back(std::move(entry));
    }

  for (std::size_t a = 0; a < ideals.size(); ++a)
    for (std::size_t c = 0; c < ideals.size(); ++c) {
      CommutatorEqualityReport::Entry entry = cache[done[std::max(a, c)][std::min(a, c)]];
      entry.lhs = ideals[a];
      entry.rhs = ideals[c];
      report.equality_everywhere = report.equality_everywhere && entry.equal;
      report.raw_ideal_everywhere = report.raw_ideal_everywhere && entry.raw_set_is_ideal;
      report.entries.push_back(std::move(entry));
    }

  return report;
}

CommutatorEqualityReport conjecture_commutator_equality(const SkewBrace& b) {
  CommutatorOracle oracle(b);
  return conjecture_commutator_equality(oracle);
}

ElementSet largest_central_ideal(CommutatorOracle& oracle) {
  const SkewBrace& b = oracle.brace();
  ElementSet join(b.order());
  join.insert(0);
  for (const ElementSet& ideal : all_ideals(b))
    if (is_central_ideal(oracle, ideal)) join = join.unite(ideal);
  join = ideal_closure(b, join);

  if (join != brace_center(b))
    throw InternalInconsistency("largest central ideal " + join.to_string() +
                                " differs from the center");
  return join;
}

ElementSet largest_central_ideal(const SkewBrace& b) {
  CommutatorOracle oracle(b);
  return largest_central_ideal(oracle);
}

}  // namespace skewbrace
