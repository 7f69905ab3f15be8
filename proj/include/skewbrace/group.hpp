#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewbrace/errors.hpp"

namespace skewbrace {

// Elements are indices 0..order-1 and index 0 is always the identity.
// Everything here is exhaustive, so orders above kMaxOrder are rejected
// up front.
inline constexpr int kMaxOrder = 64;

// A subset of a carrier of at most kMaxOrder elements, stored as a bitmask.
class ElementSet {
public:
  ElementSet() = default;

  explicit ElementSet(int parent_order) : parent_order_(parent_order) {}

  static ElementSet empty(int parent_order) { return ElementSet(parent_order); }

  static ElementSet full(int parent_order) {
    ElementSet s(parent_order);
    s.bits_ = (parent_order >= kMaxOrder) ? ~std::uint64_t{0}
                                          : ((std::uint64_t{1} << parent_order) - 1);
    return s;
  }

  static ElementSet single(int parent_order, int x) {
    ElementSet s(parent_order);
    s.insert(x);
    return s;
  }

  static ElementSet of(int parent_order, std::span<const int> members) {
    ElementSet s(parent_order);
    for (int x : members) s.insert(x);
    return s;
  }

  static ElementSet of(int parent_order, std::initializer_list<int> members) {
    ElementSet s(parent_order);
    for (int x : members) s.insert(x);
    return s;
  }

  int parent_order() const noexcept { return parent_order_; }

  bool contains(int x) const { return (bits_ >> x) & 1u; }

  void insert(int x) { bits_ |= std::uint64_t{1} << x; }

  int size() const { return __builtin_popcountll(bits_); }

  bool is_empty() const noexcept { return bits_ == 0; }

  std::vector<int> members() const;

  bool subset_of(const ElementSet& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  ElementSet intersect(const ElementSet& other) const {
    ElementSet s(parent_order_);
    s.bits_ = bits_ & other.bits_;
    return s;
  }

  ElementSet unite(const ElementSet& other) const {
    ElementSet s(parent_order_);
    s.bits_ = bits_ | other.bits_;
    return s;
  }

  std::uint64_t mask() const noexcept { return bits_; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.parent_order_ == b.parent_order_ && a.bits_ == b.bits_;
  }

  friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }

  // Orders sets by size, then by mask; used for canonical listings.
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits_ < b.bits_;
  }

  std::string to_string() const;

private:
  int parent_order_ = 0;
  std::uint64_t bits_ = 0;
};

// A finite group given by its full Cayley table. Instances only come out of
// make_group and are therefore always valid: associative, identity at 0,
// two-sided inverses.
class FiniteGroup {
public:
  int order() const noexcept { return order_; }

  int op(int a, int b) const { return op_[a * order_ + b]; }

  int inv(int a) const { return inv_[a]; }

  const std::vector<int>& table() const noexcept { return op_; }

  bool is_abelian() const;

  int element_order(int a) const;

  ElementSet carrier() const { return ElementSet::full(order_); }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.op_ == b.op_;
  }

private:
  FiniteGroup(int order, std::vector<int> op, std::vector<int> inv)
      : order_(order), op_(std::move(op)), inv_(std::move(inv)) {}

  friend FiniteGroup validated_group(int order, std::vector<int> op);

  int order_ = 0;
  std::vector<int> op_;
  std::vector<int> inv_;
};

// Validates a flat row-major table whose identity must already sit at 0.
// The constructions use this directly; external tables go through
// make_group, which relabels first.
FiniteGroup validated_group(int order, std::vector<int> op);

struct MadeGroup {
  FiniteGroup group;
  // relabeling[old_index] = new_index; identity permutation when the input
  // table already had its identity at 0.
  std::vector<int> relabeling;
};

// Validates a raw table, relocating the identity to index 0 if necessary.
// Throws ValidationError (NotAssociative / NoIdentity / NoInverse / TooLarge
// / GroupInvalid) naming a witness where one exists.
MadeGroup make_group(const std::vector<std::vector<int>>& table);
MadeGroup make_group_flat(int order, std::span<const int> table);

// Smallest subgroup containing gens.
ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& gens);

bool is_subgroup(const FiniteGroup& g, const ElementSet& s);

// Throws NotASubgroup when s fails the subgroup check.
bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s);

struct QuotientGroup {
  FiniteGroup group;
  // projection[x] = coset index of x; cosets are numbered by ascending least
  // member, so the coset of 0 is 0.
  std::vector<int> projection;
};

QuotientGroup quotient_group(const FiniteGroup& g, const ElementSet& normal);

// Subgroup generated by { -s-t+s+t : s in S, t in T }.
ElementSet group_commutator(const FiniteGroup& g, const ElementSet& s, const ElementSet& t);

// Least c with the lower central series of g trivial after c steps, or
// nullopt when the series stabilizes above the identity.
std::optional<int> group_nilpotency_class(const FiniteGroup& g);

}  // namespace skewbrace
