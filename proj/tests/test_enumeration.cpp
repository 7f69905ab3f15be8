#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "corpus.hpp"
#include "skewbrace/enumeration.hpp"

using namespace skewbrace;

namespace {

// Test-local re-derivation of every group table with identity 0, written
// independently of the library's scanner: enumerate all fillings row by
// row and keep the associative Latin squares.
std::vector<std::vector<int>> brute_force_group_tables(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(n * n, -1);
  for (int i = 0; i < n; ++i) {
    t[i] = i;
    t[i * n] = i;
  }

  auto associative = [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return false;
    return true;
  };

  std::function<void(int)> go = [&](int cell) {
    while (cell < n * n && t[cell] != -1) ++cell;
    if (cell == n * n) {
      if (associative()) out.push_back(t);
      return;
    }
    const int row = cell / n, col = cell % n;
    for (int v = 0; v < n; ++v) {
      bool used = false;
      for (int i = 0; i < n && !used; ++i)
        used = t[row * n + i] == v || t[i * n + col] == v;
      if (used) continue;
      t[cell] = v;
      go(cell + 1);
      t[cell] = -1;
    }
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("automorphism groups of the small groups") {
  CHECK(automorphisms(cyclic_group(4)).size() == 2);
  CHECK(automorphisms(direct_product(cyclic_group(2), cyclic_group(2))).size() == 6);
  CHECK(automorphisms(symmetric3()).size() == 6);
  CHECK(automorphisms(cyclic_group(1)).size() == 1);

  // Every returned map really is a bijective homomorphism.
  const FiniteGroup s3 = symmetric3();
  for (const auto& f : automorphisms(s3)) {
    std::set<int> image(f.begin(), f.end());
    CHECK(image.size() == 6);
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) CHECK(f[s3.op(a, b)] == s3.op(f[a], f[b]));
  }

  CHECK_THROWS_AS(automorphisms(dihedral_group(7)), ValidationError);
}

TEST_CASE("enumeration on the two-element group finds only the trivial brace") {
  const BraceFamily family = enumerate_braces_on(cyclic_group(2));
  REQUIRE(family.braces.size() == 1);
  CHECK(family.braces[0].add_group() == family.braces[0].circ_group());
}

TEST_CASE("enumeration agrees with the brute-force table scan up to order 4") {
  for (int n : {1, 2, 3, 4}) {
    CAPTURE(n);
    const FiniteGroup g = cyclic_group(n);
    const BraceFamily family = enumerate_braces_on(g);

    std::vector<std::vector<int>> expected;
    for (const auto& circ : brute_force_group_tables(n)) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y)
          for (int z = 0; z < n; ++z)
            if (circ[x * n + g.op(y, z)] !=
                g.op(g.op(circ[x * n + y], g.inv(x)), circ[x * n + z])) {
              ok = false;
              break;
            }
      if (ok) expected.push_back(circ);
    }

    std::vector<std::vector<int>> got;
    for (const auto& b : family.braces) got.push_back(b.circ_group().table());
    CHECK(got == expected);
  }

  // Same cross-check on the Klein group.
  const FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
  const BraceFamily family = enumerate_braces_on(v4);
  std::vector<std::vector<int>> expected;
  for (const auto& circ : brute_force_group_tables(4)) {
    bool ok = true;
    for (int x = 0; x < 4 && ok; ++x)
      for (int y = 0; y < 4 && ok; ++y)
        for (int z = 0; z < 4; ++z)
          if (circ[x * 4 + v4.op(y, z)] !=
              v4.op(v4.op(circ[x * 4 + y], v4.inv(x)), circ[x * 4 + z])) {
            ok = false;
            break;
          }
    if (ok) expected.push_back(circ);
  }
  std::vector<std::vector<int>> got;
  for (const auto& b : family.braces) got.push_back(b.circ_group().table());
  CHECK(got == expected);
}

TEST_CASE("enumeration on Z4 and V4 finds the nontrivial structures") {
  const BraceFamily z4 = enumerate_braces_on(cyclic_group(4));
  CHECK(z4.braces.size() == 2);
  bool has_trivial = false, has_klein_circ = false;
  for (const auto& b : z4.braces) {
    if (b.add_group() == b.circ_group()) has_trivial = true;
    if (b.circ_group().element_order(1) == 2) has_klein_circ = true;
  }
  CHECK(has_trivial);
  CHECK(has_klein_circ);

  const FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
  const BraceFamily family = enumerate_braces_on(v4);
  bool has_cyclic_circ = false;
  for (const auto& b : family.braces) {
    int max_order = 0;
    for (int x = 0; x < 4; ++x) max_order = std::max(max_order, b.circ_group().element_order(x));
    if (max_order == 4) has_cyclic_circ = true;
  }
  CHECK(has_cyclic_circ);
}

TEST_CASE("classification groups relabeled copies together") {
  const FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
  BraceFamily family = enumerate_braces_on(v4);
  family = classify_up_to_iso(std::move(family));

  CHECK(family.class_of.size() == family.braces.size());
  for (int c : family.class_of) {
    CHECK(c >= 0);
    CHECK(c < static_cast<int>(family.iso_classes.size()));
  }

  // Representatives are pairwise non-isomorphic and every member matches
  // its representative.
  for (std::size_t a = 0; a < family.iso_classes.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      CHECK_FALSE(braces_isomorphic(family.braces[family.iso_classes[a]],
                                    family.braces[family.iso_classes[b]])
                      .has_value());
  for (std::size_t i = 0; i < family.braces.size(); ++i)
    CHECK(braces_isomorphic(family.braces[i],
                            family.braces[family.iso_classes[family.class_of[i]]])
              .has_value());

  // V4 carries the trivial brace plus relabelings of a single nontrivial
  // structure.
  CHECK(family.iso_classes.size() == 2);

  BraceFamily single = classify_up_to_iso(enumerate_braces_on(cyclic_group(2)));
  CHECK(single.iso_classes.size() == 1);
}

TEST_CASE("enumeration is capped") {
  CHECK_THROWS_AS(enumerate_braces_on(quaternion8(), 4), ValidationError);
}
