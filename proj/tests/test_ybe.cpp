#include <doctest.h>

#include <array>

#include "corpus.hpp"
#include "skewbrace/ybe.hpp"

using namespace skewbrace;
using testsupport::make_b4;
using testsupport::make_ops3;

TEST_CASE("the flip solves the braid relation on any set") {
  for (int n : {1, 2, 5}) {
    const Solution flip = flip_solution(n);
    CHECK(check_ybe(flip).holds);
    const DegeneracyCheck deg = check_nondegenerate_involutive(flip);
    CHECK(deg.nondegenerate);
    CHECK(deg.involutive);
  }
}

TEST_CASE("a shifted flip still solves the braid relation") {
  // r(x, y) = (y, x+1): both sides of the relation come out as
  // (z, y+1, x+2), so this is a (non-involutive) solution.
  for (int n : {2, 3, 5}) {
    std::vector<std::pair<int, int>> table(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) table[x * n + y] = {y, (x + 1) % n};
    const Solution shifted = make_solution(n, std::move(table));
    CHECK(check_ybe(shifted).holds);
    const DegeneracyCheck deg = check_nondegenerate_involutive(shifted);
    CHECK(deg.nondegenerate);
    CHECK_FALSE(deg.involutive);
  }
}

TEST_CASE("a genuinely broken map fails with a witness") {
  // r(x, y) = (x+y, x) is non-degenerate but the braid relation compares
  // x+y+z against 2x+y+z in the first slot.
  for (int n : {2, 3, 4}) {
    std::vector<std::pair<int, int>> table(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) table[x * n + y] = {(x + y) % n, x};
    const Solution broken = make_solution(n, std::move(table));
    CHECK(check_nondegenerate_involutive(broken).nondegenerate);
    const BraidCheck check = check_ybe(broken);
    REQUIRE_FALSE(check.holds);

    // The reported witness is a real counterexample.
    const auto [x, y, z] = check.witness;
    auto r = [&](int a, int b) { return std::make_pair((a + b) % n, a); };
    auto left = [&](std::array<int, 3> t) {
      const auto [a, b] = r(t[0], t[1]);
      return std::array<int, 3>{a, b, t[2]};
    };
    auto right = [&](std::array<int, 3> t) {
      const auto [a, b] = r(t[1], t[2]);
      return std::array<int, 3>{t[0], a, b};
    };
    CHECK(right(left(right({x, y, z}))) != left(right(left({x, y, z}))));
  }
}

TEST_CASE("constant projections are degenerate and non-involutive") {
  std::vector<std::pair<int, int>> table(4);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) table[x * 2 + y] = {0, x};
  const Solution s = make_solution(2, std::move(table));
  const DegeneracyCheck deg = check_nondegenerate_involutive(s);
  CHECK_FALSE(deg.nondegenerate);
  CHECK_FALSE(deg.involutive);
}

TEST_CASE("canonical solution of a trivial abelian brace is the flip") {
  const Solution s = canonical_solution(trivial_brace(cyclic_group(4)));
  const Solution flip = flip_solution(4);
  CHECK(s.map == flip.map);
}

TEST_CASE("canonical solutions of the benchmark braces") {
  const Solution b4 = canonical_solution(make_b4());
  const DegeneracyCheck deg4 = check_nondegenerate_involutive(b4);
  CHECK(deg4.nondegenerate);
  CHECK(deg4.involutive);

  const Solution ops3 = canonical_solution(make_ops3());
  const DegeneracyCheck deg3 = check_nondegenerate_involutive(ops3);
  CHECK(deg3.nondegenerate);
  CHECK_FALSE(deg3.involutive);
}

TEST_CASE("canonical solutions hold on the named corpus") {
  for (const auto& [name, b] : testsupport::named_corpus()) {
    CAPTURE(name);
    const Solution s = canonical_solution(b);
    CHECK(check_ybe(s).holds);
    CHECK(check_nondegenerate_involutive(s).nondegenerate);
  }
}

TEST_CASE("observed: abelian additive groups give involutive solutions") {
  // Recorded as data over the corpus, not assumed anywhere in the library.
  for (const auto& [name, b] : testsupport::full_corpus()) {
    if (!b.add_group().is_abelian()) continue;
    CAPTURE(name);
    CHECK(check_nondegenerate_involutive(canonical_solution(b)).involutive);
  }
}

TEST_CASE("corrupting any single entry breaks non-degeneracy") {
  const Solution s = canonical_solution(make_b4());
  for (int cell : {0, 5, 13}) {
    Solution broken = s;
    auto& entry = broken.map[cell];
    entry.first = (entry.first + 1) % broken.size;
    broken = make_solution(broken.size, broken.map);
    CHECK_FALSE(check_nondegenerate_involutive(broken).nondegenerate);
  }
}

TEST_CASE("malformed solution tables are rejected") {
  CHECK_THROWS_AS(make_solution(2, {{0, 0}}), ValidationError);
  CHECK_THROWS_AS(make_solution(2, {{0, 0}, {0, 2}, {1, 0}, {1, 1}}), ValidationError);
}
