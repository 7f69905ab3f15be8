#include "skewbrace/ybe.hpp"

namespace skewbrace {

Solution make_solution(int n, std::vector<std::pair<int, int>> table) {
  if (n <= 0 || static_cast<int>(table.size()) != n * n)
    throw ValidationError(ValidationError::Kind::PreconditionViolated,
                          "solution table is not n x n");
  for (const auto& [a, b] : table)
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ValidationError(ValidationError::Kind::PreconditionViolated,
                            "solution entry out of range");

  Solution s;
  s.size = n;
  s.map = std::move(table);
  s.sigma.resize(n * n);
  s.tau.resize(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      s.sigma[x * n + y] = s.map[x * n + y].first;
      s.tau[y * n + x] = s.map[x * n + y].second;
    }
  return s;
}

Solution flip_solution(int n) {
  std::vector<std::pair<int, int>> table(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x * n + y] = {y, x};
  return make_solution(n, std::move(table));
}

namespace {

using Triple = std::array<int, 3>;

Triple apply_left(const Solution& s, const Triple& t) {  // r x id
  const auto [a, b] = s.apply(t[0], t[1]);
  return {a, b, t[2]};
}

Triple apply_right(const Solution& s, const Triple& t) {  // id x r
  const auto [a, b] = s.apply(t[1], t[2]);
  return {t[0], a, b};
}

}  // namespace

BraidCheck check_ybe(const Solution& s) {
  for (int x = 0; x < s.size; ++x)
    for (int y = 0; y < s.size; ++y)
      for (int z = 0; z < s.size; ++z) {
        const Triple t{x, y, z};
        const Triple lhs = apply_right(s, apply_left(s, apply_right(s, t)));
        const Triple rhs = apply_left(s, apply_right(s, apply_left(s, t)));
        if (lhs != rhs) return BraidCheck{false, t};
      }
  return BraidCheck{};
}

DegeneracyCheck check_nondegenerate_involutive(const Solution& s) {
  DegeneracyCheck result;
  const int n = s.size;

  for (int x = 0; x < n && result.nondegenerate; ++x) {
    std::vector<bool> seen_sigma(n, false), seen_tau(n, false);
    for (int y = 0; y < n; ++y) {
      seen_sigma[s.sigma[x * n + y]] = true;
      seen_tau[s.tau[x * n + y]] = true;
    }
    for (int y = 0; y < n; ++y) {
      if (!seen_sigma[y]) {
        result.nondegenerate = false;
        result.witness = "sigma_" + std::to_string(x) + " is not a bijection";
        break;
      }
      if (!seen_tau[y]) {
        result.nondegenerate = false;
        result.witness = "tau_" + std::to_string(x) + " is not a bijection";
        break;
      }
    }
  }

  for (int x = 0; x < n && result.involutive; ++x)
    for (int y = 0; y < n; ++y) {
      const auto [a, b] = s.apply(x, y);
      if (s.apply(a, b) != std::make_pair(x, y)) {
        result.involutive = false;
        if (result.witness.empty())
          result.witness = "r^2 moves (" + std::to_string(x) + ", " + std::to_string(y) + ")";
        break;
      }
    }

  return result;
}

Solution canonical_solution(const SkewBrace& b) {
  const int n = b.order();
  std::vector<std::pair<int, int>> table(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int u = b.lambda(x, y);
      table[x * n + y] = {u, b.circ(b.circ(b.bar(u), x), y)};
    }
  Solution s = make_solution(n, std::move(table));

  if (!check_ybe(s).holds)
    throw InternalInconsistency("canonical solution violates the braid relation");
  if (!check_nondegenerate_involutive(s).nondegenerate)
    throw InternalInconsistency("canonical solution is degenerate");
  return s;
}

}  // namespace skewbrace
