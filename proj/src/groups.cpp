#include "skewbrace/groups.hpp"

#include <array>
#include <algorithm>

namespace skewbrace {

namespace {

FiniteGroup from_flat(int n, std::vector<int> flat) {
  return make_group_flat(n, flat).group;
}

}  // namespace

FiniteGroup cyclic_group(int n) {
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return from_flat(n, std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ga = a / nh, ha = a % nh, gb = b / nh, hb = b % nh;
      t[a * n + b] = g.op(ga, gb) * nh + h.op(ha, hb);
    }
  return from_flat(n, std::move(t));
}

FiniteGroup symmetric3() {
  // All permutations of (0,1,2), lexicographic, so index 0 is the identity.
  static const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
  }};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    return -1;
  };
  std::vector<int> t(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c;
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a * 6 + b] = index_of(c);
    }
  return from_flat(6, std::move(t));
}

FiniteGroup dihedral_group(int n) {
  // Realized on n points: rotation r(i) = i+1, reflection s(i) = -i.
  const int order = 2 * n;
  std::vector<std::vector<int>> perms(order, std::vector<int>(n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      perms[k][i] = (i + k) % n;            // r^k
      perms[n + k][i] = (n - i + k) % n;    // s r^k
    }
  auto index_of = [&](const std::vector<int>& p) {
    for (int i = 0; i < order; ++i)
      if (perms[i] == p) return i;
    return -1;
  };
  std::vector<int> t(order * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a * order + b] = index_of(c);
    }
  return from_flat(order, std::move(t));
}

FiniteGroup quaternion8() {
  // Element 2u + s encodes (-1)^s * basis[u] with basis 1, i, j, k.
  // basis[u] * basis[v] = sign * basis[axis]:
  static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{+1, +1, +1, +1},
                                 {+1, -1, +1, -1},
                                 {+1, -1, -1, +1},
                                 {+1, +1, -1, -1}};
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
      const int u = axis[ua][ub];
      const int s = (sa + sb + (sign[ua][ub] < 0 ? 1 : 0)) % 2;
      t[a * 8 + b] = 2 * u + s;
    }
  return from_flat(8, std::move(t));
}

}  // namespace skewbrace
