#include "skewbrace/enumeration.hpp"

#include <algorithm>
#include <map>

namespace skewbrace {

namespace {

// Generating sequence of g under its single operation, greedy by least index.
std::vector<int> group_generators(const FiniteGroup& g) {
  std::vector<int> gens;
  ElementSet closed = subgroup_closure(g, ElementSet(g.order()));
  while (closed.size() < g.order()) {
    for (int x = 0; x < g.order(); ++x)
      if (!closed.contains(x)) {
        gens.push_back(x);
        break;
      }
    closed = subgroup_closure(g, ElementSet::of(g.order(), gens));
  }
  return gens;
}

bool extend_endomorphism(const FiniteGroup& g, std::vector<int>& img, std::vector<int>& known,
                         int x, int y) {
  if (img[x] != -1) return img[x] == y;
  if (g.element_order(x) != g.element_order(y)) return false;
  img[x] = y;
  known.push_back(x);
  for (std::size_t i = 0; i < known.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (const bool flip : {false, true}) {
        const int u = flip ? known[j] : known[i];
        const int v = flip ? known[i] : known[j];
        const int w = g.op(u, v), iw = g.op(img[u], img[v]);
        if (img[w] != -1) {
          if (img[w] != iw) return false;
        } else {
          if (g.element_order(w) != g.element_order(iw)) return false;
          img[w] = iw;
          known.push_back(w);
        }
      }
  return true;
}

void automorphism_search(const FiniteGroup& g, const std::vector<int>& gens, std::size_t gi,
                         std::vector<int> img, std::vector<int> known,
                         std::vector<std::vector<int>>& out) {
  while (gi < gens.size() && img[gens[gi]] != -1) ++gi;
  if (gi == gens.size()) {
    // Total by construction; keep it only if bijective.
    std::vector<bool> hit(g.order(), false);
    for (int v : img) {
      if (v < 0 || hit[v]) return;
      hit[v] = true;
    }
    out.push_back(std::move(img));
    return;
  }
  for (int y = 0; y < g.order(); ++y) {
    std::vector<int> img2 = img, known2 = known;
    if (extend_endomorphism(g, img2, known2, gens[gi], y))
      automorphism_search(g, gens, gi + 1, std::move(img2), std::move(known2), out);
  }
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const FiniteGroup& g, int max_order) {
  if (g.order() > max_order)
    throw ValidationError(ValidationError::Kind::TooLarge,
                          "automorphism search capped at order " + std::to_string(max_order));

  std::vector<int> img(g.order(), -1), known;
  extend_endomorphism(g, img, known, 0, 0);

  std::vector<std::vector<int>> out;
  automorphism_search(g, group_generators(g), 0, std::move(img), std::move(known), out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct LambdaSearch {
  const FiniteGroup& g;
  const std::vector<std::vector<int>>& auts;
  std::map<std::vector<int>, int> aut_index;
  std::vector<std::vector<int>> compose;  // compose[a][b] = index of auts[a] o auts[b]
  std::vector<SkewBrace> found;

  explicit LambdaSearch(const FiniteGroup& group, const std::vector<std::vector<int>>& a)
      : g(group), auts(a) {
    for (int i = 0; i < static_cast<int>(auts.size()); ++i) aut_index[auts[i]] = i;
    compose.assign(auts.size(), std::vector<int>(auts.size()));
    std::vector<int> buffer(g.order());
    for (std::size_t x = 0; x < auts.size(); ++x)
      for (std::size_t y = 0; y < auts.size(); ++y) {
        for (int e = 0; e < g.order(); ++e) buffer[e] = auts[x][auts[y][e]];
        compose[x][y] = aut_index.at(buffer);
      }
  }

  // lam[x + lam_x(y)] must equal lam_x o lam_y for all assigned pairs;
  // unassigned targets are forced.
  bool propagate(std::vector<int>& lam, std::vector<int>& assigned) {
    for (std::size_t i = 0; i < assigned.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        for (const bool flip : {false, true}) {
          const int x = flip ? assigned[j] : assigned[i];
          const int y = flip ? assigned[i] : assigned[j];
          const int z = g.op(x, auts[lam[x]][y]);
          const int need = compose[lam[x]][lam[y]];
          if (lam[z] == -1) {
            lam[z] = need;
            assigned.push_back(z);
          } else if (lam[z] != need) {
            return false;
          }
        }
    return true;
  }

  void search(std::vector<int> lam, std::vector<int> assigned) {
    int next = -1;
    for (int x = 0; x < g.order(); ++x)
      if (lam[x] == -1) {
        next = x;
        break;
      }
    if (next == -1) {
      emit(lam);
      return;
    }
    for (std::size_t a = 0; a < auts.size(); ++a) {
      std::vector<int> lam2 = lam, assigned2 = assigned;
      lam2[next] = static_cast<int>(a);
      assigned2.push_back(next);
      if (propagate(lam2, assigned2)) search(std::move(lam2), std::move(assigned2));
    }
  }

  void emit(const std::vector<int>& lam) {
    const int n = g.order();
    std::vector<int> circ(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) circ[x * n + y] = g.op(x, auts[lam[x]][y]);
    // The translation law makes this a brace; failing to validate would
    // contradict it.
    try {
      found.push_back(make_brace(g, validated_group(n, std::move(circ))));
    } catch (const ValidationError& e) {
      throw InternalInconsistency(std::string("lambda search emitted a non-brace: ") +
                                  e.what());
    }
  }
};

}  // namespace

std::vector<std::vector<int>> all_group_tables(int n) {
  if (n > 5)
    throw ValidationError(ValidationError::Kind::TooLarge,
                          "group table scan capped at order 5");
  std::vector<std::vector<int>> out;
  std::vector<int> table(n * n, -1);
  for (int i = 0; i < n; ++i) table[i] = table[i * n] = i;

  // Cells (row, col) with row, col >= 1 in row-major order.
  struct Rec {
    int n;
    std::vector<int>& table;
    std::vector<std::vector<int>>& out;

    void fill(int cell) {
      const int total = n * n;
      while (cell < total && table[cell] != -1) ++cell;
      if (cell == total) {
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
              if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]]) return;
        out.push_back(table);
        return;
      }
      const int row = cell / n, col = cell % n;
      for (int v = 0; v < n; ++v) {
        bool clash = false;
        for (int i = 0; i < n && !clash; ++i)
          clash = table[row * n + i] == v || table[i * n + col] == v;
        if (clash) continue;
        table[cell] = v;
        fill(cell + 1);
        table[cell] = -1;
      }
    }
  } rec{n, table, out};

  rec.fill(0);
  std::sort(out.begin(), out.end());
  return out;
}

BraceFamily enumerate_braces_on(const FiniteGroup& g, int max_order) {
  if (g.order() > max_order)
    throw ValidationError(ValidationError::Kind::TooLarge,
                          "exhaustive brace enumeration capped at order " +
                              std::to_string(max_order));

  const auto auts = automorphisms(g, std::max(max_order, g.order()));
  LambdaSearch searcher(g, auts);

  const int id_index = [&] {
    std::vector<int> identity(g.order());
    for (int i = 0; i < g.order(); ++i) identity[i] = i;
    return searcher.aut_index.at(identity);
  }();

  std::vector<int> lam(g.order(), -1), assigned;
  lam[0] = id_index;  // lambda at the neutral element is forced
  assigned.push_back(0);
  searcher.propagate(lam, assigned);
  searcher.search(std::move(lam), std::move(assigned));

  std::sort(searcher.found.begin(), searcher.found.end(),
            [](const SkewBrace& a, const SkewBrace& b) {
              return a.circ_group().table() < b.circ_group().table();
            });

  if (g.order() <= 4) {
    // Independent route: every group table on the carrier, filtered by the
    // compatibility law against g.
    std::vector<std::vector<int>> expected;
    for (const auto& circ : all_group_tables(g.order())) {
      const int n = g.order();
      bool brace = true;
      for (int x = 0; x < n && brace; ++x)
        for (int y = 0; y < n && brace; ++y)
          for (int z = 0; z < n; ++z) {
            const int lhs = circ[x * n + g.op(y, z)];
            const int rhs = g.op(g.op(circ[x * n + y], g.inv(x)), circ[x * n + z]);
            if (lhs != rhs) {
              brace = false;
              break;
            }
          }
      if (brace) expected.push_back(circ);
    }
    std::vector<std::vector<int>> got;
    for (const auto& b : searcher.found) got.push_back(b.circ_group().table());
    if (got != expected)
      throw InternalInconsistency("lambda enumeration disagrees with the table scan on " +
                                  std::to_string(g.order()) + " elements");
  }

  return BraceFamily{g, std::move(searcher.found), {}, {}};
}

BraceFamily classify_up_to_iso(BraceFamily family) {
  const int count = static_cast<int>(family.braces.size());
  family.class_of.assign(count, -1);
  std::vector<int> reps;

  for (int i = 0; i < count; ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size() && !placed; ++c) {
      if (braces_isomorphic(family.braces[i], family.braces[reps[c]])) {
        family.class_of[i] = static_cast<int>(c);
        placed = true;
      }
    }
    if (!placed) {
      family.class_of[i] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  }

  // Representative of each class = least circle table inside the class.
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (int i = 0; i < count; ++i)
      if (family.class_of[i] == static_cast<int>(c) &&
          family.braces[i].circ_group().table() <
              family.braces[reps[c]].circ_group().table())
        reps[c] = i;

  family.iso_classes = std::move(reps);
  return family;
}

}  // namespace skewbrace
