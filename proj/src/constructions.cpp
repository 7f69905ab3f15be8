#include "skewbrace/constructions.hpp"

#include <algorithm>

#include "skewbrace/series.hpp"

namespace skewbrace {

namespace {

void require_matrix(const std::vector<std::vector<int>>& m, int rows, int cols, int bound,
                    const char* what) {
  if (static_cast<int>(m.size()) != rows)
    throw ValidationError(ValidationError::Kind::PreconditionViolated,
                          std::string(what) + " has the wrong number of rows");
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != cols)
      throw ValidationError(ValidationError::Kind::PreconditionViolated,
                            std::string(what) + " has a row of the wrong length");
    for (int v : row)
      if (v < 0 || v >= bound)
        throw ValidationError(ValidationError::Kind::PreconditionViolated,
                              std::string(what) + " entry out of range");
  }
}

std::string pair_witness(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

SkewBrace bilinear_brace(const SkewBrace& h, const FiniteGroup& k,
                         const std::vector<std::vector<int>>& theta) {
  if (!k.is_abelian())
    throw ValidationError(ValidationError::Kind::KernelNotAbelian,
                          "the kernel group must be abelian");
  const int nh = h.order(), nk = k.order();
  require_matrix(theta, nh, nh, nk, "theta");
  if (nh * nk > kMaxOrder)
    throw ValidationError(ValidationError::Kind::TooLarge,
                          "resulting order exceeds the supported maximum");

  // theta must be additive in each slot for + and for o of H.
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b)
      for (int y = 0; y < nh; ++y) {
        if (theta[h.add(a, b)][y] != k.op(theta[a][y], theta[b][y]) ||
            theta[h.circ(a, b)][y] != k.op(theta[a][y], theta[b][y]))
          throw ValidationError(ValidationError::Kind::NotBilinear,
                                "theta not additive in its first slot at " + pair_witness(a, b));
        if (theta[y][h.add(a, b)] != k.op(theta[y][a], theta[y][b]) ||
            theta[y][h.circ(a, b)] != k.op(theta[y][a], theta[y][b]))
          throw ValidationError(ValidationError::Kind::NotBilinear,
                                "theta not additive in its second slot at " + pair_witness(a, b));
      }

  const int n = nh * nk;
  std::vector<int> add(n * n), circ(n * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const int k1 = p / nh, h1 = p % nh, k2 = q / nh, h2 = q % nh;
      add[p * n + q] = k.op(k1, k2) * nh + h.add(h1, h2);
      circ[p * n + q] = k.op(k.op(k1, k2), theta[h1][h2]) * nh + h.circ(h1, h2);
    }

  SkewBrace result =
      make_brace(validated_group(n, std::move(add)), validated_group(n, std::move(circ)));

  const DistinguishedSets sets = distinguished_sets(result);
  ElementSet kernel_slice(n);
  for (int k1 = 0; k1 < nk; ++k1) kernel_slice.insert(k1 * nh);
  ElementSet add_center(n);
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n && central; ++y)
      central = result.add(x, y) == result.add(y, x);
    if (central) add_center.insert(x);
  }
  if (!kernel_slice.subset_of(sets.lambda_kernel) || !kernel_slice.subset_of(sets.fix) ||
      !kernel_slice.subset_of(add_center) || !kernel_slice.subset_of(sets.center))
    throw InternalInconsistency("the kernel slice escapes the center of the extension");

  const auto base_class = upper_central_series(h).class_index;
  if (base_class) {
    const auto result_class = upper_central_series(result).class_index;
    if (!result_class || *result_class > *base_class + 1)
      throw InternalInconsistency("bilinear extension exceeded the class bound");
  }

  return result;
}

SkewBrace heisenberg_brace(const FiniteGroup& e, const FiniteGroup& f, const FiniteGroup& a,
                           const std::vector<std::vector<int>>& omega) {
  for (const FiniteGroup* g : {&e, &f, &a})
    if (!g->is_abelian())
      throw ValidationError(ValidationError::Kind::PreconditionViolated,
                            "all three component groups must be abelian");
  const int ne = e.order(), nf = f.order(), na = a.order();
  require_matrix(omega, ne, nf, na, "omega");
  if (ne * nf * na > kMaxOrder)
    throw ValidationError(ValidationError::Kind::TooLarge,
                          "resulting order exceeds the supported maximum");

  for (int x = 0; x < ne; ++x)
    for (int y = 0; y < ne; ++y)
      for (int v = 0; v < nf; ++v)
        if (omega[e.op(x, y)][v] != a.op(omega[x][v], omega[y][v]))
          throw ValidationError(ValidationError::Kind::NotBilinear,
                                "omega not additive in its first slot at " + pair_witness(x, y));
  for (int v = 0; v < nf; ++v)
    for (int w = 0; w < nf; ++w)
      for (int x = 0; x < ne; ++x)
        if (omega[x][f.op(v, w)] != a.op(omega[x][v], omega[x][w]))
          throw ValidationError(ValidationError::Kind::NotBilinear,
                                "omega not additive in its second slot at " + pair_witness(v, w));

  const int n = ne * nf * na;
  auto code = [&](int x, int v, int c) { return (x * nf + v) * na + c; };
  std::vector<int> add(n * n), circ(n * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const int e1 = p / (nf * na), f1 = (p / na) % nf, a1 = p % na;
      const int e2 = q / (nf * na), f2 = (q / na) % nf, a2 = q % na;
      add[p * n + q] = code(e.op(e1, e2), f.op(f1, f2), a.op(a1, a2));
      circ[p * n + q] =
          code(e.op(e1, e2), f.op(f1, f2), a.op(a.op(a1, a2), omega[e1][f2]));
    }

  SkewBrace result =
      make_brace(validated_group(n, std::move(add)), validated_group(n, std::move(circ)));

  const auto cls = upper_central_series(result).class_index;
  if (!cls || *cls > 2)
    throw InternalInconsistency("twisted product exceeded nilpotency class 2");

  return result;
}

CentralExtension extract_cocycles(const SkewBrace& b) {
  const ElementSet center = brace_center(b);
  if (center.size() == 1)
    throw ValidationError(ValidationError::Kind::TrivialCenter,
                          "the center is trivial; nothing to split off");

  const std::vector<int> kernel_members = center.members();
  const int m = static_cast<int>(kernel_members.size());
  std::vector<int> pos(b.order(), -1);
  for (int idx = 0; idx < m; ++idx) pos[kernel_members[idx]] = idx;

  std::vector<int> kernel_table(m * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      kernel_table[x * m + y] = pos[b.add(kernel_members[x], kernel_members[y])];
  FiniteGroup kernel = validated_group(m, std::move(kernel_table));

  QuotientBrace quotient = quotient_brace(b, center);
  const int q = quotient.brace.order();

  std::vector<int> transversal(q, b.order());
  for (int x = 0; x < b.order(); ++x)
    transversal[quotient.projection[x]] = std::min(transversal[quotient.projection[x]], x);

  Cocycles c;
  c.quotient_order = q;
  c.kernel_order = m;
  c.transversal = transversal;
  c.theta.assign(q * q, -1);
  c.phi.assign(q * q, -1);

  auto central_part = [&](int value) {
    if (pos[value] < 0)
      throw InternalInconsistency("cocycle value fell outside the center");
    return pos[value];
  };

  const SkewBrace& quot = quotient.brace;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      const int tx = transversal[x], ty = transversal[y];
      c.theta[x * q + y] = central_part(
          b.add(b.add(b.neg(transversal[quot.add(x, y)]), tx), ty));
      c.phi[x * q + y] = central_part(
          b.add(b.neg(transversal[quot.circ(x, y)]), b.circ(tx, ty)));
    }

  for (int x = 0; x < q; ++x)
    if (c.theta_at(0, x) != 0 || c.theta_at(x, 0) != 0 || c.phi_at(0, x) != 0 ||
        c.phi_at(x, 0) != 0)
      throw InternalInconsistency("extracted cocycles are not normalized");

  // Rebuilding re-validates the cocycle identities and the compatibility
  // equation on every triple.
  const SkewBrace rebuilt = rebuild_from_cocycles(quot, kernel, c);
  if (!braces_isomorphic(rebuilt, b))
    throw InternalInconsistency("central extension round trip lost the brace");

  return CentralExtension{std::move(quotient.brace), std::move(kernel), std::move(c)};
}

SkewBrace rebuild_from_cocycles(const SkewBrace& q, const FiniteGroup& k, const Cocycles& c) {
  const int nq = q.order(), m = k.order();
  if (c.quotient_order != nq || c.kernel_order != m ||
      static_cast<int>(c.theta.size()) != nq * nq ||
      static_cast<int>(c.phi.size()) != nq * nq)
    throw ValidationError(ValidationError::Kind::PreconditionViolated,
                          "cocycle tables do not match the quotient and kernel sizes");
  if (!k.is_abelian())
    throw ValidationError(ValidationError::Kind::KernelNotAbelian,
                          "the kernel group must be abelian");
  for (int v : c.theta)
    if (v < 0 || v >= m)
      throw ValidationError(ValidationError::Kind::PreconditionViolated,
                            "theta entry out of range");
  for (int v : c.phi)
    if (v < 0 || v >= m)
      throw ValidationError(ValidationError::Kind::PreconditionViolated,
                            "phi entry out of range");
  if (nq * m > kMaxOrder)
    throw ValidationError(ValidationError::Kind::TooLarge,
                          "resulting order exceeds the supported maximum");

  auto sub = [&](int a, int b2) { return k.op(a, k.inv(b2)); };

  for (int x = 0; x < nq; ++x)
    if (c.theta_at(0, x) != 0 || c.theta_at(x, 0) != 0 || c.phi_at(0, x) != 0 ||
        c.phi_at(x, 0) != 0)
      throw ValidationError(ValidationError::Kind::CocycleIdentityFails,
                            "cocycles are not normalized at element " + std::to_string(x));

  for (int x = 0; x < nq; ++x)
    for (int y = 0; y < nq; ++y)
      for (int z = 0; z < nq; ++z) {
        if (k.op(c.theta_at(x, y), c.theta_at(q.add(x, y), z)) !=
            k.op(c.theta_at(y, z), c.theta_at(x, q.add(y, z))))
          throw ValidationError(ValidationError::Kind::CocycleIdentityFails,
                                "theta fails the cocycle identity at (" + std::to_string(x) +
                                    ", " + std::to_string(y) + ", " + std::to_string(z) + ")");
        if (k.op(c.phi_at(x, y), c.phi_at(q.circ(x, y), z)) !=
            k.op(c.phi_at(y, z), c.phi_at(x, q.circ(y, z))))
          throw ValidationError(ValidationError::Kind::CocycleIdentityFails,
                                "phi fails the cocycle identity at (" + std::to_string(x) +
                                    ", " + std::to_string(y) + ", " + std::to_string(z) + ")");

        // phi(x, y+z) - phi(x,y) - phi(x,z) =
        //   theta((x o y) - x, x o z) + theta(x o y, -x) - theta(x, -x) - theta(y, z)
        const int lhs = sub(sub(c.phi_at(x, q.add(y, z)), c.phi_at(x, y)), c.phi_at(x, z));
        const int rhs = sub(sub(k.op(c.theta_at(q.add(q.circ(x, y), q.neg(x)), q.circ(x, z)),
                                     c.theta_at(q.circ(x, y), q.neg(x))),
                                c.theta_at(x, q.neg(x))),
                            c.theta_at(y, z));
        if (lhs != rhs)
          throw ValidationError(ValidationError::Kind::CompatibilityFails,
                                "cocycles are incompatible at (" + std::to_string(x) + ", " +
                                    std::to_string(y) + ", " + std::to_string(z) + ")");
      }

  const int n = nq * m;
  std::vector<int> add(n * n), circ(n * n);
  for (int p = 0; p < n; ++p)
    for (int r = 0; r < n; ++r) {
      const int x = p / m, a = p % m, y = r / m, b2 = r % m;
      add[p * n + r] = q.add(x, y) * m + k.op(k.op(a, b2), c.theta_at(x, y));
      circ[p * n + r] = q.circ(x, y) * m + k.op(k.op(a, b2), c.phi_at(x, y));
    }

  SkewBrace result =
      make_brace(validated_group(n, std::move(add)), validated_group(n, std::move(circ)));

  ElementSet kernel_slice(n);
  for (int a = 0; a < m; ++a) kernel_slice.insert(a);
  if (!is_ideal(result, kernel_slice) ||
      !kernel_slice.subset_of(brace_center(result)))
    throw InternalInconsistency("rebuilt kernel slice is not a central ideal");

  return result;
}

namespace {

struct IsoState {
  std::vector<int> img, pre;
  std::vector<int> known;
};

// Extends a partial isomorphism by x -> y and closes under both operations.
bool extend(const SkewBrace& a, const SkewBrace& b, IsoState& st, int x, int y,
            const std::vector<std::pair<int, int>>& sig_a,
            const std::vector<std::pair<int, int>>& sig_b) {
  if (st.img[x] != -1) return st.img[x] == y;
  if (st.pre[y] != -1) return false;
  if (sig_a[x] != sig_b[y]) return false;
  st.img[x] = y;
  st.pre[y] = x;
  st.known.push_back(x);

  for (std::size_t i = 0; i < st.known.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const int u = st.known[i], v = st.known[j];
      const int products_a[4] = {a.add(u, v), a.add(v, u), a.circ(u, v), a.circ(v, u)};
      const int products_b[4] = {b.add(st.img[u], st.img[v]), b.add(st.img[v], st.img[u]),
                                 b.circ(st.img[u], st.img[v]), b.circ(st.img[v], st.img[u])};
      for (int t = 0; t < 4; ++t) {
        const int w = products_a[t], iw = products_b[t];
        if (st.img[w] != -1) {
          if (st.img[w] != iw) return false;
        } else {
          if (st.pre[iw] != -1 || sig_a[w] != sig_b[iw]) return false;
          st.img[w] = iw;
          st.pre[iw] = w;
          st.known.push_back(w);
        }
      }
    }
  return true;
}

bool iso_search(const SkewBrace& a, const SkewBrace& b, const std::vector<int>& gens,
                std::size_t gi, IsoState st,
                const std::vector<std::pair<int, int>>& sig_a,
                const std::vector<std::pair<int, int>>& sig_b, std::vector<int>& out) {
  while (gi < gens.size() && st.img[gens[gi]] != -1) ++gi;
  if (gi == gens.size()) {
    out = st.img;
    return true;
  }
  const int x = gens[gi];
  for (int y = 0; y < b.order(); ++y) {
    if (st.pre[y] != -1 || sig_a[x] != sig_b[y]) continue;
    IsoState next = st;
    if (extend(a, b, next, x, y, sig_a, sig_b) &&
        iso_search(a, b, gens, gi + 1, std::move(next), sig_a, sig_b, out))
      return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> braces_isomorphic(const SkewBrace& lhs, const SkewBrace& rhs) {
  const int n = lhs.order();
  if (rhs.order() != n) return std::nullopt;

  auto signature = [](const SkewBrace& b) {
    std::vector<std::pair<int, int>> sig(b.order());
    for (int x = 0; x < b.order(); ++x)
      sig[x] = {b.add_group().element_order(x), b.circ_group().element_order(x)};
    return sig;
  };
  const auto sig_a = signature(lhs), sig_b = signature(rhs);
  {
    auto sorted_a = sig_a, sorted_b = sig_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return std::nullopt;
  }

  // Greedy generating sequence under both operations.
  std::vector<int> gens;
  {
    ElementSet closed(n);
    auto closure_of = [&](const std::vector<int>& seed) {
      ElementSet s(n);
      s.insert(0);
      std::vector<int> queue{0};
      for (int g : seed)
        if (!s.contains(g)) {
          s.insert(g);
          queue.push_back(g);
        }
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
          for (int w : {lhs.add(queue[i], queue[j]), lhs.add(queue[j], queue[i]),
                        lhs.circ(queue[i], queue[j]), lhs.circ(queue[j], queue[i])})
            if (!s.contains(w)) {
              s.insert(w);
              queue.push_back(w);
            }
      return s;
    };
    closed = closure_of(gens);
    while (closed.size() < n) {
      for (int x = 0; x < n; ++x)
        if (!closed.contains(x)) {
          gens.push_back(x);
          break;
        }
      closed = closure_of(gens);
    }
  }

  IsoState start{std::vector<int>(n, -1), std::vector<int>(n, -1), {}};
  if (!extend(lhs, rhs, start, 0, 0, sig_a, sig_b)) return std::nullopt;

  std::vector<int> out;
  if (iso_search(lhs, rhs, gens, 0, std::move(start), sig_a, sig_b, out))
    return out;
  return std::nullopt;
}

}  // namespace skewbrace
