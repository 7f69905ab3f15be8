#include "skewbrace/brace.hpp"

#include <sstream>

namespace skewbrace {

namespace {

std::string triple(int x, int y, int z) {
  std::ostringstream os;
  os << "(" << x << ", " << y << ", " << z << ")";
  return os.str();
}

}  // namespace

std::vector<int> SkewBrace::lambda_of(int x) const {
  const int n = order();
  return std::vector<int>(lambda_.begin() + x * n, lambda_.begin() + (x + 1) * n);
}

SkewBrace make_brace(const FiniteGroup& add, const FiniteGroup& circ) {
  if (add.order() != circ.order())
    throw ValidationError(ValidationError::Kind::GroupInvalid,
                          "additive and circle tables have different carriers");
  const int n = add.order();

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int lhs = circ.op(x, add.op(y, z));
        const int rhs = add.op(add.op(circ.op(x, y), add.inv(x)), circ.op(x, z));
        if (lhs != rhs)
          throw ValidationError(ValidationError::Kind::AxiomFails,
                                "compatibility law fails at " + triple(x, y, z));
      }

  std::vector<int> lambda(n * n), star(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int l = add.op(add.inv(x), circ.op(x, y));
      lambda[x * n + y] = l;
      star[x * n + y] = add.op(l, add.inv(y));
    }

  // Cross-checks; these follow from the law above, so a failure is a bug.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (lambda[x * n + add.op(y, z)] != add.op(lambda[x * n + y], lambda[x * n + z]))
          throw InternalInconsistency("lambda_" + std::to_string(x) +
                                      " is not additive at " + triple(x, y, z));
        if (lambda[circ.op(x, y) * n + z] != lambda[x * n + lambda[y * n + z]])
          throw InternalInconsistency("lambda is not multiplicative at " + triple(x, y, z));
      }

  return SkewBrace(add, circ, std::move(lambda), std::move(star));
}

SkewBrace make_brace_tables(const std::vector<std::vector<int>>& add,
                            const std::vector<std::vector<int>>& circ) {
  MadeGroup a = make_group(add);
  MadeGroup c = make_group(circ);
  if (a.group.order() != c.group.order())
    throw ValidationError(ValidationError::Kind::GroupInvalid,
                          "additive and circle tables have different carriers");
  if (a.relabeling != c.relabeling)
    throw ValidationError(ValidationError::Kind::MismatchedIdentity,
                          "the two tables do not share their identity element");
  return make_brace(a.group, c.group);
}

SkewBrace trivial_brace(const FiniteGroup& g) { return make_brace(g, g); }

SkewBrace opposite_brace(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = g.op(b, a);
  return make_brace(g, validated_group(n, std::move(t)));
}

IdentityReport verify_identities(const SkewBrace& b) {
  const int n = b.order();
  IdentityReport report;

  auto check = [&](const std::string& name, auto&& body) {
    IdentityReport::Entry entry{name, true, ""};
    body(entry);
    report.entries.push_back(std::move(entry));
  };

  check("compatibility", [&](IdentityReport::Entry& e) {
    for (int x = 0; x < n && e.passed; ++x)
      for (int y = 0; y < n && e.passed; ++y)
        for (int z = 0; z < n; ++z) {
          const int lhs = b.circ(x, b.add(y, z));
          const int rhs = b.add(b.add(b.circ(x, y), b.neg(x)), b.circ(x, z));
          if (lhs != rhs) {
            e.passed = false;
            e.witness = triple(x, y, z);
            break;
          }
        }
  });

  check("circ-over-lambda", [&](IdentityReport::Entry& e) {
    // x o (y + z) = (x o y) + lambda_x(z)
    for (int x = 0; x < n && e.passed; ++x)
      for (int y = 0; y < n && e.passed; ++y)
        for (int z = 0; z < n; ++z)
          if (b.circ(x, b.add(y, z)) != b.add(b.circ(x, y), b.lambda(x, z))) {
            e.passed = false;
            e.witness = triple(x, y, z);
            break;
          }
  });

  check("star-distributivity", [&](IdentityReport::Entry& e) {
    // x * (y + z) = x*y + y + x*z - y
    for (int x = 0; x < n && e.passed; ++x)
      for (int y = 0; y < n && e.passed; ++y)
        for (int z = 0; z < n; ++z) {
          const int lhs = b.star(x, b.add(y, z));
          const int rhs =
              b.add(b.add(b.add(b.star(x, y), y), b.star(x, z)), b.neg(y));
          if (lhs != rhs) {
            e.passed = false;
            e.witness = triple(x, y, z);
            break;
          }
        }
  });

  check("star-translation", [&](IdentityReport::Entry& e) {
    // (a + x) * (b + y) = a * b whenever x, y lie in Fix intersect ker lambda.
    ElementSet quiet(n);
    for (int x = 0; x < n; ++x) {
      bool ok = true;
      for (int y = 0; y < n && ok; ++y)
        ok = b.star(x, y) == 0 && b.star(y, x) == 0;
      if (ok) quiet.insert(x);
    }
    for (int a = 0; a < n && e.passed; ++a)
      for (int bb = 0; bb < n && e.passed; ++bb)
        for (int x : quiet.members()) {
          for (int y : quiet.members())
            if (b.star(b.add(a, x), b.add(bb, y)) != b.star(a, bb)) {
              e.passed = false;
              e.witness = "(" + std::to_string(a) + ", " + std::to_string(bb) + ", " +
                          std::to_string(x) + ", " + std::to_string(y) + ")";
              break;
            }
          if (!e.passed) break;
        }
  });

  check("circ-decomposition", [&](IdentityReport::Entry& e) {
    // x o y = x + (x * y) + y
    for (int x = 0; x < n && e.passed; ++x)
      for (int y = 0; y < n; ++y)
        if (b.circ(x, y) != b.add(b.add(x, b.star(x, y)), y)) {
          e.passed = false;
          e.witness = "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
          break;
        }
  });

  return report;
}

}  // namespace skewbrace
