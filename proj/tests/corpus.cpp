#include "corpus.hpp"

#include "skewbrace/constructions.hpp"
#include "skewbrace/enumeration.hpp"

namespace testsupport {

using namespace skewbrace;

SkewBrace make_b4() {
  const std::vector<std::vector<int>> add = {
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  };
  const std::vector<std::vector<int>> circ = {
      {0, 1, 2, 3},
      {1, 2, 3, 0},
      {2, 3, 0, 1},
      {3, 0, 1, 2},
  };
  return make_brace_tables(add, circ);
}

SkewBrace make_ops3() { return opposite_brace(symmetric3()); }

std::vector<std::vector<int>> product_matrix(int rows, int cols, int modulus) {
  std::vector<std::vector<int>> m(rows, std::vector<int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m[i][j] = (i * j) % modulus;
  return m;
}

std::vector<NamedBrace> enumerated_corpus() {
  std::vector<std::pair<std::string, FiniteGroup>> groups;
  for (int n = 1; n <= 6; ++n) groups.emplace_back("Z" + std::to_string(n), cyclic_group(n));
  groups.emplace_back("V4", direct_product(cyclic_group(2), cyclic_group(2)));
  groups.emplace_back("S3", symmetric3());

  std::vector<NamedBrace> out;
  for (const auto& [name, group] : groups) {
    const BraceFamily family = enumerate_braces_on(group);
    for (std::size_t i = 0; i < family.braces.size(); ++i)
      out.push_back({name + "#" + std::to_string(i), family.braces[i]});
  }
  return out;
}

std::vector<NamedBrace> named_corpus() {
  const FiniteGroup z2 = cyclic_group(2);
  const FiniteGroup z3 = cyclic_group(3);

  std::vector<NamedBrace> out;
  out.push_back({"B4", make_b4()});
  out.push_back({"OpS3", make_ops3()});
  out.push_back({"OpD4", opposite_brace(dihedral_group(4))});
  out.push_back({"OpQ8", opposite_brace(quaternion8())});
  out.push_back({"Heis8", heisenberg_brace(z2, z2, z2, product_matrix(2, 2, 2))});
  out.push_back({"Heis27", heisenberg_brace(z3, z3, z3, product_matrix(3, 3, 3))});
  out.push_back({"Bilin4", bilinear_brace(trivial_brace(z2), z2, product_matrix(2, 2, 2))});
  out.push_back({"Bilin9", bilinear_brace(trivial_brace(z3), z3, product_matrix(3, 3, 3))});
  {
    // theta((k,h), (k',h')) = h h' is additive for both operations of B4.
    const SkewBrace b4 = make_b4();
    std::vector<std::vector<int>> theta(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) theta[i][j] = (i % 2) * (j % 2);
    out.push_back({"Bilin8", bilinear_brace(b4, z2, theta)});
  }
  return out;
}

std::vector<NamedBrace> full_corpus() {
  std::vector<NamedBrace> out = enumerated_corpus();
  for (auto& named : named_corpus()) out.push_back(std::move(named));
  return out;
}

}  // namespace testsupport
