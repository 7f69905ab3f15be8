#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "corpus.hpp"
#include "skewbrace/analysis.hpp"
#include "skewbrace/io.hpp"

using namespace skewbrace;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("skewbrace_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_CASE("brace documents round trip byte for byte") {
  for (const auto& [name, b] : testsupport::named_corpus()) {
    CAPTURE(name);
    BraceDoc doc = doc_from_brace(b, name);
    doc.metadata["origin"] = "corpus";

    TempDir dir;
    const fs::path file = dir.path / (name + ".txt");
    save_brace_doc(doc, file);
    const BraceDoc reloaded = load_brace_doc(file);
    CHECK(reloaded == doc);

    std::ostringstream first, second;
    first << format_brace_doc(doc);
    second << format_brace_doc(reloaded);
    CHECK(first.str() == second.str());

    const SkewBrace revalidated = load_brace(file);
    CHECK(revalidated == b);
  }
}

TEST_CASE("parser reports malformed documents") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_brace_doc(in);
  };

  CHECK_THROWS_AS(parse("order 2\nadd\n0 1\n1 0\n"), ValidationError);   // missing circ
  CHECK_THROWS_AS(parse("add\n0 1\n1 0\n"), ValidationError);            // order not first
  CHECK_THROWS_AS(parse("order 2\nadd\n0 1\ncirc\n0 1\n1 0\n"), ValidationError);  // short table
  CHECK_THROWS_AS(parse("order 2\nadd\n0 1 1\n1 0 0\n"), ValidationError);         // wide table
  CHECK_THROWS_AS(parse("order 2\nadd\n0 x\n1 0\n"), ValidationError);   // not an integer
  CHECK_THROWS_AS(parse("bogus 3\n"), ValidationError);                  // unknown keyword

  try {
    parse("order 2\nadd\n0 1\n1 0\ncirc\n0 1\n");
    FAIL("expected ParseError");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::ParseError);
  }
}

TEST_CASE("validation failures are forwarded from load") {
  TempDir dir;
  const fs::path file = dir.path / "broken.txt";
  {
    std::ofstream out(file);
    out << "name broken\norder 4\nadd\n";
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) out << (a + b) % 4 << " ";
      out << "\n";
    }
    // A relabeled cyclic table that is a group but no brace against add.
    const int sigma[4] = {0, 2, 1, 3};
    std::vector<std::vector<int>> circ(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) circ[sigma[a]][sigma[b]] = sigma[(a + b) % 4];
    out << "circ\n";
    for (const auto& row : circ) {
      for (int v : row) out << v << " ";
      out << "\n";
    }
  }
  try {
    load_brace(file);
    FAIL("expected AxiomFails");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::AxiomFails);
  }
}

TEST_CASE("group documents and integer matrices") {
  TempDir dir;
  GroupDoc doc;
  doc.name = "Z4";
  doc.order = 4;
  doc.table.resize(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) doc.table[a][b] = (a + b) % 4;

  const fs::path file = dir.path / "z4.txt";
  save_group_doc(doc, file);
  const GroupDoc reloaded = load_group_doc(file);
  CHECK(reloaded.name == doc.name);
  CHECK(reloaded.table == doc.table);
  CHECK(load_group(file).order() == 4);

  const fs::path matrix = dir.path / "matrix.txt";
  {
    std::ofstream out(matrix);
    out << "# comment\n0 1\n1 0\n";
  }
  CHECK(load_int_matrix(matrix) == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
}

TEST_CASE("analysis output is deterministic") {
  const SkewBrace b4 = testsupport::make_b4();
  const AnalysisReport r1 = analyze(b4, "B4");
  const AnalysisReport r2 = analyze(b4, "B4");
  CHECK(report_to_text(r1) == report_to_text(r2));
  CHECK(report_to_json(r1) == report_to_json(r2));
  CHECK(report_to_text(r1).find("center: {0, 2}") != std::string::npos);
}

TEST_CASE("conjecture suite over a small corpus directory") {
  TempDir dir;
  int index = 0;
  for (const auto& [name, b] : testsupport::named_corpus()) {
    if (b.order() > 8) continue;
    save_brace_doc(doc_from_brace(b, name),
                   dir.path / ("brace_" + std::to_string(index++) + ".txt"));
  }
  {
    std::ofstream out(dir.path / "corrupt.txt");
    out << "order 2\nadd\n0 1\n";
  }

  const ConjectureSuiteSummary summary = run_conjecture_suite(dir.path);
  CHECK(summary.analyzed == index);
  CHECK(summary.failed_files == 1);
  CHECK(summary.inconsistencies == 0);

  const std::string text = summary_to_text(summary);
  CHECK(text.find("corrupt.txt: error") != std::string::npos);

  const ConjectureSuiteSummary empty = run_conjecture_suite(dir.path / "missing");
  CHECK(empty.analyzed == 0);
  CHECK(empty.files.empty());
}
