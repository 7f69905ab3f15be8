#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

// One brace per file, in a plain text record:
//
//   name B4
//   order 4
//   add
//   0 1 2 3
//   1 0 3 2
//   2 3 0 1
//   3 2 1 0
//   circ
//   0 1 2 3
//   1 2 3 0
//   2 3 0 1
//   3 0 1 2
//   meta source bilinear
//
// Blank lines and lines starting with '#' are ignored. Element 0 is the
// shared identity of both tables. "meta" lines are optional free-form
// key/value pairs; keys are kept sorted so save/load round trips are
// byte-exact.
struct BraceDoc {
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> circ;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const BraceDoc& a, const BraceDoc& b) {
    return a.name == b.name && a.order == b.order && a.add == b.add && a.circ == b.circ &&
           a.metadata == b.metadata;
  }
};

// Same shape with a single table:
//
//   name Z4
//   order 4
//   table
//   ...
struct GroupDoc {
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> table;
};

BraceDoc parse_brace_doc(std::istream& in);
BraceDoc load_brace_doc(const std::filesystem::path& path);
void save_brace_doc(const BraceDoc& doc, const std::filesystem::path& path);
std::string format_brace_doc(const BraceDoc& doc);

GroupDoc parse_group_doc(std::istream& in);
GroupDoc load_group_doc(const std::filesystem::path& path);
void save_group_doc(const GroupDoc& doc, const std::filesystem::path& path);

BraceDoc doc_from_brace(const SkewBrace& b, const std::string& name);

// Parse + validate in one step.
SkewBrace load_brace(const std::filesystem::path& path);
FiniteGroup load_group(const std::filesystem::path& path);

// Whitespace-separated integer matrix, one row per line; used for the
// bilinear and cocycle inputs of the CLI.
std::vector<std::vector<int>> load_int_matrix(const std::filesystem::path& path);

}  // namespace skewbrace
