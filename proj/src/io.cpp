#include "skewbrace/io.hpp"

#include <fstream>
#include <sstream>

namespace skewbrace {

namespace {

ValidationError parse_error(int line, const std::string& message) {
  return ValidationError(ValidationError::Kind::ParseError,
                         "line " + std::to_string(line) + ": " + message);
}

struct LineReader {
  std::istream& in;
  int line_number = 0;

  // Next meaningful line, skipping blanks and comments.
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_number;
      std::size_t begin = raw.find_first_not_of(" \t\r");
      if (begin == std::string::npos) continue;
      if (raw[begin] == '#') continue;
      std::size_t end = raw.find_last_not_of(" \t\r");
      out = raw.substr(begin, end - begin + 1);
      return true;
    }
    return false;
  }
};

std::vector<int> parse_int_row(const std::string& line, int line_number) {
  std::istringstream is(line);
  std::vector<int> row;
  std::string token;
  while (is >> token) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      row.push_back(value);
    } catch (const std::exception&) {
      throw parse_error(line_number, "expected an integer, found '" + token + "'");
    }
  }
  return row;
}

std::vector<std::vector<int>> parse_table(LineReader& reader, int order, const char* what) {
  std::vector<std::vector<int>> table;
  for (int r = 0; r < order; ++r) {
    std::string line;
    if (!reader.next(line))
      throw parse_error(reader.line_number,
                        std::string(what) + " table ends after " + std::to_string(r) + " rows");
    std::vector<int> row = parse_int_row(line, reader.line_number);
    if (static_cast<int>(row.size()) != order)
      throw parse_error(reader.line_number, std::string(what) + " row has " +
                                                std::to_string(row.size()) + " entries, expected " +
                                                std::to_string(order));
    table.push_back(std::move(row));
  }
  return table;
}

std::pair<std::string, std::string> split_keyword(const std::string& line) {
  const std::size_t space = line.find_first_of(" \t");
  if (space == std::string::npos) return {line, ""};
  const std::size_t rest = line.find_first_not_of(" \t", space);
  return {line.substr(0, space), rest == std::string::npos ? "" : line.substr(rest)};
}

}  // namespace

BraceDoc parse_brace_doc(std::istream& in) {
  LineReader reader{in};
  BraceDoc doc;
  bool have_order = false, have_add = false, have_circ = false;

  std::string line;
  while (reader.next(line)) {
    const auto [keyword, rest] = split_keyword(line);
    if (keyword == "name") {
      doc.name = rest;
    } else if (keyword == "order") {
      const std::vector<int> row = parse_int_row(rest, reader.line_number);
      if (row.size() != 1 || row[0] <= 0)
        throw parse_error(reader.line_number, "order must be a single positive integer");
      doc.order = row[0];
      have_order = true;
    } else if (keyword == "add" || keyword == "circ") {
      if (!have_order) throw parse_error(reader.line_number, "order must come before tables");
      auto table = parse_table(reader, doc.order, keyword.c_str());
      if (keyword == "add") {
        doc.add = std::move(table);
        have_add = true;
      } else {
        doc.circ = std::move(table);
        have_circ = true;
      }
    } else if (keyword == "meta") {
      const auto [key, value] = split_keyword(rest);
      if (key.empty()) throw parse_error(reader.line_number, "meta needs a key");
      doc.metadata[key] = value;
    } else {
      throw parse_error(reader.line_number, "unknown keyword '" + keyword + "'");
    }
  }

  if (!have_order) throw parse_error(reader.line_number, "missing 'order'");
  if (!have_add) throw parse_error(reader.line_number, "missing 'add' table");
  if (!have_circ) throw parse_error(reader.line_number, "missing 'circ' table");
  return doc;
}

BraceDoc load_brace_doc(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError(ValidationError::Kind::ParseError,
                          "cannot open '" + path.string() + "'");
  return parse_brace_doc(in);
}

std::string format_brace_doc(const BraceDoc& doc) {
  std::ostringstream os;
  if (!doc.name.empty()) os << "name " << doc.name << "\n";
  os << "order " << doc.order << "\n";
  for (const char* section : {"add", "circ"}) {
    os << section << "\n";
    const auto& table = section[0] == 'a' ? doc.add : doc.circ;
    for (const auto& row : table) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
      os << "\n";
    }
  }
  for (const auto& [key, value] : doc.metadata)
    os << "meta " << key << (value.empty() ? "" : " " + value) << "\n";
  return os.str();
}

void save_brace_doc(const BraceDoc& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out)
    throw ValidationError(ValidationError::Kind::ParseError,
                          "cannot write '" + path.string() + "'");
  out << format_brace_doc(doc);
}

GroupDoc parse_group_doc(std::istream& in) {
  LineReader reader{in};
  GroupDoc doc;
  bool have_order = false, have_table = false;

  std::string line;
  while (reader.next(line)) {
    const auto [keyword, rest] = split_keyword(line);
    if (keyword == "name") {
      doc.name = rest;
    } else if (keyword == "order") {
      const std::vector<int> row = parse_int_row(rest, reader.line_number);
      if (row.size() != 1 || row[0] <= 0)
        throw parse_error(reader.line_number, "order must be a single positive integer");
      doc.order = row[0];
      have_order = true;
    } else if (keyword == "table") {
      if (!have_order) throw parse_error(reader.line_number, "order must come before the table");
      doc.table = parse_table(reader, doc.order, "group");
      have_table = true;
    } else {
      throw parse_error(reader.line_number, "unknown keyword '" + keyword + "'");
    }
  }

  if (!have_order) throw parse_error(reader.line_number, "missing 'order'");
  if (!have_table) throw parse_error(reader.line_number, "missing 'table'");
  return doc;
}

GroupDoc load_group_doc(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError(ValidationError::Kind::ParseError,
                          "cannot open '" + path.string() + "'");
  return parse_group_doc(in);
}

void save_group_doc(const GroupDoc& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out)
    throw ValidationError(ValidationError::Kind::ParseError,
                          "cannot write '" + path.string() + "'");
  if (!doc.name.empty()) out << "name " << doc.name << "\n";
  out << "order " << doc.order << "\n";
  out << "table\n";
  for (const auto& row : doc.table) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << "\n";
  }
}

BraceDoc doc_from_brace(const SkewBrace& b, const std::string& name) {
  BraceDoc doc;
  doc.name = name;
  doc.order = b.order();
  doc.add.resize(b.order());
  doc.circ.resize(b.order());
  for (int x = 0; x < b.order(); ++x) {
    doc.add[x].resize(b.order());
    doc.circ[x].resize(b.order());
    for (int y = 0; y < b.order(); ++y) {
      doc.add[x][y] = b.add(x, y);
      doc.circ[x][y] = b.circ(x, y);
    }
  }
  return doc;
}

SkewBrace load_brace(const std::filesystem::path& path) {
  const BraceDoc doc = load_brace_doc(path);
  return make_brace_tables(doc.add, doc.circ);
}

FiniteGroup load_group(const std::filesystem::path& path) {
  const GroupDoc doc = load_group_doc(path);
  return make_group(doc.table).group;
}

std::vector<std::vector<int>> load_int_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError(ValidationError::Kind::ParseError,
                          "cannot open '" + path.string() + "'");
  LineReader reader{in};
  std::vector<std::vector<int>> rows;
  std::string line;
  while (reader.next(line)) rows.push_back(parse_int_row(line, reader.line_number));
  return rows;
}

}  // namespace skewbrace
