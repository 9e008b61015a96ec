#include "loopkit/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace loopkit::io {

ParseError::ParseError(const std::string& message, std::string file, int line, int col)
    : Error("parse_error",
            file + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + message),
      file_(std::move(file)), line_(line), col_(col) {}

namespace {

struct Token {
  std::string text;
  int col = 0;  // 1-based character position
};

struct LineReader {
  std::istream& in;
  std::string file;
  int line_no = 0;

  // next non-comment, non-blank line; false on EOF
  bool next(std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      size_t i = line.find_first_not_of(" \t");
      if (i == std::string::npos || line[i] == '#') continue;
      out = line;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail_eof(const std::string& expected) {
    throw ParseError("unexpected end of input, expected " + expected, file, line_no + 1, 1);
  }
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

int parse_int(const Token& t, const std::string& file, int line_no) {
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(t.text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != t.text.size()) {
    throw ParseError("expected an integer, got '" + t.text + "'", file, line_no, t.col);
  }
  return value;
}

std::vector<int> parse_int_line(const std::string& line, const std::string& file, int line_no,
                                int expected, const std::string& what) {
  const auto tokens = tokenize(line);
  if (expected >= 0 && static_cast<int>(tokens.size()) != expected) {
    const int col = tokens.empty() ? 1
                    : static_cast<int>(tokens.size()) > expected
                        ? tokens[expected].col
                        : tokens.back().col + static_cast<int>(tokens.back().text.size());
    throw ParseError("expected " + std::to_string(expected) + " " + what + ", got " +
                         std::to_string(tokens.size()),
                     file, line_no, col);
  }
  std::vector<int> values;
  values.reserve(tokens.size());
  for (const auto& t : tokens) values.push_back(parse_int(t, file, line_no));
  return values;
}

}  // namespace

Loop read_loop(std::istream& in, const std::string& filename) {
  LineReader reader{in, filename};
  std::string line;
  if (!reader.next(line)) reader.fail_eof("the loop order");
  const auto head = parse_int_line(line, filename, reader.line_no, 1, "value (the order)");
  const int n = head[0];
  if (n <= 0) {
    throw ParseError("order must be positive, got " + std::to_string(n), filename,
                     reader.line_no, tokenize(line)[0].col);
  }
  std::vector<std::vector<int>> grid;
  std::vector<int> row_lines;
  std::vector<std::vector<Token>> row_tokens;
  grid.reserve(n);
  for (int x = 0; x < n; ++x) {
    if (!reader.next(line)) reader.fail_eof("table row " + std::to_string(x));
    grid.push_back(parse_int_line(line, filename, reader.line_no, n, "entries"));
    row_lines.push_back(reader.line_no);
    row_tokens.push_back(tokenize(line));
  }
  try {
    return Loop::validate(grid);
  } catch (const LoopError& e) {
    const int r = e.row() >= 0 ? e.row() : 0;
    const int line_no = row_lines[r];
    const int col = e.col() >= 0 ? row_tokens[r][e.col()].col : row_tokens[r][0].col;
    throw ParseError(e.what(), filename, line_no, col);
  }
}

Loop read_loop_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path, 0, 0);
  return read_loop(in, path);
}

std::string write_loop(const Loop& l) {
  std::ostringstream out;
  out << l.order() << '\n';
  for (int x = 0; x < l.order(); ++x) {
    for (int y = 0; y < l.order(); ++y) {
      if (y) out << ' ';
      out << l.mul(x, y);
    }
    out << '\n';
  }
  return out.str();
}

void write_loop_file(const Loop& l, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing", path, 0, 0);
  out << write_loop(l);
}

namespace {

Permutation read_permutation_line(LineReader& reader, const std::string& filename) {
  std::string line;
  if (!reader.next(line)) reader.fail_eof("a permutation line");
  const auto values = parse_int_line(line, filename, reader.line_no, -1, "images");
  if (values.empty()) {
    throw ParseError("empty permutation line", filename, reader.line_no, 1);
  }
  try {
    return Permutation(values);
  } catch (const NotBijective& e) {
    throw ParseError(e.what(), filename, reader.line_no, tokenize(line)[0].col);
  }
}

}  // namespace

Permutation read_permutation(std::istream& in, const std::string& filename) {
  LineReader reader{in, filename};
  return read_permutation_line(reader, filename);
}

Permutation read_permutation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path, 0, 0);
  return read_permutation(in, path);
}

std::string write_permutation(const Permutation& p) {
  std::ostringstream out;
  for (int x = 0; x < p.degree(); ++x) {
    if (x) out << ' ';
    out << p(x);
  }
  out << '\n';
  return out.str();
}

void write_permutation_file(const Permutation& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing", path, 0, 0);
  out << write_permutation(p);
}

IsotopismTriple read_triple(std::istream& in, const std::string& filename) {
  LineReader reader{in, filename};
  Permutation a = read_permutation_line(reader, filename);
  const int line_a = reader.line_no;
  Permutation b = read_permutation_line(reader, filename);
  if (b.degree() != a.degree()) {
    throw ParseError("permutation degree " + std::to_string(b.degree()) +
                         " does not match first line's degree " + std::to_string(a.degree()) +
                         " (line " + std::to_string(line_a) + ")",
                     filename, reader.line_no, 1);
  }
  Permutation c = read_permutation_line(reader, filename);
  if (c.degree() != a.degree()) {
    throw ParseError("permutation degree " + std::to_string(c.degree()) +
                         " does not match first line's degree " + std::to_string(a.degree()) +
                         " (line " + std::to_string(line_a) + ")",
                     filename, reader.line_no, 1);
  }
  return {std::move(a), std::move(b), std::move(c)};
}

IsotopismTriple read_triple_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path, 0, 0);
  return read_triple(in, path);
}

std::string write_triple(const IsotopismTriple& t) {
  return write_permutation(t.a) + write_permutation(t.b) + write_permutation(t.c);
}

void write_triple_file(const IsotopismTriple& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing", path, 0, 0);
  out << write_triple(t);
}

}  // namespace loopkit::io
