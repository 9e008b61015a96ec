#pragma once

#include <iosfwd>
#include <string>

#include "loopkit/error.hpp"
#include "loopkit/isotopy.hpp"
#include "loopkit/loop.hpp"

namespace loopkit::io {

class ParseError : public Error {
public:
  ParseError(const std::string& message, std::string file, int line, int col);

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  int col() const { return col_; }

private:
  std::string file_;
  int line_;
  int col_;
};

// .loop: optional '#' comment lines, then the order n, then n rows of n values.
Loop read_loop(std::istream& in, const std::string& filename = "<stream>");
Loop read_loop_file(const std::string& path);
std::string write_loop(const Loop& l);
void write_loop_file(const Loop& l, const std::string& path);

// .perm: one line of n images, '#' comment lines allowed.
Permutation read_permutation(std::istream& in, const std::string& filename = "<stream>");
Permutation read_permutation_file(const std::string& path);
std::string write_permutation(const Permutation& p);
void write_permutation_file(const Permutation& p, const std::string& path);

// triple: three permutation lines (A, B, C), '#' comment lines allowed.
IsotopismTriple read_triple(std::istream& in, const std::string& filename = "<stream>");
IsotopismTriple read_triple_file(const std::string& path);
std::string write_triple(const IsotopismTriple& t);
void write_triple_file(const IsotopismTriple& t, const std::string& path);

}  // namespace loopkit::io
