#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "loopkit/loop.hpp"

namespace fixtures {

inline loopkit::Loop from_rows(const std::vector<std::vector<int>>& rows) {
  return loopkit::Loop::validate(rows);
}

// the bundled commutative order-5 weak inverse property loop
// (assets/counterexample.loop)
inline const loopkit::Loop& table5() {
  static const loopkit::Loop l = from_rows({{0, 1, 2, 3, 4},
                                            {1, 3, 0, 4, 2},
                                            {2, 0, 4, 1, 3},
                                            {3, 4, 1, 2, 0},
                                            {4, 2, 3, 0, 1}});
  return l;
}

inline loopkit::Loop cyclic(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  }
  return loopkit::Loop::validate(rows);
}

inline const loopkit::Loop& klein4() {
  static const loopkit::Loop l =
      from_rows({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  return l;
}

// first reduced square of order 5 in enumeration order; fails every inverse property
inline const loopkit::Loop& non_wip5() {
  static const loopkit::Loop l = from_rows({{0, 1, 2, 3, 4},
                                            {1, 0, 3, 4, 2},
                                            {2, 3, 4, 0, 1},
                                            {3, 4, 1, 2, 0},
                                            {4, 2, 0, 1, 3}});
  return l;
}

// noncommutative exponent-2 crossed inverse loop of order 5 (catalog class 2 rep)
inline const loopkit::Loop& exp2cip5() {
  static const loopkit::Loop l = from_rows({{0, 1, 2, 3, 4},
                                            {1, 0, 3, 4, 2},
                                            {2, 4, 0, 1, 3},
                                            {3, 2, 4, 0, 1},
                                            {4, 3, 1, 2, 0}});
  return l;
}

// 1-inverse loop of order 5 that has neither the weak nor the crossed inverse
// property (catalog class 4 rep)
inline const loopkit::Loop& m1only5() {
  static const loopkit::Loop l = from_rows({{0, 1, 2, 3, 4},
                                            {1, 2, 0, 4, 3},
                                            {2, 3, 4, 0, 1},
                                            {3, 4, 1, 2, 0},
                                            {4, 0, 3, 1, 2}});
  return l;
}

// cyclic group of order 3 relabeled so the identity is 2
inline const loopkit::Loop& permuted_z3() {
  static const loopkit::Loop l = from_rows({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  return l;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string asset_path(const std::string& name) {
  return std::string(LOOPKIT_ASSET_DIR) + "/" + name;
}

}  // namespace fixtures
