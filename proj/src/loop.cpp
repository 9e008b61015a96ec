#include "loopkit/loop.hpp"

namespace loopkit {

LoopError::LoopError(LoopDefect defect, const std::string& message, int row, int col,
                     std::vector<int> cells)
    : Error("loop_invalid", message), defect_(defect), row_(row), col_(col),
      cells_(std::move(cells)) {}

Loop::Loop(int n, std::vector<int> cells, int e)
    : n_(n), cells_(std::move(cells)), e_(e), ldiv_(n * n), rdiv_(n * n) {
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      const int p = cells_[x * n_ + y];
      ldiv_[x * n_ + p] = y;
      rdiv_[y * n_ + p] = x;
    }
  }
}

Loop Loop::from_cells(int n, std::vector<int> cells) {
  if (n <= 0 || static_cast<int>(cells.size()) != n * n) {
    throw LoopError(LoopDefect::NotSquare,
                    "expected " + std::to_string(n) + "x" + std::to_string(n) + " cells");
  }
  std::vector<std::vector<int>> grid(n);
  for (int x = 0; x < n; ++x) {
    grid[x].assign(cells.begin() + x * n, cells.begin() + (x + 1) * n);
  }
  return validate(grid);
}

Loop Loop::validate(const std::vector<std::vector<int>>& grid) {
  const int n = static_cast<int>(grid.size());
  if (n == 0) {
    throw LoopError(LoopDefect::NotSquare, "table is empty");
  }
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(grid[x].size()) != n) {
      throw LoopError(LoopDefect::NotSquare,
                      "row " + std::to_string(x) + " has " + std::to_string(grid[x].size()) +
                          " entries, expected " + std::to_string(n),
                      x);
    }
    for (int y = 0; y < n; ++y) {
      if (grid[x][y] < 0 || grid[x][y] >= n) {
        throw LoopError(LoopDefect::BadEntry,
                        "entry " + std::to_string(grid[x][y]) + " at row " + std::to_string(x) +
                            ", column " + std::to_string(y) + " is out of range 0.." +
                            std::to_string(n - 1),
                        x, y);
      }
    }
  }
  std::vector<char> seen(n);
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) {
      if (seen[grid[x][y]]) {
        throw LoopError(LoopDefect::NotLatin,
                        "row " + std::to_string(x) + " repeats value " +
                            std::to_string(grid[x][y]) + " at column " + std::to_string(y),
                        x, y);
      }
      seen[grid[x][y]] = 1;
    }
  }
  for (int y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < n; ++x) {
      if (seen[grid[x][y]]) {
        throw LoopError(LoopDefect::NotLatin,
                        "column " + std::to_string(y) + " repeats value " +
                            std::to_string(grid[x][y]) + " at row " + std::to_string(x),
                        x, y);
      }
      seen[grid[x][y]] = 1;
    }
  }
  int e = -1;
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = grid[c][x] == x && grid[x][c] == x;
    }
    if (ok) {
      e = c;
      break;
    }
  }
  if (e < 0) {
    std::vector<int> cells;
    cells.reserve(n * n);
    for (const auto& row : grid) cells.insert(cells.end(), row.begin(), row.end());
    throw LoopError(LoopDefect::NoIdentity, "Latin square has no two-sided identity element",
                    -1, -1, std::move(cells));
  }
  std::vector<int> cells;
  cells.reserve(n * n);
  for (const auto& row : grid) cells.insert(cells.end(), row.begin(), row.end());
  return Loop(n, std::move(cells), e);
}

Permutation Loop::left_translation(int x) const {
  std::vector<int> images(cells_.begin() + x * n_, cells_.begin() + (x + 1) * n_);
  return Permutation(std::move(images));
}

Permutation Loop::right_translation(int x) const {
  std::vector<int> images(n_);
  for (int y = 0; y < n_; ++y) images[y] = cells_[y * n_ + x];
  return Permutation(std::move(images));
}

Permutation Loop::j_rho() const {
  std::vector<int> images(n_);
  for (int x = 0; x < n_; ++x) images[x] = left_divide(x, e_);
  return Permutation(std::move(images));
}

Permutation Loop::j_lambda() const {
  std::vector<int> images(n_);
  for (int x = 0; x < n_; ++x) images[x] = right_divide(x, e_);
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> Loop::rows() const {
  std::vector<std::vector<int>> out(n_);
  for (int x = 0; x < n_; ++x) {
    out[x].assign(cells_.begin() + x * n_, cells_.begin() + (x + 1) * n_);
  }
  return out;
}

Loop validate_loop(const std::vector<std::vector<int>>& grid) { return Loop::validate(grid); }

std::pair<Permutation, Permutation> translations(const Loop& l, int x) {
  return {l.left_translation(x), l.right_translation(x)};
}

std::pair<Permutation, Permutation> inverse_maps(const Loop& l) {
  return {l.j_lambda(), l.j_rho()};
}

std::pair<Permutation, Permutation> inner_mappings(const Loop& l, int x, int y) {
  const Permutation r = compose(compose(l.right_translation(x), l.right_translation(y)),
                                inverse(l.right_translation(l.mul(x, y))));
  const Permutation lm = compose(compose(l.left_translation(x), l.left_translation(y)),
                                 inverse(l.left_translation(l.mul(y, x))));
  return {lm, r};
}

}  // namespace loopkit
