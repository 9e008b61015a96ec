#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopkit/error.hpp"
#include "loopkit/permutation.hpp"

namespace loopkit {

struct PropertyReport {
  std::string property;
  bool holds = true;
  std::optional<std::vector<int>> witness;  // first counterexample, row-major scan
  std::string detail;
  std::map<std::string, bool> flags;
};

enum class LoopDefect { NotSquare, BadEntry, NotLatin, NoIdentity };

class LoopError : public Error {
public:
  LoopError(LoopDefect defect, const std::string& message, int row = -1, int col = -1,
            std::vector<int> cells = {});

  LoopDefect defect() const { return defect_; }
  int row() const { return row_; }
  int col() const { return col_; }
  const std::vector<int>& cells() const { return cells_; }

private:
  LoopDefect defect_;
  int row_;
  int col_;
  std::vector<int> cells_;
};

class Loop {
public:
  static Loop validate(const std::vector<std::vector<int>>& grid);
  static Loop from_cells(int n, std::vector<int> cells);

  int order() const { return n_; }
  int identity() const { return e_; }
  int mul(int x, int y) const { return cells_[x * n_ + y]; }
  int left_divide(int a, int b) const { return ldiv_[a * n_ + b]; }    // a*x = b
  int right_divide(int a, int b) const { return rdiv_[a * n_ + b]; }   // y*a = b
  Permutation left_translation(int x) const;   // L_x : y -> x*y
  Permutation right_translation(int x) const;  // R_x : y -> y*x
  Permutation j_rho() const;                   // x -> x^rho with x * x^rho = e
  Permutation j_lambda() const;                // x -> x^lam with x^lam * x = e
  const std::vector<int>& cells() const { return cells_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const Loop& a, const Loop& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

private:
  Loop(int n, std::vector<int> cells, int e);

  int n_;
  std::vector<int> cells_;
  int e_;
  std::vector<int> ldiv_;
  std::vector<int> rdiv_;
};

Loop validate_loop(const std::vector<std::vector<int>>& grid);
std::pair<Permutation, Permutation> translations(const Loop& l, int x);        // (L_x, R_x)
std::pair<Permutation, Permutation> inverse_maps(const Loop& l);               // (J_lambda, J_rho)
std::pair<Permutation, Permutation> inner_mappings(const Loop& l, int x, int y);  // (L(x,y), R(x,y))

}  // namespace loopkit
