#pragma once

#include <compare>
#include <string>
#include <vector>

#include "loopkit/error.hpp"

namespace loopkit {

// Permutations act on the right: compose(a, b) applies a first, then b, so
// operator strings like R_y J L_y read left to right.
class Permutation {
public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<int> images_;
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, int m);
int perm_order(const Permutation& p);
std::string cycle_string(const Permutation& p);
std::vector<Permutation> all_permutations(int n);

}  // namespace loopkit
