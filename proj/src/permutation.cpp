#include "loopkit/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace loopkit {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<char> seen(n, 0);
  for (int x : images_) {
    if (x < 0 || x >= n || seen[x]) {
      throw NotBijective("image list is not a bijection on 0.." + std::to_string(n - 1));
    }
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatch("cannot compose permutations of degrees " +
                         std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
  }
  std::vector<int> images(a.degree());
  for (int x = 0; x < a.degree(); ++x) images[x] = b(a(x));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(p.degree());
  for (int x = 0; x < p.degree(); ++x) images[p(x)] = x;
  return Permutation(std::move(images));
}

Permutation power(const Permutation& p, int m) {
  Permutation base = m < 0 ? inverse(p) : p;
  int k = m < 0 ? -m : m;
  Permutation result = Permutation::identity(p.degree());
  for (int i = 0; i < k; ++i) result = compose(result, base);
  return result;
}

int perm_order(const Permutation& p) {
  Permutation q = p;
  int k = 1;
  while (!q.is_identity()) {
    q = compose(q, p);
    ++k;
  }
  return k;
}

std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.degree(), 0);
  for (int x = 0; x < p.degree(); ++x) {
    if (seen[x] || p(x) == x) continue;
    out += '(';
    int y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = 1;
      if (!first) out += ' ';
      out += std::to_string(y);
      first = false;
      y = p(y);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace loopkit
