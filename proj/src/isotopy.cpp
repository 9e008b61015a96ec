#include "loopkit/isotopy.hpp"

#include <algorithm>

#include "parallel.hpp"

namespace loopkit {

IsotopismTriple IsotopismTriple::identity(int n) {
  return {Permutation::identity(n), Permutation::identity(n), Permutation::identity(n)};
}

namespace {

void require_same_order(const Loop& g, const Loop& h) {
  if (g.order() != h.order()) {
    throw DegreeMismatch("loops have different orders " + std::to_string(g.order()) + " and " +
                         std::to_string(h.order()));
  }
}

void require_degree(const Loop& g, const IsotopismTriple& t) {
  if (t.a.degree() != g.order() || t.b.degree() != g.order() || t.c.degree() != g.order()) {
    throw DegreeMismatch("triple degree does not match loop order " +
                         std::to_string(g.order()));
  }
}

}  // namespace

PropertyReport check_isotopism(const Loop& g, const Loop& h, const IsotopismTriple& t) {
  require_same_order(g, h);
  require_degree(g, t);
  PropertyReport r;
  r.property = "isotopism";
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (h.mul(t.a(x), t.b(y)) != t.c(g.mul(x, y))) {
        r.holds = false;
        r.witness = std::vector<int>{x, y};
        return r;
      }
    }
  }
  r.holds = true;
  return r;
}

Permutation derive_third(const Loop& g, const Loop& h, const Permutation& a,
                         const Permutation& b) {
  require_same_order(g, h);
  if (a.degree() != g.order() || b.degree() != g.order()) {
    throw DegreeMismatch("component degree does not match loop order " +
                         std::to_string(g.order()));
  }
  const int be = b(g.identity());
  std::vector<int> images(g.order());
  for (int x = 0; x < g.order(); ++x) images[x] = h.mul(a(x), be);
  return Permutation(std::move(images));
}

Loop apply_isotopism(const Loop& g, const IsotopismTriple& t) {
  require_degree(g, t);
  const int n = g.order();
  const Permutation ainv = inverse(t.a);
  const Permutation binv = inverse(t.b);
  std::vector<std::vector<int>> grid(n, std::vector<int>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      grid[u][v] = t.c(g.mul(ainv(u), binv(v)));
    }
  }
  return Loop::validate(grid);
}

Loop principal_isotope(const Loop& g, int f, int gg) {
  const int n = g.order();
  std::vector<std::vector<int>> grid(n, std::vector<int>(n));
  for (int u = 0; u < n; ++u) {
    const int ru = g.right_divide(gg, u);  // R_g^{-1}(u)
    for (int v = 0; v < n; ++v) {
      grid[u][v] = g.mul(ru, g.left_divide(f, v));  // L_f^{-1}(v)
    }
  }
  return Loop::validate(grid);
}

TConditionReport check_t_condition(const Loop& g, const Loop& h, const IsotopismTriple& t) {
  const PropertyReport iso = check_isotopism(g, h, t);
  if (!iso.holds) {
    throw NotAnIsotopism("the triple is not an isotopism between the given loops");
  }
  const Permutation jr = g.j_rho();
  const Permutation jl = g.j_lambda();
  const Permutation jr2 = h.j_rho();
  const Permutation jl2 = h.j_lambda();
  TConditionReport r;
  r.t1 = t.a == t.b;
  r.t2 = jr2 == compose(compose(inverse(t.c), jr), t.b) &&
         jr2 == compose(compose(inverse(t.a), jr), t.c);
  r.t3 = jl2 == compose(compose(inverse(t.c), jl), t.a) &&
         jl2 == compose(compose(inverse(t.b), jl), t.c);
  r.t = r.t1 && (r.t2 || r.t3);
  return r;
}

namespace {

// With A and B(e_G) fixed, C is forced cell-wise and so is every remaining image
// of B; a single consistency sweep accepts or rejects the candidate.
template <class Sink>
void isotopisms_for_a(const Loop& g, const Loop& h, const Permutation& a, Sink&& sink) {
  const int n = g.order();
  const int e = g.identity();
  for (int be = 0; be < n; ++be) {
    std::vector<int> c(n);
    for (int x = 0; x < n; ++x) c[x] = h.mul(a(x), be);
    std::vector<int> b(n, -1);
    std::vector<char> used(n, 0);
    b[e] = be;
    used[be] = 1;
    bool ok = true;
    for (int y = 0; y < n && ok; ++y) {
      if (y == e) continue;
      const int img = h.left_divide(a(0), c[g.mul(0, y)]);
      if (used[img]) {
        ok = false;
        break;
      }
      for (int x = 1; x < n; ++x) {
        if (h.mul(a(x), img) != c[g.mul(x, y)]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        b[y] = img;
        used[img] = 1;
      }
    }
    if (ok) sink(IsotopismTriple{a, Permutation(b), Permutation(c)});
  }
}

}  // namespace

std::vector<IsotopismTriple> find_isotopisms(const Loop& g, const Loop& h,
                                             std::optional<long> limit, int max_order,
                                             int workers) {
  require_same_order(g, h);
  if (g.order() > max_order) throw OrderTooLarge(g.order(), max_order);
  const std::vector<Permutation> as = all_permutations(g.order());
  std::vector<IsotopismTriple> out;
  if (limit) {
    for (const Permutation& a : as) {
      isotopisms_for_a(g, h, a, [&](IsotopismTriple t) {
        if (static_cast<long>(out.size()) < *limit) out.push_back(std::move(t));
      });
      if (static_cast<long>(out.size()) >= *limit) break;
    }
  } else {
    const int k = detail::resolve_workers(workers);
    std::vector<std::vector<IsotopismTriple>> found(std::min<long>(k, as.size()));
    detail::parallel_chunks(static_cast<long>(as.size()), k, [&](int chunk, long lo, long hi) {
      for (long i = lo; i < hi; ++i) {
        isotopisms_for_a(g, h, as[i],
                         [&](IsotopismTriple t) { found[chunk].push_back(std::move(t)); });
      }
    });
    for (auto& part : found) {
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void isomorphism_search(const Loop& g, const Loop& h, std::vector<int>& phi,
                        std::vector<char>& used, int next, std::vector<Permutation>& out) {
  const int n = g.order();
  if (next == n) {
    out.push_back(Permutation(phi));
    return;
  }
  if (phi[next] != -1) {
    isomorphism_search(g, h, phi, used, next + 1, out);
    return;
  }
  for (int img = 0; img < n; ++img) {
    if (used[img]) continue;
    phi[next] = img;
    used[img] = 1;
    bool ok = true;
    for (int x = 0; x <= next && ok; ++x) {
      if (phi[x] == -1) continue;
      for (int y = 0; y <= next; ++y) {
        if (phi[y] == -1) continue;
        const int p = g.mul(x, y);
        if (phi[p] != -1 && h.mul(phi[x], phi[y]) != phi[p]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) isomorphism_search(g, h, phi, used, next + 1, out);
    phi[next] = -1;
    used[img] = 0;
  }
}

}  // namespace

std::vector<Permutation> find_isomorphisms(const Loop& g, const Loop& h, int workers) {
  require_same_order(g, h);
  (void)workers;  // the backtracker is already far below any budget at guarded orders
  const int n = g.order();
  std::vector<int> phi(n, -1);
  std::vector<char> used(n, 0);
  phi[g.identity()] = h.identity();
  used[h.identity()] = 1;
  std::vector<Permutation> out;
  isomorphism_search(g, h, phi, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IsotopismTriple> autotopisms(const Loop& g, int max_order, int workers) {
  if (g.order() > max_order) throw OrderTooLarge(g.order(), max_order);
  std::vector<IsotopismTriple> auts = find_isotopisms(g, g, std::nullopt, max_order, workers);
  const auto member = [&](const IsotopismTriple& t) {
    return std::binary_search(auts.begin(), auts.end(), t);
  };
  if (!member(IsotopismTriple::identity(g.order()))) {
    throw Error("autotopism_group", "identity triple missing");
  }
  for (const auto& t : auts) {
    if (!member({inverse(t.a), inverse(t.b), inverse(t.c)})) {
      throw Error("autotopism_group", "set is not closed under inverses");
    }
    for (const auto& s : auts) {
      if (!member({compose(t.a, s.a), compose(t.b, s.b), compose(t.c, s.c)})) {
        throw Error("autotopism_group", "set is not closed under composition");
      }
    }
  }
  return auts;
}

}  // namespace loopkit
