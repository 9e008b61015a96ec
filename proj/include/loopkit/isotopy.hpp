#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "loopkit/loop.hpp"
#include "loopkit/permutation.hpp"

namespace loopkit {

struct IsotopismTriple {
  Permutation a;
  Permutation b;
  Permutation c;

  int degree() const { return a.degree(); }
  static IsotopismTriple identity(int n);

  friend bool operator==(const IsotopismTriple&, const IsotopismTriple&) = default;
  friend auto operator<=>(const IsotopismTriple& s, const IsotopismTriple& t) {
    return std::tie(s.a, s.b, s.c) <=> std::tie(t.a, t.b, t.c);
  }
};

struct TConditionReport {
  bool t1 = false;
  bool t2 = false;
  bool t3 = false;
  bool t = false;  // t1 && (t2 || t3)
};

PropertyReport check_isotopism(const Loop& g, const Loop& h, const IsotopismTriple& t);
Permutation derive_third(const Loop& g, const Loop& h, const Permutation& a,
                         const Permutation& b);
Loop apply_isotopism(const Loop& g, const IsotopismTriple& t);
Loop principal_isotope(const Loop& g, int f, int gg);
TConditionReport check_t_condition(const Loop& g, const Loop& h, const IsotopismTriple& t);

std::vector<IsotopismTriple> find_isotopisms(const Loop& g, const Loop& h,
                                             std::optional<long> limit = std::nullopt,
                                             int max_order = 7, int workers = 0);
std::vector<Permutation> find_isomorphisms(const Loop& g, const Loop& h, int workers = 0);
std::vector<IsotopismTriple> autotopisms(const Loop& g, int max_order = 6, int workers = 0);

}  // namespace loopkit
