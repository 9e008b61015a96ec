#pragma once

#include <string>
#include <vector>

#include "loopkit/loop.hpp"
#include "loopkit/permutation.hpp"

namespace loopkit {

enum class WipCriterion { Definitional, RightIdentity, LeftIdentity, OperatorRho, OperatorLambda };

const char* wip_criterion_name(WipCriterion c);

PropertyReport is_wip(const Loop& l, WipCriterion criterion = WipCriterion::Definitional);
PropertyReport is_cip(const Loop& l);
PropertyReport is_aip(const Loop& l);
PropertyReport is_m_inverse(const Loop& l, int m);
PropertyReport is_weak_inverse_permutation(const Loop& l, const Permutation& alpha);

struct WeakInverseSets {
  std::vector<Permutation> s_rho;
  std::vector<Permutation> s_lambda;
  std::vector<Permutation> s_prime;
};

WeakInverseSets weak_inverse_sets(const Loop& l, int max_order = 6);
PropertyReport commuting_closure_check(const Loop& l, int max_order = 6);
PropertyReport involution_preserving_check(const Loop& l, const Permutation& alpha);

// bit order: commutative, associative, exponent2, wip, cip, aip, m1
struct FlagVector {
  bool commutative = false;
  bool associative = false;
  bool exponent2 = false;
  bool wip = false;
  bool cip = false;
  bool aip = false;
  bool m1 = false;

  std::string bits() const;
  static FlagVector from_bits(const std::string& bits);

  friend bool operator==(const FlagVector&, const FlagVector&) = default;
};

FlagVector classify(const Loop& l);

}  // namespace loopkit
