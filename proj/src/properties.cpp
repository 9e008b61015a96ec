#include "loopkit/properties.hpp"

#include <algorithm>

namespace loopkit {

namespace {

PropertyReport pass(std::string property) {
  PropertyReport r;
  r.property = std::move(property);
  r.holds = true;
  return r;
}

PropertyReport fail(std::string property, std::vector<int> witness, std::string detail = "") {
  PropertyReport r;
  r.property = std::move(property);
  r.holds = false;
  r.witness = std::move(witness);
  r.detail = std::move(detail);
  return r;
}

}  // namespace

const char* wip_criterion_name(WipCriterion c) {
  switch (c) {
    case WipCriterion::Definitional: return "definitional";
    case WipCriterion::RightIdentity: return "right_identity";
    case WipCriterion::LeftIdentity: return "left_identity";
    case WipCriterion::OperatorRho: return "operator_rho";
    case WipCriterion::OperatorLambda: return "operator_lambda";
  }
  return "?";
}

PropertyReport is_wip(const Loop& l, WipCriterion criterion) {
  const int n = l.order();
  const int e = l.identity();
  const std::string property = std::string("wip.") + wip_criterion_name(criterion);
  const Permutation jr = l.j_rho();
  const Permutation jl = l.j_lambda();
  switch (criterion) {
    case WipCriterion::Definitional:
      // xy.z = e implies x.yz = e; z is forced to (xy)^rho
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          const int z = jr(l.mul(x, y));
          if (l.mul(x, l.mul(y, z)) != e) return fail(property, {x, y, z});
        }
      }
      return pass(property);
    case WipCriterion::RightIdentity:
      // y(xy)^rho = x^rho
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (l.mul(y, jr(l.mul(x, y))) != jr(x)) return fail(property, {x, y});
        }
      }
      return pass(property);
    case WipCriterion::LeftIdentity:
      // (xy)^lam x = y^lam
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (l.mul(jl(l.mul(x, y)), x) != jl(y)) return fail(property, {x, y});
        }
      }
      return pass(property);
    case WipCriterion::OperatorRho:
      // R_y J_rho L_y = J_rho
      for (int y = 0; y < n; ++y) {
        const Permutation lhs =
            compose(compose(l.right_translation(y), jr), l.left_translation(y));
        if (lhs != jr) return fail(property, {y});
      }
      return pass(property);
    case WipCriterion::OperatorLambda:
      // L_x J_lam R_x = J_lam
      for (int x = 0; x < n; ++x) {
        const Permutation lhs =
            compose(compose(l.left_translation(x), jl), l.right_translation(x));
        if (lhs != jl) return fail(property, {x});
      }
      return pass(property);
  }
  return pass(property);
}

PropertyReport is_cip(const Loop& l) {
  const int n = l.order();
  const Permutation jr = l.j_rho();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (l.mul(l.mul(x, y), jr(x)) != y) return fail("cip", {x, y});
    }
  }
  return pass("cip");
}

PropertyReport is_aip(const Loop& l) {
  const int n = l.order();
  const Permutation jr = l.j_rho();
  const Permutation jl = l.j_lambda();
  std::optional<std::vector<int>> rho_witness;
  std::optional<std::vector<int>> lam_witness;
  for (int x = 0; x < n && !rho_witness; ++x) {
    for (int y = 0; y < n; ++y) {
      if (jr(l.mul(x, y)) != l.mul(jr(x), jl(y))) {
        rho_witness = std::vector<int>{x, y};
        break;
      }
    }
  }
  for (int x = 0; x < n && !lam_witness; ++x) {
    for (int y = 0; y < n; ++y) {
      if (jl(l.mul(x, y)) != l.mul(jl(x), jr(y))) {
        lam_witness = std::vector<int>{x, y};
        break;
      }
    }
  }
  PropertyReport r;
  r.property = "aip";
  r.holds = !rho_witness;
  r.witness = rho_witness;
  r.flags["rho_form"] = !rho_witness;
  r.flags["lambda_form"] = !lam_witness;
  if (!lam_witness != !rho_witness) r.detail = "the two dual forms disagree";
  return r;
}

PropertyReport is_m_inverse(const Loop& l, int m) {
  const int n = l.order();
  const Permutation jr = l.j_rho();
  const Permutation jm = power(jr, m);
  const Permutation jm1 = power(jr, m + 1);
  PropertyReport r = pass("m_inverse");
  r.detail = "m=" + std::to_string(m);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (l.mul(jm(l.mul(x, y)), jm1(x)) != jm(y)) {
        r.holds = false;
        r.witness = std::vector<int>{x, y};
        return r;
      }
    }
  }
  return r;
}

namespace {

bool weak_right_at(const Permutation& jr, const Permutation& alpha, int x) {
  // x^rho = [(x alpha)^rho] alpha
  return jr(x) == alpha(jr(alpha(x)));
}

bool weak_left_at(const Permutation& jl, const Permutation& alpha, int x) {
  return jl(x) == alpha(jl(alpha(x)));
}

}  // namespace

PropertyReport is_weak_inverse_permutation(const Loop& l, const Permutation& alpha) {
  if (alpha.degree() != l.order()) {
    throw DegreeMismatch("permutation degree " + std::to_string(alpha.degree()) +
                         " does not match loop order " + std::to_string(l.order()));
  }
  const Permutation jr = l.j_rho();
  const Permutation jl = l.j_lambda();
  bool right = true;
  bool left = true;
  std::optional<std::vector<int>> witness;
  std::string detail;
  for (int x = 0; x < l.order(); ++x) {
    if (right && !weak_right_at(jr, alpha, x)) {
      right = false;
      if (!witness) {
        witness = std::vector<int>{x};
        detail = "right form fails";
      }
    }
    if (left && !weak_left_at(jl, alpha, x)) {
      left = false;
      if (!witness) {
        witness = std::vector<int>{x};
        detail = "left form fails";
      }
    }
  }
  PropertyReport r;
  r.property = "weak_inverse_permutation";
  r.holds = right && left;
  r.witness = witness;
  r.detail = detail;
  r.flags["right"] = right;
  r.flags["left"] = left;
  return r;
}

WeakInverseSets weak_inverse_sets(const Loop& l, int max_order) {
  if (l.order() > max_order) throw OrderTooLarge(l.order(), max_order);
  const Permutation jr = l.j_rho();
  const Permutation jl = l.j_lambda();
  WeakInverseSets sets;
  for (const Permutation& alpha : all_permutations(l.order())) {
    bool right = true;
    bool left = true;
    for (int x = 0; x < l.order() && (right || left); ++x) {
      right = right && weak_right_at(jr, alpha, x);
      left = left && weak_left_at(jl, alpha, x);
    }
    if (right) sets.s_rho.push_back(alpha);
    if (left) sets.s_lambda.push_back(alpha);
    if (right && left) sets.s_prime.push_back(alpha);
  }
  if (sets.s_rho != sets.s_lambda || sets.s_rho != sets.s_prime) {
    throw Error("weak_inverse_sets_disagree",
                "independent right and left scans produced different sets");
  }
  return sets;
}

PropertyReport commuting_closure_check(const Loop& l, int max_order) {
  const WeakInverseSets sets = weak_inverse_sets(l, max_order);
  const auto& s = sets.s_prime;
  const auto member = [&](const Permutation& p) {
    return std::binary_search(s.begin(), s.end(), p);
  };
  if (!member(Permutation::identity(l.order()))) {
    return fail("commuting_closure", {}, "identity permutation missing from the set");
  }
  for (size_t i = 0; i < s.size(); ++i) {
    if (!member(inverse(s[i]))) {
      return fail("commuting_closure", {static_cast<int>(i)}, "inverse not in the set");
    }
    for (size_t j = 0; j < s.size(); ++j) {
      const Permutation ab = compose(s[i], s[j]);
      if (ab == compose(s[j], s[i]) && !member(ab)) {
        return fail("commuting_closure", {static_cast<int>(i), static_cast<int>(j)},
                    "commuting product not in the set");
      }
    }
  }
  PropertyReport r = pass("commuting_closure");
  r.detail = std::to_string(s.size()) + " weak inverse permutations";
  return r;
}

PropertyReport involution_preserving_check(const Loop& l, const Permutation& alpha) {
  if (alpha.degree() != l.order()) {
    throw DegreeMismatch("permutation degree " + std::to_string(alpha.degree()) +
                         " does not match loop order " + std::to_string(l.order()));
  }
  const Permutation jr = l.j_rho();
  bool involution = compose(alpha, alpha).is_identity();
  bool preserves = true;
  for (int x = 0; x < l.order() && preserves; ++x) {
    preserves = alpha(jr(x)) == jr(alpha(x));
  }
  const bool antecedent = involution && preserves;
  PropertyReport r;
  r.property = "involution_preserving";
  r.flags["involution"] = involution;
  r.flags["preserves_right_inverse"] = preserves;
  r.flags["vacuous"] = !antecedent;
  if (!antecedent) {
    r.holds = true;
    r.detail = involution ? "does not preserve the right inverse map; vacuous pass"
                          : "not an involution; vacuous pass";
    return r;
  }
  const PropertyReport wip = is_weak_inverse_permutation(l, alpha);
  r.holds = wip.holds;
  r.witness = wip.witness;
  r.detail = wip.holds ? "involution preserving the right inverse map; weak inverse confirmed"
                       : "antecedent holds but the weak inverse test fails";
  return r;
}

std::string FlagVector::bits() const {
  std::string out;
  for (bool b : {commutative, associative, exponent2, wip, cip, aip, m1}) {
    out += b ? '1' : '0';
  }
  return out;
}

FlagVector FlagVector::from_bits(const std::string& bits) {
  if (bits.size() != 7 || bits.find_first_not_of("01") != std::string::npos) {
    throw Error("bad_flag_vector", "expected 7 characters of 0/1, got '" + bits + "'");
  }
  FlagVector f;
  f.commutative = bits[0] == '1';
  f.associative = bits[1] == '1';
  f.exponent2 = bits[2] == '1';
  f.wip = bits[3] == '1';
  f.cip = bits[4] == '1';
  f.aip = bits[5] == '1';
  f.m1 = bits[6] == '1';
  return f;
}

FlagVector classify(const Loop& l) {
  const int n = l.order();
  FlagVector f;
  f.commutative = true;
  for (int x = 0; x < n && f.commutative; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (l.mul(x, y) != l.mul(y, x)) {
        f.commutative = false;
        break;
      }
    }
  }
  f.associative = true;
  for (int x = 0; x < n && f.associative; ++x) {
    for (int y = 0; y < n && f.associative; ++y) {
      for (int z = 0; z < n; ++z) {
        if (l.mul(l.mul(x, y), z) != l.mul(x, l.mul(y, z))) {
          f.associative = false;
          break;
        }
      }
    }
  }
  f.exponent2 = true;
  for (int x = 0; x < n; ++x) {
    if (l.mul(x, x) != l.identity()) {
      f.exponent2 = false;
      break;
    }
  }
  f.wip = is_wip(l, WipCriterion::Definitional).holds;
  for (WipCriterion c : {WipCriterion::RightIdentity, WipCriterion::LeftIdentity,
                         WipCriterion::OperatorRho, WipCriterion::OperatorLambda}) {
    if (is_wip(l, c).holds != f.wip) {
      throw Error("wip_criteria_disagree",
                  std::string("criterion ") + wip_criterion_name(c) +
                      " disagrees with the definitional scan");
    }
  }
  f.cip = is_cip(l).holds;
  f.aip = is_aip(l).holds;
  f.m1 = is_m_inverse(l, 1).holds;
  if (is_m_inverse(l, -1).holds != f.wip || is_m_inverse(l, 0).holds != f.cip) {
    throw Error("m_inverse_mismatch",
                "m=-1/m=0 scans disagree with the wip/cip predicates");
  }
  return f;
}

}  // namespace loopkit
