#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "loopkit/isotopy.hpp"
#include "loopkit/loop.hpp"

namespace loopkit {

struct TheoremViolation {
  std::string context;
  std::vector<int> witness;

  friend bool operator==(const TheoremViolation&, const TheoremViolation&) = default;
  friend auto operator<=>(const TheoremViolation& s, const TheoremViolation& t) {
    return std::tie(s.context, s.witness) <=> std::tie(t.context, t.witness);
  }
};

struct TheoremVerdict {
  std::string theorem_id;
  long instances_checked = 0;
  std::vector<TheoremViolation> violations;
  bool passed = false;  // violations empty
  std::vector<std::string> notes;
};

// Bundled order-5 fixture: a commutative weak inverse property loop with a
// self-isotopism (A,B,I) whose components differ, so the t condition fails
// for that triple even though the isotope keeps the weak inverse property.
const Loop& counterexample_loop();
const IsotopismTriple& counterexample_triple();

TheoremVerdict verify_wip_transfer(const Loop& g, const Loop& h, const IsotopismTriple& t);
TheoremVerdict verify_translation_identities(const Loop& g, const Loop& h,
                                             const IsotopismTriple& t);
TheoremVerdict verify_counterexample();
TheoremVerdict verify_osborn_autotopism(const Loop& g, const Loop& h, const IsotopismTriple& t,
                                        int variant);
TheoremVerdict verify_t_corollaries(const Loop& g, const Loop& h, const IsotopismTriple& t);
TheoremVerdict verify_t_isomorphy(const Loop& g, const Loop& h, const IsotopismTriple& t);
TheoremVerdict verify_artzy_cip(const Loop& g);

struct VerificationOptions {
  int transfer_order = 5;  // cap for the weak-inverse transfer sweeps
  int artzy_order = 6;     // cap for the crossed-inverse isotope sweep
  int max_order = 6;       // guard passed to enumeration and search calls
  int workers = 0;
};

// Runs all seven checks over the bundled fixture and the generated catalogs,
// one verdict per check, in a fixed order.
std::vector<TheoremVerdict> verify_suite(const VerificationOptions& opts = {});

}  // namespace loopkit
