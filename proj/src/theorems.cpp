#include "loopkit/theorems.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "loopkit/catalog.hpp"
#include "loopkit/properties.hpp"
#include "parallel.hpp"

namespace loopkit {

namespace {

std::string fmt(const Permutation& p) {
  std::string out = "(";
  for (int i = 0; i < p.degree(); ++i) {
    if (i) out += ",";
    out += std::to_string(p(i));
  }
  return out + ")";
}

void require_isotopism(const Loop& g, const Loop& h, const IsotopismTriple& t) {
  const PropertyReport r = check_isotopism(g, h, t);
  if (!r.holds) {
    const std::vector<int>& w = *r.witness;
    throw NotAnIsotopism("triple fails at x=" + std::to_string(w[0]) +
                         " y=" + std::to_string(w[1]));
  }
}

bool exponent_two(const Loop& l) {
  for (int x = 0; x < l.order(); ++x) {
    if (l.mul(x, x) != l.identity()) return false;
  }
  return true;
}

bool has_aip_either_form(const Loop& l) {
  const PropertyReport r = is_aip(l);
  return r.holds || r.flags.at("lambda_form");
}

// Target table of mul_H(xA, yB) = (xy)C; null when the quasigroup has no
// two-sided identity and so is not a loop.
std::optional<Loop> try_isotope(const Loop& g, const Permutation& a, const Permutation& b,
                                const Permutation& c) {
  const int n = g.order();
  const Permutation ai = inverse(a);
  const Permutation bi = inverse(b);
  std::vector<int> cells(static_cast<size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) cells[u * n + v] = c(g.mul(ai(u), bi(v)));
  }
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = cells[cand * n + x] == x && cells[x * n + cand] == x;
    }
    if (ok) return Loop::from_cells(n, std::move(cells));
  }
  return std::nullopt;
}

void finish(TheoremVerdict& v) {
  std::sort(v.violations.begin(), v.violations.end());
  v.passed = v.violations.empty();
  if (v.instances_checked <= 0) {
    throw Error("vacuous_run", v.theorem_id + " checked no instances");
  }
}

void merge_verdict(TheoremVerdict& dst, const TheoremVerdict& src) {
  dst.instances_checked += src.instances_checked;
  dst.violations.insert(dst.violations.end(), src.violations.begin(), src.violations.end());
  for (const std::string& note : src.notes) {
    if (std::find(dst.notes.begin(), dst.notes.end(), note) == dst.notes.end()) {
      dst.notes.push_back(note);
    }
  }
}

// J_lam R_x J_rho B = C J_lam' R'_{xA} J_rho' and the dual, for every x, as
// whole permutations. One instance per x.
void translation_identities_core(const Loop& g, const Loop& h, const IsotopismTriple& t,
                                 const std::string& context, TheoremVerdict& v) {
  const Permutation jr = g.j_rho();
  const Permutation jl = g.j_lambda();
  const Permutation jrp = h.j_rho();
  const Permutation jlp = h.j_lambda();
  for (int x = 0; x < g.order(); ++x) {
    ++v.instances_checked;
    const Permutation right_lhs =
        compose(compose(compose(jl, g.right_translation(x)), jr), t.b);
    const Permutation right_rhs =
        compose(compose(compose(t.c, jlp), h.right_translation(t.a(x))), jrp);
    if (right_lhs != right_rhs) v.violations.push_back({context + "form=right", {x}});
    const Permutation left_lhs =
        compose(compose(compose(jr, g.left_translation(x)), jl), t.a);
    const Permutation left_rhs =
        compose(compose(compose(t.c, jrp), h.left_translation(t.b(x))), jlp);
    if (left_lhs != left_rhs) v.violations.push_back({context + "form=left", {x}});
  }
}

// One of the four autotopism equivalences; rhs is "C is an isomorphism".
// Adds one instance; consequents are checked whenever the membership holds.
void osborn_variant(const Loop& g, const Loop& h, const IsotopismTriple& t, int variant,
                    bool rhs, const std::string& context, TheoremVerdict& v) {
  ++v.instances_checked;
  const Loop& side = (variant == 1 || variant == 3) ? g : h;
  const Permutation ident = Permutation::identity(side.order());
  int a = 0;
  int b = 0;
  if (variant == 1 || variant == 3) {
    a = inverse(t.a)(h.identity());
    b = inverse(t.b)(h.identity());
  } else {
    a = t.a(g.identity());
    b = t.b(g.identity());
  }
  const Permutation ra = side.right_translation(a);
  const Permutation lb = side.left_translation(b);
  if (variant == 1 || variant == 2) {
    const Permutation jr = side.j_rho();
    const Permutation jl = side.j_lambda();
    const Permutation u = compose(compose(jr, lb), jl);
    const Permutation w = compose(compose(jl, ra), jr);
    const bool lhs = check_isotopism(side, side, {u, w, ident}).holds;
    if (lhs != rhs) v.violations.push_back({context + " check=equivalence", {a, b}});
    if (lhs) {
      const Permutation ralb = compose(ra, lb);
      if (!check_isotopism(side, side, {w, u, ralb}).holds) {
        v.violations.push_back({context + " check=consequent", {a, b}});
      }
      if (exponent_two(side) && !check_isotopism(side, side, {ra, lb, ralb}).holds) {
        v.violations.push_back({context + " check=exponent2", {a, b}});
      }
    }
  } else {
    const bool lhs = check_isotopism(side, side, {lb, ra, ident}).holds;
    if (lhs != rhs) v.violations.push_back({context + " check=equivalence", {a, b}});
    if (lhs) {
      if (!compose(ra, lb).is_identity()) {
        v.violations.push_back({context + " check=translation_product", {a, b}});
      }
      if (side.mul(b, a) != side.identity()) {
        v.violations.push_back({context + " check=ba_identity", {a, b}});
      }
      if (!is_cip(g).holds || !is_cip(h).holds) {
        v.violations.push_back({context + " check=crossed_inverse", {a, b}});
      }
    }
  }
}

// alpha = C A^{-1} and beta = C B^{-1} are weak inverse permutations, they
// coincide, and the inverse maps of target and source collapse together.
void t_corollaries_core(const Loop& g, const Loop& h, const IsotopismTriple& t,
                        const std::string& context, TheoremVerdict& v) {
  ++v.instances_checked;
  const Permutation alpha = compose(t.c, inverse(t.a));
  const Permutation beta = compose(t.c, inverse(t.b));
  const PropertyReport ar = is_weak_inverse_permutation(g, alpha);
  if (!ar.holds) v.violations.push_back({context + "check=alpha", *ar.witness});
  const PropertyReport br = is_weak_inverse_permutation(g, beta);
  if (!br.holds) v.violations.push_back({context + "check=beta", *br.witness});
  if (!(alpha == beta)) v.violations.push_back({context + "check=alpha_equals_beta", {}});
  if ((h.j_rho() == h.j_lambda()) != (g.j_rho() == g.j_lambda())) {
    v.violations.push_back({context + "check=inverse_map_biconditional", {}});
  }
}

// Every principal isotope without an isomorphism back to the source must lack
// the crossed inverse property; those that do lack it are counted as findings.
void artzy_core(const Loop& g, const std::string& context, TheoremVerdict& v,
                long& noncip_noniso) {
  const int n = g.order();
  for (int f = 0; f < n; ++f) {
    for (int gg = 0; gg < n; ++gg) {
      ++v.instances_checked;
      const Loop iso = principal_isotope(g, f, gg);
      if (!find_isomorphisms(g, iso).empty()) continue;
      if (is_cip(iso).holds) {
        v.violations.push_back({context + "f=" + std::to_string(f) +
                                    " g=" + std::to_string(gg),
                                {f, gg}});
      } else {
        ++noncip_noniso;
      }
    }
  }
}

}  // namespace

const Loop& counterexample_loop() {
  static const Loop l = Loop::from_cells(5, {0, 1, 2, 3, 4, 1, 3, 0, 4, 2, 2, 0, 4, 1, 3,
                                             3, 4, 1, 2, 0, 4, 2, 3, 0, 1});
  return l;
}

const IsotopismTriple& counterexample_triple() {
  static const IsotopismTriple t{Permutation({1, 3, 0, 4, 2}), Permutation({2, 0, 4, 1, 3}),
                                 Permutation::identity(5)};
  return t;
}

TheoremVerdict verify_wip_transfer(const Loop& g, const Loop& h, const IsotopismTriple& t) {
  require_isotopism(g, h, t);
  if (!check_t_condition(g, h, t).t) {
    throw HypothesisUnmet("the t condition fails for this triple");
  }
  const PropertyReport gw = is_wip(g);
  const PropertyReport hw = is_wip(h);
  if (!gw.holds && !hw.holds) {
    throw HypothesisUnmet("neither loop has the weak inverse property");
  }
  TheoremVerdict v;
  v.theorem_id = "wip_transfer";
  v.instances_checked = 1;
  if (gw.holds && hw.holds) {
    v.notes.push_back("direction=both");
  } else if (gw.holds) {
    v.notes.push_back("direction=forward");
    v.violations.push_back({"target loses the weak inverse property", *hw.witness});
  } else {
    v.notes.push_back("direction=converse");
    v.violations.push_back({"source loses the weak inverse property", *gw.witness});
  }
  finish(v);
  return v;
}

TheoremVerdict verify_translation_identities(const Loop& g, const Loop& h,
                                             const IsotopismTriple& t) {
  require_isotopism(g, h, t);
  if (!is_wip(g).holds || !is_wip(h).holds) {
    throw HypothesisUnmet("both loops must have the weak inverse property");
  }
  TheoremVerdict v;
  v.theorem_id = "translation_identities";
  translation_identities_core(g, h, t, "", v);
  finish(v);
  return v;
}

TheoremVerdict verify_counterexample() {
  const Loop& g = counterexample_loop();
  const IsotopismTriple& t = counterexample_triple();
  TheoremVerdict v;
  v.theorem_id = "counterexample";
  ++v.instances_checked;
  try {
    validate_loop(g.rows());
  } catch (const LoopError&) {
    v.violations.push_back({"step=validate", {}});
  }
  ++v.instances_checked;
  bool commutative = true;
  for (int x = 0; x < g.order() && commutative; ++x) {
    for (int y = x + 1; y < g.order(); ++y) {
      if (g.mul(x, y) != g.mul(y, x)) {
        commutative = false;
        v.violations.push_back({"step=commutative", {x, y}});
        break;
      }
    }
  }
  ++v.instances_checked;
  const PropertyReport w = is_wip(g);
  if (!w.holds) v.violations.push_back({"step=wip", *w.witness});
  ++v.instances_checked;
  const PropertyReport iso = check_isotopism(g, g, t);
  if (!iso.holds) v.violations.push_back({"step=self_isotopism", *iso.witness});
  ++v.instances_checked;
  if (t.a == t.b || check_t_condition(g, g, t).t) {
    v.violations.push_back({"step=t_condition_fails", {}});
  }
  ++v.instances_checked;
  const Loop target = apply_isotopism(g, t);
  if (!(target == g) || !is_wip(target).holds) {
    v.violations.push_back({"step=isotope_wip", {}});
  }
  v.notes.push_back("the weak inverse property survives although the t condition fails");
  finish(v);
  return v;
}

TheoremVerdict verify_osborn_autotopism(const Loop& g, const Loop& h, const IsotopismTriple& t,
                                        int variant) {
  if (variant < 1 || variant > 4) {
    throw Error("bad_variant", "variant must be 1..4, got " + std::to_string(variant));
  }
  require_isotopism(g, h, t);
  if (!is_wip(g).holds) throw HypothesisUnmet("source loop lacks the weak inverse property");
  if (!is_wip(h).holds) throw HypothesisUnmet("target loop lacks the weak inverse property");
  if (variant == 3 && !has_aip_either_form(g)) {
    throw HypothesisUnmet("variant 3 needs the antiautomorphic inverse property in the source");
  }
  if (variant == 4 && !has_aip_either_form(h)) {
    throw HypothesisUnmet("variant 4 needs the antiautomorphic inverse property in the target");
  }
  TheoremVerdict v;
  v.theorem_id = "osborn_autotopism";
  const bool rhs = check_isotopism(g, h, {t.c, t.c, t.c}).holds;
  osborn_variant(g, h, t, variant, rhs, "variant=" + std::to_string(variant), v);
  if (variant == 1 || variant == 3) {
    v.notes.push_back("variant=" + std::to_string(variant) +
                      " a=" + std::to_string(inverse(t.a)(h.identity())) +
                      " b=" + std::to_string(inverse(t.b)(h.identity())));
  } else {
    v.notes.push_back("variant=" + std::to_string(variant) +
                      " a'=" + std::to_string(t.a(g.identity())) +
                      " b'=" + std::to_string(t.b(g.identity())));
  }
  v.notes.push_back(std::string("c_is_isomorphism=") + (rhs ? "true" : "false"));
  finish(v);
  return v;
}

TheoremVerdict verify_t_corollaries(const Loop& g, const Loop& h, const IsotopismTriple& t) {
  require_isotopism(g, h, t);
  if (!is_wip(g).holds) throw HypothesisUnmet("source loop lacks the weak inverse property");
  if (!check_t_condition(g, h, t).t) {
    throw HypothesisUnmet("the t condition fails for this triple");
  }
  if (!is_wip(h).holds) throw HypothesisUnmet("target loop lacks the weak inverse property");
  TheoremVerdict v;
  v.theorem_id = "t_corollaries";
  t_corollaries_core(g, h, t, "", v);
  finish(v);
  return v;
}

TheoremVerdict verify_t_isomorphy(const Loop& g, const Loop& h, const IsotopismTriple& t) {
  require_isotopism(g, h, t);
  if (!is_wip(g).holds || !is_wip(h).holds) {
    throw HypothesisUnmet("both loops must have the weak inverse property");
  }
  if (!check_t_condition(g, h, t).t) {
    throw HypothesisUnmet("the t condition fails for this triple");
  }
  TheoremVerdict v;
  v.theorem_id = "t_isomorphy";
  ++v.instances_checked;
  if (find_isomorphisms(g, h).empty()) v.violations.push_back({"check=isomorphic", {}});
  const bool c_iso = check_isotopism(g, h, {t.c, t.c, t.c}).holds;
  v.notes.push_back(std::string("c_is_isomorphism=") + (c_iso ? "true" : "false"));
  v.notes.push_back(std::string("a_equals_c=") + (t.a == t.c ? "true" : "false"));
  finish(v);
  return v;
}

TheoremVerdict verify_artzy_cip(const Loop& g) {
  if (!is_cip(g).holds) throw HypothesisUnmet("loop lacks the crossed inverse property");
  TheoremVerdict v;
  v.theorem_id = "artzy_cip";
  v.notes.push_back("principal isotopes stand in for all loop isotopes up to isomorphism");
  long noncip_noniso = 0;
  artzy_core(g, "", v, noncip_noniso);
  if (noncip_noniso > 0) {
    v.notes.push_back("non_crossed_inverse_non_isomorphic_isotopes=" +
                      std::to_string(noncip_noniso));
  }
  finish(v);
  return v;
}

namespace {

struct TransferChunk {
  TheoremVerdict transfer;
  TheoremVerdict corollaries;
  TheoremVerdict isomorphy;
  long a_equals_c = 0;
  long c_is_isomorphism = 0;
};

// All pairs (A, C) with B = A whose derived target is a loop meeting the t
// condition feed the transfer, corollary and isomorphy verdicts.
void sweep_t_triples(const Loop& g, const std::string& context, int workers,
                     TheoremVerdict& transfer, TheoremVerdict& corollaries,
                     TheoremVerdict& isomorphy, long& a_equals_c, long& c_is_isomorphism) {
  const std::vector<Permutation> perms = all_permutations(g.order());
  const long total = static_cast<long>(perms.size());
  std::vector<TransferChunk> chunks(
      std::min<long>(detail::resolve_workers(workers), total > 0 ? total : 1));
  detail::parallel_chunks(total, workers, [&](int chunk, long lo, long hi) {
    TransferChunk& out = chunks[chunk];
    for (long ai = lo; ai < hi; ++ai) {
      const Permutation& a = perms[ai];
      for (const Permutation& c : perms) {
        const std::optional<Loop> target = try_isotope(g, a, a, c);
        if (!target) continue;
        const IsotopismTriple triple{a, a, c};
        const TConditionReport tc = check_t_condition(g, *target, triple);
        if (tc.t2 != tc.t3) {
          out.transfer.violations.push_back(
              {context + "A=" + fmt(a) + " C=" + fmt(c) + " check=t2_t3_agreement", {}});
        }
        if (!tc.t) continue;
        const std::string where = context + "A=" + fmt(a) + " C=" + fmt(c) + " ";
        const bool target_wip = is_wip(*target).holds;
        ++out.transfer.instances_checked;
        if (!target_wip) out.transfer.violations.push_back({where + "check=target_wip", {}});
        if (target_wip) {
          t_corollaries_core(g, *target, triple, where, out.corollaries);
        } else {
          ++out.corollaries.instances_checked;
          out.corollaries.violations.push_back({where + "check=target_wip", {}});
        }
        ++out.isomorphy.instances_checked;
        if (find_isomorphisms(g, *target).empty()) {
          out.isomorphy.violations.push_back({where + "check=isomorphic", {}});
        }
        if (a == c) ++out.a_equals_c;
        if (check_isotopism(g, *target, {c, c, c}).holds) ++out.c_is_isomorphism;
      }
    }
  });
  for (const TransferChunk& chunk : chunks) {
    merge_verdict(transfer, chunk.transfer);
    merge_verdict(corollaries, chunk.corollaries);
    merge_verdict(isomorphy, chunk.isomorphy);
    a_equals_c += chunk.a_equals_c;
    c_is_isomorphism += chunk.c_is_isomorphism;
  }
}

// Autotopism triples feed the translation identities and all four autotopism
// equivalence variants.
void sweep_autotopisms(const Loop& g, const std::string& context, int max_order, int workers,
                       TheoremVerdict& trans_ids, TheoremVerdict& osborn) {
  const std::vector<IsotopismTriple> auts = autotopisms(g, max_order, workers);
  const bool aip = has_aip_either_form(g);
  const long total = static_cast<long>(auts.size());
  struct AutChunk {
    TheoremVerdict trans_ids;
    TheoremVerdict osborn;
  };
  std::vector<AutChunk> chunks(
      std::min<long>(detail::resolve_workers(workers), total > 0 ? total : 1));
  detail::parallel_chunks(total, workers, [&](int chunk, long lo, long hi) {
    AutChunk& out = chunks[chunk];
    for (long i = lo; i < hi; ++i) {
      const IsotopismTriple& t = auts[i];
      const std::string where = context + "A=" + fmt(t.a) + " B=" + fmt(t.b) +
                                " C=" + fmt(t.c) + " ";
      translation_identities_core(g, g, t, where, out.trans_ids);
      const bool rhs = check_isotopism(g, g, {t.c, t.c, t.c}).holds;
      for (int variant = 1; variant <= 4; ++variant) {
        if ((variant == 3 || variant == 4) && !aip) continue;
        osborn_variant(g, g, t, variant, rhs,
                       where + "variant=" + std::to_string(variant), out.osborn);
      }
    }
  });
  for (const AutChunk& chunk : chunks) {
    merge_verdict(trans_ids, chunk.trans_ids);
    merge_verdict(osborn, chunk.osborn);
  }
}

}  // namespace

std::vector<TheoremVerdict> verify_suite(const VerificationOptions& opts) {
  const Loop& fix = counterexample_loop();
  const IsotopismTriple& fixt = counterexample_triple();
  const IsotopismTriple trivial = IsotopismTriple::identity(fix.order());

  TheoremVerdict counter = verify_counterexample();
  TheoremVerdict transfer;
  transfer.theorem_id = "wip_transfer";
  TheoremVerdict trans_ids;
  trans_ids.theorem_id = "translation_identities";
  TheoremVerdict osborn;
  osborn.theorem_id = "osborn_autotopism";
  TheoremVerdict corollaries;
  corollaries.theorem_id = "t_corollaries";
  TheoremVerdict isomorphy;
  isomorphy.theorem_id = "t_isomorphy";
  TheoremVerdict artzy;
  artzy.theorem_id = "artzy_cip";

  std::vector<IsotopismTriple> fixture_triples;
  fixture_triples.push_back(trivial);
  for (const Permutation& phi : find_isomorphisms(fix, fix)) {
    fixture_triples.push_back({phi, phi, phi});
  }
  for (const IsotopismTriple& t : fixture_triples) {
    merge_verdict(transfer, verify_wip_transfer(fix, fix, t));
    merge_verdict(corollaries, verify_t_corollaries(fix, fix, t));
    merge_verdict(isomorphy, verify_t_isomorphy(fix, fix, t));
  }
  merge_verdict(trans_ids, verify_translation_identities(fix, fix, trivial));
  merge_verdict(trans_ids, verify_translation_identities(fix, fix, fixt));
  for (int variant = 1; variant <= 4; ++variant) {
    merge_verdict(osborn, verify_osborn_autotopism(fix, fix, fixt, variant));
  }
  merge_verdict(artzy, verify_artzy_cip(fix));

  std::map<int, std::vector<CatalogEntry>> wip_reps;
  for (int n = 1; n <= opts.transfer_order; ++n) {
    wip_reps[n] = build_catalog(n, CatalogFilter::WipOnly, opts.max_order, opts.workers);
  }

  long a_equals_c = 0;
  long c_is_isomorphism = 0;
  for (const auto& [n, entries] : wip_reps) {
    for (const CatalogEntry& entry : entries) {
      const std::string context = "order=" + std::to_string(n) +
                                  " class=" + std::to_string(entry.iso_class_id) + " ";
      sweep_t_triples(entry.loop, context, opts.workers, transfer, corollaries, isomorphy,
                      a_equals_c, c_is_isomorphism);
      sweep_autotopisms(entry.loop, context, opts.max_order, opts.workers, trans_ids, osborn);
    }
  }
  isomorphy.notes.push_back("a_equals_c_count=" + std::to_string(a_equals_c));
  isomorphy.notes.push_back("c_is_isomorphism_count=" + std::to_string(c_is_isomorphism));

  long empty_pairs = 0;
  for (const auto& [n, entries] : wip_reps) {
    for (const CatalogEntry& from : entries) {
      for (const CatalogEntry& to : entries) {
        if (from.iso_class_id == to.iso_class_id) continue;
        ++trans_ids.instances_checked;
        const std::vector<IsotopismTriple> found =
            find_isotopisms(from.loop, to.loop, std::nullopt, std::max(7, opts.max_order));
        if (found.empty()) {
          ++empty_pairs;
          continue;
        }
        const std::string context = "order=" + std::to_string(n) +
                                    " classes=" + std::to_string(from.iso_class_id) + "," +
                                    std::to_string(to.iso_class_id) + " ";
        for (const IsotopismTriple& t : found) {
          translation_identities_core(from.loop, to.loop, t,
                                      context + "A=" + fmt(t.a) + " ", trans_ids);
        }
      }
    }
  }
  trans_ids.notes.push_back("cross_class_pairs_without_isotopisms=" +
                            std::to_string(empty_pairs));

  for (int n = 1; n <= opts.artzy_order; ++n) {
    for (const CatalogEntry& entry :
         build_catalog(n, CatalogFilter::CipOnly, opts.max_order, opts.workers)) {
      const std::string context = "order=" + std::to_string(n) +
                                  " class=" + std::to_string(entry.iso_class_id) + " ";
      long noncip_noniso = 0;
      artzy_core(entry.loop, context, artzy, noncip_noniso);
      if (noncip_noniso > 0) {
        artzy.notes.push_back(context + "non_crossed_inverse_non_isomorphic_isotopes=" +
                              std::to_string(noncip_noniso));
      }
    }
  }

  finish(transfer);
  finish(trans_ids);
  finish(osborn);
  finish(corollaries);
  finish(isomorphy);
  finish(artzy);
  return {std::move(counter),     std::move(transfer),  std::move(trans_ids),
          std::move(osborn),      std::move(corollaries), std::move(isomorphy),
          std::move(artzy)};
}

}  // namespace loopkit
