#include "loopkit/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loopkit/catalog.hpp"
#include "loopkit/io.hpp"
#include "loopkit/isotopy.hpp"
#include "loopkit/loop.hpp"
#include "loopkit/properties.hpp"
#include "loopkit/theorems.hpp"

namespace loopkit::cli {

namespace {

using nlohmann::ordered_json;

struct Outcome {
  ordered_json payload;
  bool failed = false;  // a property check came back false; the run itself is valid
  std::string human;
};

[[noreturn]] void fail_at(const std::string& path, const std::string& message) {
  throw io::ParseError(message, path, 0, 0);
}

std::string perm_line(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.degree(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p(i));
  }
  return out;
}

std::string witness_text(const std::vector<int>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out + ")";
}

ordered_json loop_json(const Loop& l) {
  return ordered_json{{"order", l.order()}, {"identity", l.identity()}, {"rows", l.rows()}};
}

ordered_json triple_json(const IsotopismTriple& t) {
  return ordered_json{{"a", t.a.images()}, {"b", t.b.images()}, {"c", t.c.images()}};
}

ordered_json report_json(const PropertyReport& r) {
  ordered_json j;
  j["property"] = r.property;
  j["holds"] = r.holds;
  j["witness"] = r.witness ? ordered_json(*r.witness) : ordered_json();
  j["detail"] = r.detail;
  j["flags"] = ordered_json::object();
  for (const auto& [name, value] : r.flags) j["flags"][name] = value;
  return j;
}

std::string report_line(const PropertyReport& r) {
  std::string out = r.property;
  out += r.holds ? ": holds" : ": fails";
  if (r.witness) out += "  witness=" + witness_text(*r.witness);
  if (!r.detail.empty()) out += "  " + r.detail;
  return out;
}

ordered_json verdict_json(const TheoremVerdict& v) {
  ordered_json violations = ordered_json::array();
  for (const TheoremViolation& viol : v.violations) {
    violations.push_back(ordered_json{{"context", viol.context}, {"witness", viol.witness}});
  }
  ordered_json j;
  j["theorem_id"] = v.theorem_id;
  j["instances_checked"] = v.instances_checked;
  j["passed"] = v.passed;
  j["violations"] = violations;
  j["notes"] = v.notes;
  return j;
}

WipCriterion criterion_from_name(const std::string& name) {
  if (name == "definitional") return WipCriterion::Definitional;
  if (name == "right_identity") return WipCriterion::RightIdentity;
  if (name == "left_identity") return WipCriterion::LeftIdentity;
  if (name == "operator_rho") return WipCriterion::OperatorRho;
  return WipCriterion::OperatorLambda;
}

Outcome cmd_validate(const std::string& path) {
  const Loop l = io::read_loop_file(path);
  Outcome out;
  out.payload["loop"] = loop_json(l);
  out.human = "valid loop of order " + std::to_string(l.order()) + " with identity " +
              std::to_string(l.identity());
  return out;
}

Outcome cmd_props(const std::string& path, const std::optional<std::string>& criterion,
                  const std::optional<int>& m) {
  const Loop l = io::read_loop_file(path);
  const FlagVector flags = classify(l);
  Outcome out;
  out.payload["flags"] = ordered_json{{"commutative", flags.commutative},
                                      {"associative", flags.associative},
                                      {"exponent2", flags.exponent2},
                                      {"wip", flags.wip},
                                      {"cip", flags.cip},
                                      {"aip", flags.aip},
                                      {"m1", flags.m1}};
  out.payload["bits"] = flags.bits();
  std::ostringstream human;
  human << "commutative " << flags.commutative << "\n"
        << "associative " << flags.associative << "\n"
        << "exponent2   " << flags.exponent2 << "\n"
        << "wip         " << flags.wip << "\n"
        << "cip         " << flags.cip << "\n"
        << "aip         " << flags.aip << "\n"
        << "m1          " << flags.m1;
  ordered_json reports = ordered_json::array();
  if (criterion) {
    const PropertyReport r = is_wip(l, criterion_from_name(*criterion));
    reports.push_back(report_json(r));
    out.failed = out.failed || !r.holds;
    human << "\n" << report_line(r);
  }
  if (m) {
    const PropertyReport r = is_m_inverse(l, *m);
    reports.push_back(report_json(r));
    out.failed = out.failed || !r.holds;
    human << "\n" << report_line(r);
  }
  if (!reports.empty()) out.payload["reports"] = reports;
  out.human = human.str();
  return out;
}

Outcome cmd_inverses(const std::string& path) {
  const Loop l = io::read_loop_file(path);
  Outcome out;
  out.payload["j_rho"] = l.j_rho().images();
  out.payload["j_lambda"] = l.j_lambda().images();
  out.human = "j_rho    " + perm_line(l.j_rho()) + "\nj_lambda " + perm_line(l.j_lambda());
  return out;
}

Outcome cmd_isotope_apply(const std::string& loop_path, const std::string& triple_path) {
  const Loop g = io::read_loop_file(loop_path);
  const IsotopismTriple t = io::read_triple_file(triple_path);
  if (t.degree() != g.order()) {
    fail_at(triple_path, "triple degree " + std::to_string(t.degree()) +
                             " does not match loop order " + std::to_string(g.order()));
  }
  try {
    const Loop h = apply_isotopism(g, t);
    Outcome out;
    out.payload["loop"] = loop_json(h);
    out.human = io::write_loop(h);
    return out;
  } catch (const Error& e) {
    fail_at(triple_path, e.what());
  }
}

Outcome cmd_isotope_principal(const std::string& loop_path, int f, int g_elem) {
  const Loop g = io::read_loop_file(loop_path);
  if (f < 0 || f >= g.order() || g_elem < 0 || g_elem >= g.order()) {
    fail_at(loop_path, "elements f=" + std::to_string(f) + " g=" + std::to_string(g_elem) +
                           " must lie in 0.." + std::to_string(g.order() - 1));
  }
  const Loop h = principal_isotope(g, f, g_elem);
  Outcome out;
  out.payload["f"] = f;
  out.payload["g"] = g_elem;
  out.payload["loop"] = loop_json(h);
  out.human = io::write_loop(h);
  return out;
}

Outcome cmd_tcheck(const std::string& g_path, const std::string& h_path,
                   const std::string& triple_path) {
  const Loop g = io::read_loop_file(g_path);
  const Loop h = io::read_loop_file(h_path);
  const IsotopismTriple t = io::read_triple_file(triple_path);
  try {
    const TConditionReport r = check_t_condition(g, h, t);
    const auto yn = [](bool b) { return b ? "yes" : "no"; };
    Outcome out;
    out.payload = ordered_json{{"t1", r.t1}, {"t2", r.t2}, {"t3", r.t3}, {"t", r.t}};
    out.failed = !r.t;
    out.human = std::string("t1=") + yn(r.t1) + " t2=" + yn(r.t2) + " t3=" + yn(r.t3) +
                " t=" + yn(r.t) + "\n" +
                (r.t ? "the triple satisfies the t condition"
                     : "the triple does not satisfy the t condition");
    return out;
  } catch (const Error& e) {
    fail_at(triple_path, e.what());
  }
}

Outcome cmd_search_isotopism(const std::string& g_path, const std::string& h_path,
                             std::optional<long> limit, int max_order, int workers) {
  const Loop g = io::read_loop_file(g_path);
  const Loop h = io::read_loop_file(h_path);
  try {
    const std::vector<IsotopismTriple> found = find_isotopisms(g, h, limit, max_order, workers);
    Outcome out;
    out.payload["count"] = found.size();
    if (limit) out.payload["limit"] = *limit;
    ordered_json triples = ordered_json::array();
    for (const IsotopismTriple& t : found) triples.push_back(triple_json(t));
    out.payload["triples"] = triples;
    std::ostringstream human;
    human << found.size() << " isotopism" << (found.size() == 1 ? "" : "s");
    for (const IsotopismTriple& t : found) {
      human << "\na " << perm_line(t.a) << "\nb " << perm_line(t.b) << "\nc " << perm_line(t.c);
    }
    out.human = human.str();
    return out;
  } catch (const Error& e) {
    fail_at(g_path, e.what());
  }
}

Outcome cmd_search_iso(const std::string& g_path, const std::string& h_path, int workers) {
  const Loop g = io::read_loop_file(g_path);
  const Loop h = io::read_loop_file(h_path);
  const std::vector<Permutation> maps = find_isomorphisms(g, h, workers);
  Outcome out;
  out.payload["count"] = maps.size();
  ordered_json images = ordered_json::array();
  for (const Permutation& p : maps) images.push_back(p.images());
  out.payload["maps"] = images;
  std::ostringstream human;
  human << maps.size() << " isomorphism" << (maps.size() == 1 ? "" : "s");
  for (const Permutation& p : maps) human << "\n" << perm_line(p);
  out.human = human.str();
  return out;
}

Outcome cmd_search_aut(const std::string& path, int max_order, int workers) {
  const Loop g = io::read_loop_file(path);
  try {
    const std::vector<IsotopismTriple> auts = autotopisms(g, max_order, workers);
    Outcome out;
    out.payload["count"] = auts.size();
    ordered_json triples = ordered_json::array();
    for (const IsotopismTriple& t : auts) triples.push_back(triple_json(t));
    out.payload["triples"] = triples;
    std::ostringstream human;
    human << auts.size() << " autotopism" << (auts.size() == 1 ? "" : "s");
    for (const IsotopismTriple& t : auts) {
      human << "\na " << perm_line(t.a) << "\nb " << perm_line(t.b) << "\nc " << perm_line(t.c);
    }
    out.human = human.str();
    return out;
  } catch (const Error& e) {
    fail_at(path, e.what());
  }
}

Outcome cmd_wipset(const std::string& path, int max_order) {
  const Loop l = io::read_loop_file(path);
  try {
    const WeakInverseSets sets = weak_inverse_sets(l, max_order);
    Outcome out;
    out.payload["count"] = sets.s_prime.size();
    ordered_json members = ordered_json::array();
    std::ostringstream human;
    human << sets.s_prime.size() << " weak inverse permutation"
          << (sets.s_prime.size() == 1 ? "" : "s");
    for (const Permutation& alpha : sets.s_prime) {
      const PropertyReport r = is_weak_inverse_permutation(l, alpha);
      members.push_back(ordered_json{{"images", alpha.images()},
                                     {"right", r.flags.at("right")},
                                     {"left", r.flags.at("left")}});
      human << "\n"
            << perm_line(alpha) << "  right=" << r.flags.at("right")
            << " left=" << r.flags.at("left");
    }
    out.payload["members"] = members;
    out.human = human.str();
    return out;
  } catch (const Error& e) {
    fail_at(path, e.what());
  }
}

Outcome cmd_catalog_build(int order, const std::string& filter_name, const std::string& out_dir,
                          int max_order, int workers) {
  const CatalogFilter filter = filter_name == "wip"   ? CatalogFilter::WipOnly
                               : filter_name == "cip" ? CatalogFilter::CipOnly
                                                      : CatalogFilter::All;
  const std::vector<CatalogEntry> entries = build_catalog(order, filter, max_order, workers);
  write_catalog(entries, out_dir);
  long loops = 0;
  for (const CatalogEntry& e : entries) loops += e.members;
  Outcome out;
  out.payload["order"] = order;
  out.payload["filter"] = filter_name;
  out.payload["reduced_loops"] = loops;
  out.payload["classes"] = entries.size();
  out.payload["out"] = out_dir;
  ordered_json listing = ordered_json::array();
  std::ostringstream human;
  human << loops << " reduced loop" << (loops == 1 ? "" : "s") << " in " << entries.size()
        << " class" << (entries.size() == 1 ? "" : "es") << " under " << out_dir;
  for (const CatalogEntry& e : entries) {
    std::ostringstream name;
    name << "n" << e.loop.order() << "_c" << std::setfill('0') << std::setw(3) << e.iso_class_id
         << ".loop";
    listing.push_back(ordered_json{{"path", name.str()},
                                   {"flags", e.flags.bits()},
                                   {"class", e.iso_class_id},
                                   {"members", e.members}});
    human << "\n" << name.str() << "  flags=" << e.flags.bits() << "  members=" << e.members;
  }
  out.payload["entries"] = listing;
  out.human = human.str();
  return out;
}

Outcome cmd_verify_paper(const std::optional<int>& order, const std::optional<std::string>& out_path,
                         int max_order, int workers) {
  VerificationOptions opts;
  opts.max_order = max_order;
  opts.workers = workers;
  if (order) {
    opts.transfer_order = *order;
    opts.artzy_order = *order;
  }
  const std::vector<TheoremVerdict> verdicts = verify_suite(opts);
  Outcome out;
  out.payload["transfer_order"] = opts.transfer_order;
  out.payload["artzy_order"] = opts.artzy_order;
  ordered_json list = ordered_json::array();
  std::ostringstream human;
  for (const TheoremVerdict& v : verdicts) {
    list.push_back(verdict_json(v));
    out.failed = out.failed || !v.passed;
    human << v.theorem_id << ": " << (v.passed ? "pass" : "FAIL") << " ("
          << v.instances_checked << " instances)\n";
    for (const TheoremViolation& viol : v.violations) {
      human << "  violation " << viol.context << " witness=" << witness_text(viol.witness)
            << "\n";
    }
    for (const std::string& note : v.notes) human << "  " << note << "\n";
  }
  out.payload["verdicts"] = list;
  if (out_path) {
    std::ofstream f(*out_path);
    if (!f) fail_at(*out_path, "cannot open file for writing");
    f << out.payload.dump(2) << "\n";
    out.payload["out"] = *out_path;
    human << "report written to " << *out_path << "\n";
  }
  out.human = human.str();
  return out;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  std::optional<int> guard_override;
  if (const char* env = std::getenv("LOOPKIT_MAX_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 12) {
      RunResult r;
      r.exit_code = 2;
      r.diagnostic =
          std::string("LOOPKIT_MAX_ORDER must be an integer in 1..12, got '") + env + "'";
      return r;
    }
    guard_override = static_cast<int>(v);
  }
  const auto guard = [&](int fallback) { return guard_override.value_or(fallback); };

  CLI::App app{"finite loop analysis: properties, inverses, isotopy, catalogs", "loopkit"};
  app.require_subcommand(1);
  int workers = 0;
  bool human = false;
  app.add_option("--workers", workers, "worker threads for searches and sweeps (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--human", human, "append a readable rendering after the record");

  auto* validate = app.add_subcommand("validate", "parse a table file and check the loop axioms");
  validate->fallthrough();
  std::string validate_file;
  validate->add_option("file", validate_file, ".loop file")->required();

  auto* props = app.add_subcommand("props", "classify a loop; optionally run one named check");
  props->fallthrough();
  std::string props_file;
  std::string props_criterion;
  int props_m = 0;
  props->add_option("file", props_file, ".loop file")->required();
  auto* props_criterion_opt =
      props
          ->add_option("--criterion", props_criterion,
                       "single weak inverse criterion: definitional, right_identity, "
                       "left_identity, operator_rho, operator_lambda")
          ->check(CLI::IsMember({"definitional", "right_identity", "left_identity",
                                 "operator_rho", "operator_lambda"}));
  auto* props_m_opt =
      props->add_option("--m", props_m, "check the m-inverse identity for this m");

  auto* inverses = app.add_subcommand("inverses", "print the right and left inverse maps");
  inverses->fallthrough();
  std::string inverses_file;
  inverses->add_option("file", inverses_file, ".loop file")->required();

  auto* isotope = app.add_subcommand("isotope", "build loop isotopes");
  isotope->fallthrough();
  isotope->require_subcommand(1);
  auto* iso_apply = isotope->add_subcommand("apply", "apply a permutation triple");
  iso_apply->fallthrough();
  std::string iso_apply_loop;
  std::string iso_apply_triple;
  iso_apply->add_option("loop", iso_apply_loop, ".loop file")->required();
  iso_apply->add_option("triple", iso_apply_triple, "triple file (three permutation lines)")
      ->required();
  auto* iso_principal =
      isotope->add_subcommand("principal", "principal isotope through elements f and g");
  iso_principal->fallthrough();
  std::string iso_principal_loop;
  int iso_f = 0;
  int iso_g = 0;
  iso_principal->add_option("loop", iso_principal_loop, ".loop file")->required();
  iso_principal->add_option("f", iso_f, "row element f")->required();
  iso_principal->add_option("g", iso_g, "column element g")->required();

  auto* tcheck = app.add_subcommand("tcheck", "evaluate the t condition for an isotopism");
  tcheck->fallthrough();
  std::string tcheck_g;
  std::string tcheck_h;
  std::string tcheck_triple;
  tcheck->add_option("source", tcheck_g, "source .loop file")->required();
  tcheck->add_option("target", tcheck_h, "target .loop file")->required();
  tcheck->add_option("triple", tcheck_triple, "triple file")->required();

  auto* search = app.add_subcommand("search", "exhaustive searches");
  search->fallthrough();
  search->require_subcommand(1);
  auto* s_isotopism = search->add_subcommand("isotopism", "all isotopisms between two loops");
  s_isotopism->fallthrough();
  std::string si_g;
  std::string si_h;
  long si_limit = 0;
  s_isotopism->add_option("source", si_g, "source .loop file")->required();
  s_isotopism->add_option("target", si_h, "target .loop file")->required();
  auto* si_limit_opt =
      s_isotopism->add_option("--limit", si_limit, "stop after this many")->check(
          CLI::PositiveNumber);
  auto* s_iso = search->add_subcommand("iso", "all isomorphisms between two loops");
  s_iso->fallthrough();
  std::string sm_g;
  std::string sm_h;
  s_iso->add_option("source", sm_g, "source .loop file")->required();
  s_iso->add_option("target", sm_h, "target .loop file")->required();
  auto* s_aut = search->add_subcommand("aut", "the autotopism group of a loop");
  s_aut->fallthrough();
  std::string sa_g;
  s_aut->add_option("loop", sa_g, ".loop file")->required();

  auto* wipset = app.add_subcommand("wipset", "weak inverse permutations of a loop");
  wipset->fallthrough();
  std::string wipset_file;
  wipset->add_option("file", wipset_file, ".loop file")->required();

  auto* catalog = app.add_subcommand("catalog", "enumerate and persist loop catalogs");
  catalog->fallthrough();
  catalog->require_subcommand(1);
  auto* cat_build =
      catalog->add_subcommand("build", "enumerate reduced loops, dedupe, write to disk");
  cat_build->fallthrough();
  int cat_order = 0;
  std::string cat_filter = "all";
  std::string cat_out;
  cat_build->add_option("--order", cat_order, "loop order")
      ->required()
      ->check(CLI::Range(1, guard(6)));
  cat_build->add_option("--filter", cat_filter, "keep only wip or cip classes")
      ->check(CLI::IsMember({"wip", "cip"}));
  cat_build->add_option("--out", cat_out, "output directory")->required();

  auto* verify = app.add_subcommand("verify-paper", "run the full theorem harness");
  verify->fallthrough();
  int verify_order = 0;
  std::string verify_out;
  auto* verify_order_opt =
      verify->add_option("--order", verify_order, "cap both catalog sweeps at this order")
          ->check(CLI::Range(1, guard(6)));
  auto* verify_out_opt =
      verify->add_option("--out", verify_out, "also write the payload to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForAllHelp&) {
    RunResult r;
    r.human = app.help("", CLI::AppFormatMode::All);
    return r;
  } catch (const CLI::CallForHelp&) {
    RunResult r;
    const CLI::App* target = &app;
    while (true) {
      const auto subs = target->get_subcommands();
      if (subs.empty()) break;
      target = subs.back();
    }
    r.human = target->help();
    return r;
  } catch (const CLI::ParseError& e) {
    RunResult r;
    r.exit_code = 2;
    r.diagnostic = e.what();
    return r;
  }

  const auto started = std::chrono::steady_clock::now();
  std::string command;
  std::vector<std::string> inputs;
  Outcome out;
  try {
    if (app.got_subcommand(validate)) {
      command = "validate";
      inputs = {validate_file};
      out = cmd_validate(validate_file);
    } else if (app.got_subcommand(props)) {
      command = "props";
      inputs = {props_file};
      std::optional<std::string> criterion;
      if (props_criterion_opt->count() > 0) criterion = props_criterion;
      std::optional<int> m;
      if (props_m_opt->count() > 0) m = props_m;
      out = cmd_props(props_file, criterion, m);
    } else if (app.got_subcommand(inverses)) {
      command = "inverses";
      inputs = {inverses_file};
      out = cmd_inverses(inverses_file);
    } else if (app.got_subcommand(isotope)) {
      if (isotope->got_subcommand(iso_apply)) {
        command = "isotope apply";
        inputs = {iso_apply_loop, iso_apply_triple};
        out = cmd_isotope_apply(iso_apply_loop, iso_apply_triple);
      } else {
        command = "isotope principal";
        inputs = {iso_principal_loop};
        out = cmd_isotope_principal(iso_principal_loop, iso_f, iso_g);
      }
    } else if (app.got_subcommand(tcheck)) {
      command = "tcheck";
      inputs = {tcheck_g, tcheck_h, tcheck_triple};
      out = cmd_tcheck(tcheck_g, tcheck_h, tcheck_triple);
    } else if (app.got_subcommand(search)) {
      if (search->got_subcommand(s_isotopism)) {
        command = "search isotopism";
        inputs = {si_g, si_h};
        std::optional<long> limit;
        if (si_limit_opt->count() > 0) limit = si_limit;
        out = cmd_search_isotopism(si_g, si_h, limit, guard(7), workers);
      } else if (search->got_subcommand(s_iso)) {
        command = "search iso";
        inputs = {sm_g, sm_h};
        out = cmd_search_iso(sm_g, sm_h, workers);
      } else {
        command = "search aut";
        inputs = {sa_g};
        out = cmd_search_aut(sa_g, guard(6), workers);
      }
    } else if (app.got_subcommand(wipset)) {
      command = "wipset";
      inputs = {wipset_file};
      out = cmd_wipset(wipset_file, guard(6));
    } else if (app.got_subcommand(catalog)) {
      command = "catalog build";
      out = cmd_catalog_build(cat_order, cat_filter, cat_out, guard(6), workers);
    } else {
      command = "verify-paper";
      std::optional<int> order;
      if (verify_order_opt->count() > 0) order = verify_order;
      std::optional<std::string> out_path;
      if (verify_out_opt->count() > 0) out_path = verify_out;
      out = cmd_verify_paper(order, out_path, guard(6), workers);
    }
  } catch (const Error& e) {
    RunResult r;
    r.exit_code = 2;
    r.diagnostic = e.what();
    return r;
  } catch (const std::exception& e) {
    RunResult r;
    r.exit_code = 2;
    r.diagnostic = e.what();
    return r;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);

  RunResult r;
  r.exit_code = out.failed ? 1 : 0;
  r.report["command"] = command;
  r.report["inputs"] = inputs;
  r.report["outcome"] = out.failed ? "failure" : "success";
  r.report["payload"] = out.payload;
  r.report["duration_ms"] = elapsed.count();
  if (human) r.human = out.human;
  return r;
}

int main_entry(int argc, char** argv) {
  const RunResult r = run(std::vector<std::string>(argv + 1, argv + argc));
  if (!r.report.is_null()) std::cout << r.report.dump(2) << "\n";
  if (!r.human.empty()) {
    std::cout << r.human;
    if (r.human.back() != '\n') std::cout << "\n";
  }
  if (!r.diagnostic.empty()) std::cerr << r.diagnostic << "\n";
  return r.exit_code;
}

}  // namespace loopkit::cli
