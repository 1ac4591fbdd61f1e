// Command-line front end. Every verb builds a JSON report; the human form is
// rendered from it. Exit codes: 0 ok, 1 violation or failed verification,
// 2 input error, 3 inconclusive at the given budget.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "skewpbw.hpp"

using namespace skewpbw;

namespace {

enum Exit { ok = 0, violation = 1, input_error = 2, inconclusive = 3 };

struct Loaded {
  std::string name;
  RingPtr ring;
  std::optional<Grading> grading;
  std::shared_ptr<Extension const> extension;
  std::optional<VerifyResult> verify;
};

Loaded load(std::string const& source) {
  Loaded out;
  if (source.rfind("corpus:", 0) == 0) {
    CorpusEntry const& e = corpus::by_name(source.substr(7));
    out.name = e.name;
    out.ring = e.ring;
    out.grading = e.grading;
    out.extension = e.extension;
    if (e.extension) out.verify = verify_presentation(*e.extension);
    return out;
  }
  Definition def = load_definition(source);
  out.name = def.name.empty() ? source : def.name;
  out.ring = def.ring;
  out.grading = def.grading;
  if (def.extension) {
    out.verify = verify_presentation(*def.extension);
    out.extension = def.extension;
  }
  return out;
}

ExtensionPtr need_extension(Loaded const& l) {
  if (!l.extension) throw error(errc::shape_mismatch, l.name + " defines no extension");
  if (!l.verify->ok)
    throw error(errc::overlap_fails, l.verify->check + ": " + l.verify->description);
  return l.extension;
}

json elements(FiniteRing const& R, ElementSet const& S) {
  json out = json::array();
  for (elem_t x : S) out.push_back(R.format(x));
  return out;
}

json predicate(FiniteRing const& R, PredicateResult const& p) {
  json j = {{"holds", p.holds}};
  if (p.bounded) j["word_cap"] = p.word_cap;
  if (p.witness)
    j["witness"] = {{"a", R.format(p.witness->a)},
                    {"b", R.format(p.witness->b)},
                    {"map", p.witness->map_index}};
  return j;
}

json verify_json(Loaded const& l) {
  json j = {{"ring", l.name}, {"ring_size", l.ring->size()}};
  if (l.grading) j["grading"] = l.grading->labels();
  if (l.extension) {
    j["presentation"] = {{"ok", l.verify->ok}};
    if (!l.verify->ok)
      j["presentation"].update({{"check", l.verify->check},
                                {"description", l.verify->description},
                                {"lhs", format_terms(*l.ring, l.verify->lhs)},
                                {"rhs", format_terms(*l.ring, l.verify->rhs)}});
    if (l.verify->ok && l.grading && l.extension->flags().bijective) {
      GradedProfile const g = is_graded_extension(*l.extension, *l.grading);
      json conds = json::array();
      for (auto const& c : g.conditions) {
        json cj = {{"name", c.name}, {"ok", c.ok}};
        if (!c.detail.empty()) cj["detail"] = c.detail;
        conds.push_back(cj);
      }
      j["graded"] = {{"graded_extension", g.is_graded_extension},
                     {"connected", g.connected},
                     {"conditions", conds}};
    }
  }
  return j;
}

json radicals_json(Loaded const& l) {
  FiniteRing const& R = *l.ring;
  RingProfile const p = classify_ring(l.ring);
  return {{"N", elements(R, p.nilpotents)},
          {"J", elements(R, p.jacobson_radical)},
          {"N_*", elements(R, p.prime_radical)},
          {"N^*", elements(R, p.upper_nilradical)},
          {"L", elements(R, p.levitzki_radical)}};
}

json classify_json(Loaded const& l) {
  FiniteRing const& R = *l.ring;
  RingProfile const p = classify_ring(l.ring);
  json ring = {{"size", R.size()},
               {"NI", p.NI},
               {"NJ", p.NJ},
               {"2-primal", p.two_primal},
               {"weakly 2-primal", p.weakly_two_primal},
               {"reduced", p.reduced},
               {"domain", p.domain},
               {"symmetric", p.symmetric},
               {"reversible", p.reversible},
               {"semicommutative", p.semicommutative},
               {"right duo", p.right_duo},
               {"left duo", p.left_duo},
               {"abelian", p.abelian},
               {"Dedekind-finite", p.dedekind_finite}};
  if (p.ni_witness)
    ring["NI witness"] = {R.format(p.ni_witness->first), R.format(p.ni_witness->second)};
  json out = {{"ring", ring}};
  if (l.extension) {
    SigmaSystem const& sys = l.extension->system();
    out["maps"] = {{"Sigma-compatible", predicate(R, is_sigma_compatible(sys))},
                   {"Delta-compatible", predicate(R, is_delta_compatible(sys))},
                   {"weak Sigma-compatible", predicate(R, is_weak_sigma_compatible(sys))},
                   {"weak Delta-compatible", predicate(R, is_weak_delta_compatible(sys))},
                   {"Sigma-rigid", predicate(R, is_sigma_rigid(sys))},
                   {"N(R) Sigma-rigid", predicate(R, is_sigma_rigid_subset(sys, p.nilpotents))}};
    ExtensionFlags const& f = l.extension->flags();
    out["presentation"] = {{"verified", l.verify->ok},
                           {"bijective", f.bijective},
                           {"quasi-commutative", f.quasi_commutative},
                           {"derivation type", f.derivation_type},
                           {"endomorphism type", f.endomorphism_type}};
  }
  return out;
}

void print_value(std::ostream& os, json const& v, int indent) {
  std::string const pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (auto const& [k, x] : v.items()) {
      if (x.is_structured() && !(x.is_array() && !x.empty() && x.front().is_primitive())) {
        os << pad << k << ":\n";
        print_value(os, x, indent + 2);
      } else {
        os << pad << k << ": ";
        print_value(os, x, 0);
      }
    }
  } else if (v.is_array()) {
    if (!v.empty() && v.front().is_structured()) {
      for (auto const& x : v) {
        os << pad << "-\n";
        print_value(os, x, indent + 2);
      }
      return;
    }
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i)
      os << (i ? ", " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
    os << "}\n";
  } else if (v.is_string()) {
    os << v.get<std::string>() << "\n";
  } else {
    os << v.dump() << "\n";
  }
}

void print_report(json const& rep) {
  if (rep.contains("checks")) {
    for (auto const& c : rep["checks"]) {
      std::cout << c["id"].get<std::string>() << " " << c["instance"].get<std::string>() << ": "
                << c["verdict"].get<std::string>() << "\n";
      auto show = [&](char const* key) {
        if (!c.contains(key)) return;
        for (auto const& cl : c[key]) {
          std::cout << "  " << key[0] << " " << cl["name"].get<std::string>() << " = "
                    << cl["value"].get<std::string>() << " ("
                    << cl["evidence"].get<std::string>() << ")";
          if (cl.contains("witness")) std::cout << " witness: " << cl["witness"].get<std::string>();
          std::cout << "\n";
        }
      };
      show("preconditions");
      show("conclusions");
      if (c.contains("witness")) std::cout << "  witness: " << c["witness"].get<std::string>() << "\n";
      if (c.contains("notes"))
        for (auto const& n : c["notes"]) std::cout << "  note: " << n.get<std::string>() << "\n";
    }
    return;
  }
  if (rep.contains("result") && rep["result"].is_string() && rep.size() <= 2) {
    std::cout << rep["result"].get<std::string>() << "\n";
    return;
  }
  print_value(std::cout, rep, 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic and NI/NJ checks for skew PBW extensions over finite rings"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable report");

  std::string file, lhs, rhs, expr, property = "not-NI", family = "swap", name, output;
  std::vector<std::string> theorems;
  SearchBudget budget;
  bool anyway = false;
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--degree", budget.degree_cap, "Degree cap")->check(CLI::PositiveNumber);
    sub->add_option("--support", budget.support_cap, "Support cap")->check(CLI::PositiveNumber);
    sub->add_option("--exponent", budget.exponent_cap, "Exponent cap")->check(CLI::PositiveNumber);
    sub->add_option("--pairs", budget.pair_budget, "Pair budget")->check(CLI::PositiveNumber);
  };
  auto file_opt = [&](CLI::App* sub) {
    sub->add_option("file", file, "Definition file or corpus:NAME")->required();
  };

  auto* verify = app.add_subcommand("verify", "Check ring, maps and presentation");
  file_opt(verify);
  auto* radicals = app.add_subcommand("radicals", "List N, J, N_*, N^*, L");
  file_opt(radicals);
  auto* classify = app.add_subcommand("classify", "Ring profile, map predicates, flags");
  file_opt(classify);
  auto* mul = app.add_subcommand("mul", "Normal form of lhs * rhs");
  file_opt(mul);
  mul->add_option("lhs", lhs)->required();
  mul->add_option("rhs", rhs)->required();
  auto* nil = app.add_subcommand("nilpotent", "Nilpotency probe");
  file_opt(nil);
  nil->add_option("expr", expr)->required();
  nil->add_option("--exponent", budget.exponent_cap, "Exponent cap")->check(CLI::PositiveNumber);
  auto* check = app.add_subcommand("check", "Run theorem checks T1..T10");
  file_opt(check);
  check->add_option("--theorem,-t", theorems, "Check ids (default: all that fit)");
  check->add_flag("--anyway", anyway, "Evaluate conclusions when preconditions fail");
  add_budget(check);
  auto* search = app.add_subcommand("search", "Counterexample search over a family");
  search->add_option("--property", property, "not-NI | not-weak-compatible | not-Sigma-rigid | not-NI-reduced-base");
  search->add_option("--family", family, "swap | derivation-invariant | identity");
  add_budget(search);
  auto* corp = app.add_subcommand("corpus", "Built-in examples");
  corp->require_subcommand(1);
  corp->add_subcommand("list", "List entries");
  auto* exp = corp->add_subcommand("export", "Write an entry as a definition file");
  exp->add_option("name", name)->required();
  exp->add_option("-o,--output", output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? ok : input_error;
  }

  auto const start = std::chrono::steady_clock::now();
  json rep;
  int code = ok;
  try {
    if (*verify) {
      Loaded const l = load(file);
      rep = verify_json(l);
      if (l.verify && !l.verify->ok) code = violation;
    } else if (*radicals) {
      rep = radicals_json(load(file));
    } else if (*classify) {
      rep = classify_json(load(file));
    } else if (*mul) {
      ExtensionPtr const A = need_extension(load(file));
      rep["result"] = to_string(parse_polynomial(A, lhs) * parse_polynomial(A, rhs));
    } else if (*nil) {
      ExtensionPtr const A = need_extension(load(file));
      SkewPolynomial const f = parse_polynomial(A, expr);
      ProbeResult const p = nilpotency_probe(f, budget.exponent_cap);
      rep["result"] = to_string(p);
      rep["f"] = to_string(f);
      if (p.unknown()) code = inconclusive;
    } else if (*check) {
      Loaded const l = load(file);
      Instance inst{l.name, need_extension(l), l.grading};
      std::vector<TheoremId> ids;
      for (auto const& t : theorems) ids.push_back(parse_theorem_id(t));
      if (ids.empty()) ids = all_theorems();
      for (TheoremId id : ids)
        if (!theorems.empty() && !shape_compatible(id, inst))
          throw error(errc::wrong_shape, to_string(id) + ": " + shape_problem(id, inst));
      CheckContext ctx(inst, budget);
      json checks = json::array();
      json timings = json::object();
      bool any_inconclusive = false;
      for (TheoremId id : ids) {
        if (!shape_compatible(id, inst)) continue;
        TheoremReport const r = run_check({id, inst, budget, anyway}, ctx);
        checks.push_back(report_json(r));
        timings[to_string(id)] = r.seconds;
        if (r.verdict == Verdict::violated) code = violation;
        if (r.verdict == Verdict::inconclusive) any_inconclusive = true;
      }
      if (code == ok && any_inconclusive) code = inconclusive;
      rep["checks"] = checks;
      rep["timings"] = timings;
    } else if (*search) {
      SearchOutcome const o = counterexample_search(parse_search_property(property),
                                                    parse_search_family(family), budget);
      rep = {{"property", property},
             {"family", family},
             {"outcome", o.found ? "Found" : "Exhausted"},
             {"examined", o.examined},
             {"skipped", o.skipped}};
      if (o.found) {
        rep["instance"] = o.instance->name();
        rep["witness"] = o.witness;
      }
      rep["budget"] = budget_json(budget);
    } else if (*corp) {
      if (corp->got_subcommand("list")) {
        json list = json::array();
        for (auto const& e : corpus::all()) {
          json j = {{"name", e.name}, {"size", e.ring->size()}};
          if (e.extension) j["variables"] = e.extension->vars();
          if (!e.shadows.empty()) j["shadows"] = e.shadows;
          list.push_back(j);
        }
        rep["entries"] = list;
      } else {
        json const doc = export_entry(corpus::by_name(name));
        if (output.empty()) {
          std::cout << doc.dump(2) << "\n";
        } else {
          std::ofstream out(output);
          if (!out) throw error(errc::parse_error, "cannot write " + output);
          out << doc.dump(2) << "\n";
        }
        return ok;
      }
    }
  } catch (error const& e) {
    bool const budget_hit = e.code() == errc::budget_exceeded;
    json err = {{"error", to_string(e.code())}, {"message", e.what()}};
    if (as_json) std::cout << err.dump(2) << "\n";
    else std::cerr << e.what() << "\n";
    return budget_hit ? inconclusive : input_error;
  }

  double const seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (as_json) {
    json out = {{"report", rep}, {"exit", code}};
    out["timings"] = {{"total_seconds", seconds}};
    if (rep.contains("timings")) {
      out["timings"]["checks"] = rep["timings"];
      out["report"].erase("timings");
    }
    std::cout << out.dump(2) << "\n";
  } else {
    rep.erase("timings");
    print_report(rep);
  }
  return code;
}
