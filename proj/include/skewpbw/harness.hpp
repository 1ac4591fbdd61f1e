#pragma once

// Theorem checks T1..T10 over a finite instance, and counterexample search
// over parametrized families. Each check evaluates its preconditions and
// conclusions as three-valued clauses tagged exact or bounded; a Violated
// verdict needs exact evidence on both sides.

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewpbw/armendariz.hpp"
#include "skewpbw/classify.hpp"
#include "skewpbw/compat.hpp"
#include "skewpbw/corpus.hpp"
#include "skewpbw/graded.hpp"

namespace skewpbw {

enum class TheoremId { T1 = 1, T2, T3, T4, T5, T6, T7, T8, T9, T10 };

inline std::vector<TheoremId> all_theorems() {
  std::vector<TheoremId> out;
  for (int k = 1; k <= 10; ++k) out.push_back(static_cast<TheoremId>(k));
  return out;
}

inline std::string to_string(TheoremId id) { return "T" + std::to_string(static_cast<int>(id)); }

inline TheoremId parse_theorem_id(std::string const& s) {
  if (s.size() >= 2 && (s[0] == 'T' || s[0] == 't')) {
    std::string const digits = s.substr(1);
    if (digits.size() <= 2 && digits.find_first_not_of("0123456789") == std::string::npos) {
      int const k = std::stoi(digits);
      if (k >= 1 && k <= 10) return static_cast<TheoremId>(k);
    }
  }
  throw error(errc::param_range, "unknown check id '" + s + "' (expected T1..T10)");
}

enum class Verdict { consistent, violated, precondition_failed, inconclusive };

inline char const* to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "Consistent";
    case Verdict::violated: return "Violated";
    case Verdict::precondition_failed: return "PreconditionFailed";
    case Verdict::inconclusive: return "Inconclusive";
  }
  return "?";
}

enum class Tri { no, yes, unknown };
enum class Evidence { exact, bounded, unverifiable };

inline char const* to_string(Tri t) {
  switch (t) {
    case Tri::no: return "false";
    case Tri::yes: return "true";
    case Tri::unknown: return "unknown";
  }
  return "?";
}

inline char const* to_string(Evidence e) {
  switch (e) {
    case Evidence::exact: return "Exact";
    case Evidence::bounded: return "Bounded";
    case Evidence::unverifiable: return "Unverifiable";
  }
  return "?";
}

struct Clause {
  std::string name;
  Tri value = Tri::unknown;
  Evidence evidence = Evidence::exact;
  std::string detail;
  /// Concrete data behind a false value (elements, polynomials).
  std::string witness;

  bool exact_yes() const { return value == Tri::yes && evidence == Evidence::exact; }
  bool exact_no() const { return value == Tri::no && evidence == Evidence::exact; }
};

struct Instance {
  std::string name;
  ExtensionPtr extension;
  std::optional<Grading> grading;
};

inline Instance instance_of(CorpusEntry const& c) { return {c.name, c.extension, c.grading}; }

struct TheoremCheck {
  TheoremId id = TheoremId::T1;
  Instance instance;
  SearchBudget budget;
  /// Evaluate conclusions even when a precondition fails (reported, not judged).
  bool conclusions_anyway = false;
};

struct TheoremReport {
  TheoremId id = TheoremId::T1;
  std::string instance;
  std::vector<Clause> preconditions;
  std::vector<Clause> conclusions;
  Verdict verdict = Verdict::inconclusive;
  std::string witness;
  std::vector<std::string> notes;
  SearchBudget budget;
  double seconds = 0.0;
  /// The NI check the report relied on, for replay.
  std::optional<NICheckResult> ni;
};

// ---------------------------------------------------------------------------
// Clause algebra

namespace detail {

inline Clause clause(std::string name, Tri v, Evidence e, std::string detail = "",
                     std::string witness = "") {
  return {std::move(name), v, e, std::move(detail), std::move(witness)};
}

inline Clause exact_clause(std::string name, bool v, std::string witness = "") {
  return clause(std::move(name), v ? Tri::yes : Tri::no, Evidence::exact, "", std::move(witness));
}

/// Conjunction: any false wins (exact if some false is exact), then unknown.
inline Clause all_of(std::string name, std::vector<Clause> const& parts) {
  Clause out{std::move(name), Tri::yes, Evidence::exact, "", ""};
  std::vector<std::string> names;
  Clause const* no = nullptr;
  bool unknown = false;
  for (auto const& p : parts) {
    names.push_back(p.name);
    if (p.value == Tri::no && (!no || (p.evidence == Evidence::exact && !no->exact_no())))
      no = &p;
    if (p.value == Tri::unknown) unknown = true;
    if (p.value == Tri::yes && p.evidence != Evidence::exact) out.evidence = Evidence::bounded;
  }
  for (std::size_t i = 0; i < names.size(); ++i) out.detail += (i ? " and " : "") + names[i];
  if (no) {
    out.value = Tri::no;
    out.evidence = no->evidence;
    out.witness = no->name + ": " + no->witness;
  } else if (unknown) {
    out.value = Tri::unknown;
    out.evidence = Evidence::bounded;
  }
  return out;
}

/// Outcome of comparing two sides of an equivalence.
inline Verdict iff(Clause const& a, Clause const& b) {
  if (a.value == Tri::unknown || b.value == Tri::unknown) return Verdict::inconclusive;
  if (a.value == b.value) return Verdict::consistent;
  if (a.evidence == Evidence::exact && b.evidence == Evidence::exact) return Verdict::violated;
  return Verdict::inconclusive;
}

/// A conclusion that must hold.
inline Verdict must_hold(Clause const& c) {
  if (c.value == Tri::yes) return Verdict::consistent;
  if (c.exact_no()) return Verdict::violated;
  return Verdict::inconclusive;
}

inline Verdict combine(std::vector<Verdict> const& vs) {
  bool inconclusive = false;
  for (Verdict v : vs) {
    if (v == Verdict::violated) return v;
    if (v == Verdict::inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::inconclusive : Verdict::consistent;
}

inline std::string map_witness(FiniteRing const& R, MapWitness const& w, char const* what) {
  return "a = " + R.format(w.a) + ", b = " + R.format(w.b) + ", " + what + " #" +
         std::to_string(w.map_index);
}

inline std::string describe(NIWitness const& w) {
  std::string const op = w.kind == NIWitnessKind::sum            ? "f + g"
                         : w.kind == NIWitnessKind::left_product ? "h * f"
                                                                 : "f * h";
  std::string const g_role = w.kind == NIWitnessKind::sum ? "g = " : "h = ";
  return std::string(to_string(w.kind)) + ": f = " + to_string(w.f) + ", " + g_role +
         to_string(w.g) + ", " + op + " = " + to_string(w.result) + " is " +
         to_string(w.result_probe);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Shared per-instance computations

class CheckContext {
 public:
  CheckContext(Instance instance, SearchBudget budget)
      : instance_(std::move(instance)), budget_(budget) {
    if (!instance_.extension) throw error(errc::wrong_shape, "instance has no extension");
    if (!instance_.extension->verified())
      throw error(errc::unverified, "checks need a verified presentation");
  }

  Instance const& instance() const noexcept { return instance_; }
  SearchBudget const& budget() const noexcept { return budget_; }
  Extension const& A() const { return *instance_.extension; }
  FiniteRing const& R() const { return A().ring(); }
  SigmaSystem const& sys() const { return A().system(); }

  RingProfile const& profile() {
    if (!profile_) profile_ = classify_ring(A().base());
    return *profile_;
  }
  ElementSet const& N() { return profile().nilpotents; }

  PredicateResult const& weak_sigma() {
    if (!weak_sigma_) weak_sigma_ = is_weak_sigma_compatible(sys(), N());
    return *weak_sigma_;
  }
  PredicateResult const& weak_delta() {
    if (!weak_delta_) weak_delta_ = is_weak_delta_compatible(sys(), N());
    return *weak_delta_;
  }
  PredicateResult const& sigma_compat() {
    if (!sigma_compat_) sigma_compat_ = is_sigma_compatible(sys());
    return *sigma_compat_;
  }
  PredicateResult const& delta_compat() {
    if (!delta_compat_) delta_compat_ = is_delta_compatible(sys());
    return *delta_compat_;
  }

  NilpotencyProber const& prober() {
    if (!prober_) prober_.emplace(instance_.extension, budget_.exponent_cap);
    return *prober_;
  }

  /// Null when the window exceeds the budget; see diagnostic().
  ProbedWindow const* window() {
    if (!window_tried_) {
      window_tried_ = true;
      try {
        window_ = probe_window(prober(), budget_);
      } catch (error const& e) {
        if (e.code() != errc::budget_exceeded) throw;
        diagnostic_ = e.what();
      }
    }
    return window_ ? &*window_ : nullptr;
  }

  std::string const& diagnostic() const noexcept { return diagnostic_; }

  NICheckResult const& ni() {
    if (!ni_) {
      if (ProbedWindow const* w = window()) {
        try {
          ni_ = bounded_NI_check(prober(), *w, budget_.pair_budget);
        } catch (error const& e) {
          if (e.code() != errc::budget_exceeded) throw;
          diagnostic_ = e.what();
        }
      }
      if (!ni_) {
        ni_.emplace();
        ni_->verdict = NIVerdict::inconclusive;
        ni_->diagnostic = diagnostic_;
      }
    }
    return *ni_;
  }

  /// A is NI: refuted exactly by a replayable witness, or consistent at bounds.
  Clause a_ni() {
    NICheckResult const& r = ni();
    switch (r.verdict) {
      case NIVerdict::violation:
        return detail::clause("A is NI", Tri::no, Evidence::exact, "bounded_NI_check = Violation",
                              detail::describe(r.witnesses.front()));
      case NIVerdict::consistent:
        return detail::clause("A is NI", Tri::yes, Evidence::bounded,
                              "no violation among " + std::to_string(r.enumerated) + " elements");
      case NIVerdict::inconclusive: break;
    }
    return detail::clause("A is NI", Tri::unknown, Evidence::bounded,
                          r.diagnostic.empty() ? "unresolved probes" : r.diagnostic);
  }

  /// N(A) = S<x> compared on the window: a proved mismatch is exact, full
  /// agreement is bounded.
  Clause extended_equality(std::string name, ElementSet const& S) {
    ProbedWindow const* w = window();
    if (!w) return detail::clause(std::move(name), Tri::unknown, Evidence::bounded, diagnostic_);
    bool unresolved = false;
    for (std::size_t i = 0; i < w->elements.size(); ++i) {
      bool const member = coefficients_in(w->elements[i], S);
      ProbeResult const& p = w->probes[i];
      if ((member && p.not_nilpotent()) || (!member && p.nilpotent()))
        return detail::clause(std::move(name), Tri::no, Evidence::exact, "",
                              "f = " + to_string(w->elements[i]) +
                                  (member ? " has coefficients in the set but is "
                                          : " has a coefficient outside the set but is ") +
                                  to_string(p));
      if (p.unknown()) unresolved = true;
    }
    if (unresolved)
      return detail::clause(std::move(name), Tri::unknown, Evidence::bounded,
                            std::to_string(w->count(ProbeStatus::unknown)) + " unresolved probes");
    return detail::clause(std::move(name), Tri::yes, Evidence::bounded,
                          "agrees on " + std::to_string(w->elements.size()) + " elements");
  }

  Clause n_equality() { return extended_equality("N(A) = N(R)<x>", N()); }

  /// N*(A) = N*(R)<x>. N*(A) is N(A) once A is NI; a polynomial over N*(R)
  /// that is not nilpotent refutes the equality outright.
  Clause upper_equality() {
    std::string const name = "N*(A) = N*(R)<x>";
    ElementSet const& S = profile().upper_nilradical;
    if (ProbedWindow const* w = window())
      for (std::size_t i = 0; i < w->elements.size(); ++i)
        if (w->probes[i].not_nilpotent() && coefficients_in(w->elements[i], S))
          return detail::clause(name, Tri::no, Evidence::exact, "",
                                "f = " + to_string(w->elements[i]) +
                                    " has coefficients in N*(R) but is " +
                                    to_string(w->probes[i]));
    Clause ni = a_ni();
    if (ni.value != Tri::yes)
      return detail::clause(name, Tri::unknown, Evidence::unverifiable,
                            "N*(A) is only accessible through N(A) when A is NI");
    Clause c = extended_equality(name, S);
    if (c.value == Tri::no) c.evidence = Evidence::bounded;  // relies on N*(A) = N(A)
    return c;
  }

  Clause base_ni() {
    RingProfile const& p = profile();
    std::string w;
    if (p.ni_witness)
      w = "a = " + R().format(p.ni_witness->first) + ", b = " + R().format(p.ni_witness->second);
    return detail::exact_clause("R is NI", p.NI, w);
  }

  Clause sigma_rigid_N() {
    PredicateResult const r = is_sigma_rigid_subset(sys(), N());
    std::string w;
    if (r.witness)
      w = "r = " + R().format(r.witness->a) + ", sigma word #" +
          std::to_string(r.witness->map_index);
    return detail::exact_clause("N(R) is Sigma-rigid", r.holds, w);
  }

  Clause sigma_ideal_N() {
    if (!profile().NI) {
      Clause c = base_ni();
      c.name = "N(R) is a Sigma-ideal";
      return c;
    }
    PredicateResult const r = invariance(N(), sys(), InvarianceMode::sigma_ideal);
    std::string w;
    if (r.witness)
      w = "x = " + R().format(r.witness->a) + " at sigma_" + std::to_string(r.witness->map_index + 1);
    return detail::exact_clause("N(R) is a Sigma-ideal", r.holds, w);
  }

  Clause delta_invariant_N() {
    PredicateResult const r = invariance(N(), sys(), InvarianceMode::delta_invariant);
    std::string w;
    if (r.witness)
      w = "delta_" + std::to_string(r.witness->map_index + 1) + "(" + R().format(r.witness->a) +
          ") = " + R().format(r.witness->b) + " is not nilpotent";
    return detail::exact_clause("N(R) is Delta-invariant", r.holds, w);
  }

  Clause weak_sigma_clause() {
    PredicateResult const& r = weak_sigma();
    return detail::exact_clause("weak Sigma-compatible", r.holds,
                                r.witness ? detail::map_witness(R(), *r.witness, "sigma word") : "");
  }
  Clause weak_delta_clause() {
    PredicateResult const& r = weak_delta();
    Clause c = detail::exact_clause("weak Delta-compatible", r.holds,
                                    r.witness ? detail::map_witness(R(), *r.witness, "delta word")
                                              : "");
    if (r.holds && r.bounded) {
      c.evidence = Evidence::bounded;
      c.detail = "delta words up to length " + std::to_string(r.word_cap);
    }
    return c;
  }
  Clause sigma_compat_clause() {
    PredicateResult const& r = sigma_compat();
    return detail::exact_clause("Sigma-compatible", r.holds,
                                r.witness ? detail::map_witness(R(), *r.witness, "sigma word") : "");
  }
  Clause delta_compat_clause() {
    PredicateResult const& r = delta_compat();
    Clause c = detail::exact_clause("Delta-compatible", r.holds,
                                    r.witness ? detail::map_witness(R(), *r.witness, "delta word")
                                              : "");
    if (r.holds && r.bounded) {
      c.evidence = Evidence::bounded;
      c.detail = "delta words up to length " + std::to_string(r.word_cap);
    }
    return c;
  }

  /// Every proved-nilpotent window element (optionally filtered) has a
  /// verified quasi-regularity witness.
  Clause quasi_regular(std::string name,
                       std::function<bool(SkewPolynomial const&)> const& filter = {}) {
    ProbedWindow const* w = window();
    if (!w) return detail::clause(std::move(name), Tri::unknown, Evidence::bounded, diagnostic_);
    std::size_t count = 0;
    for (std::size_t i = 0; i < w->elements.size(); ++i) {
      if (!w->probes[i].nilpotent()) continue;
      if (filter && !filter(w->elements[i])) continue;
      ++count;
      if (!quasi_regularity_witness(w->elements[i], w->probes[i]).verified)
        return detail::clause(std::move(name), Tri::no, Evidence::exact, "",
                              "1 + f not inverted for f = " + to_string(w->elements[i]));
    }
    return detail::clause(std::move(name), Tri::yes, Evidence::bounded,
                          std::to_string(count) + " witnesses verified");
  }

  /// Every proved-nilpotent window element has coefficients in N(R).
  Clause nilpotents_over_N() {
    std::string const name = "nilpotents have coefficients in N(R)";
    ProbedWindow const* w = window();
    if (!w) return detail::clause(name, Tri::unknown, Evidence::bounded, diagnostic_);
    for (std::size_t i = 0; i < w->elements.size(); ++i)
      if (w->probes[i].nilpotent() && !coefficients_in(w->elements[i], N()))
        return detail::clause(name, Tri::no, Evidence::exact, "",
                              "f = " + to_string(w->elements[i]) + " is " +
                                  to_string(w->probes[i]));
    return detail::clause(name, Tri::yes, Evidence::bounded);
  }

  /// NJ approximated from below: refuted when A is not NI, otherwise its
  /// bounded face is the quasi-regularity of the nilpotent window.
  Clause a_nj() {
    Clause ni = a_ni();
    if (ni.value != Tri::yes) {
      ni.name = "A is NJ";
      if (ni.value == Tri::no) ni.detail = "NJ implies NI";
      return ni;
    }
    Clause q = quasi_regular("A is NJ");
    if (q.value == Tri::yes) q.detail = "A NI at bounds; " + q.detail;
    return q;
  }

  std::optional<ArmendarizResult> const& armendariz(std::string& diag) {
    if (!armendariz_tried_) {
      armendariz_tried_ = true;
      // all of R + R x_1 + ... + R x_n
      try {
        armendariz_ = bounded_skew_armendariz(instance_.extension, 1, A().vars() + 1,
                                              budget_.pair_budget);
      } catch (error const& e) {
        if (e.code() != errc::budget_exceeded) throw;
        armendariz_diag_ = e.what();
      }
    }
    diag = armendariz_diag_;
    return armendariz_;
  }

 private:
  Instance instance_;
  SearchBudget budget_;
  std::optional<RingProfile> profile_;
  std::optional<PredicateResult> weak_sigma_, weak_delta_, sigma_compat_, delta_compat_;
  std::optional<NilpotencyProber> prober_;
  bool window_tried_ = false;
  std::optional<ProbedWindow> window_;
  std::string diagnostic_;
  std::optional<NICheckResult> ni_;
  bool armendariz_tried_ = false;
  std::optional<ArmendarizResult> armendariz_;
  std::string armendariz_diag_;
};

// ---------------------------------------------------------------------------
// Shapes

/// Empty when the instance fits the check, else the reason.
inline std::string shape_problem(TheoremId id, Instance const& inst) {
  if (!inst.extension) return "no extension";
  ExtensionFlags const& f = inst.extension->flags();
  switch (id) {
    case TheoremId::T3:
    case TheoremId::T8:
    case TheoremId::T10:
      return f.derivation_type ? "" : "needs derivation type";
    case TheoremId::T6:
      if (!inst.grading) return "needs a grading";
      if (!f.bijective) return "needs a bijective extension";
      return is_graded_extension(*inst.extension, *inst.grading).is_graded_extension
                 ? ""
                 : "not a graded extension";
    case TheoremId::T7:
      return f.quasi_commutative && f.bijective ? "" : "needs a bijective quasi-commutative extension";
    case TheoremId::T9:
      return f.quasi_commutative ? "" : "needs quasi-commutative";
    default:
      return "";
  }
}

inline bool shape_compatible(TheoremId id, Instance const& inst) {
  return shape_problem(id, inst).empty();
}

// ---------------------------------------------------------------------------
// Checks

namespace detail {

struct Pairwise {
  std::vector<Clause> statements;
  Verdict verdict = Verdict::consistent;
  std::string witness;
  std::vector<std::string> notes;
};

/// All pairs of statements must agree; `key` must be decided.
inline Pairwise pairwise(std::vector<Clause> statements, std::pair<std::size_t, std::size_t> key) {
  Pairwise out;
  out.statements = std::move(statements);
  auto const& s = out.statements;
  bool inconclusive = iff(s[key.first], s[key.second]) != Verdict::consistent;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Verdict const v = iff(s[i], s[j]);
      std::string const tag = s[i].name + " <=> " + s[j].name;
      if (v == Verdict::violated) {
        out.verdict = Verdict::violated;
        out.witness = tag + ": " + (s[i].value == Tri::no ? s[i].witness : s[j].witness);
        return out;
      }
      if (v == Verdict::inconclusive) {
        if (s[i].value != Tri::unknown && s[j].value != Tri::unknown)
          inconclusive = true;  // decided but differing at bounds
        out.notes.push_back(tag + ": undecided");
      }
    }
  out.verdict = inconclusive ? Verdict::inconclusive : Verdict::consistent;
  return out;
}

}  // namespace detail

inline TheoremReport run_check(TheoremCheck const& check, CheckContext& ctx) {
  using namespace detail;
  auto const start = std::chrono::steady_clock::now();
  TheoremReport rep;
  rep.id = check.id;
  rep.instance = check.instance.name;
  rep.budget = check.budget;
  if (std::string const why = shape_problem(check.id, check.instance); !why.empty())
    throw error(errc::wrong_shape, to_string(check.id) + " on " + check.instance.name + ": " + why);

  // Conclusion verdicts, judged only when the preconditions hold.
  std::vector<Verdict> verdicts;
  std::string violation;
  auto conclude = [&](Clause c) {
    Verdict const v = must_hold(c);
    if (v == Verdict::violated && violation.empty()) violation = c.name + ": " + c.witness;
    verdicts.push_back(v);
    rep.conclusions.push_back(std::move(c));
  };
  auto equivalence = [&](Clause a, Clause b) {
    Verdict const v = iff(a, b);
    if (v == Verdict::violated && violation.empty())
      violation = a.name + " is " + to_string(a.value) + " but " + b.name + " is " +
                  to_string(b.value) + "; " + (a.value == Tri::no ? a.witness : b.witness);
    verdicts.push_back(v);
    rep.conclusions.push_back(std::move(a));
    rep.conclusions.push_back(std::move(b));
  };
  auto statements = [&](std::vector<Clause> s, std::pair<std::size_t, std::size_t> key) {
    Pairwise p = pairwise(std::move(s), key);
    if (p.verdict == Verdict::violated && violation.empty()) violation = p.witness;
    verdicts.push_back(p.verdict);
    for (auto& n : p.notes) rep.notes.push_back(std::move(n));
    for (auto& c : p.statements) rep.conclusions.push_back(std::move(c));
  };

  switch (check.id) {
    case TheoremId::T1:
      rep.preconditions = {ctx.weak_sigma_clause(), ctx.weak_delta_clause()};
      break;
    case TheoremId::T2: {
      Clause compat = all_of("(Sigma,Delta)-compatible",
                             {ctx.sigma_compat_clause(), ctx.delta_compat_clause()});
      RingProfile const& p = ctx.profile();
      std::string w2;
      for (elem_t a : p.nilpotents)
        if (!contains(p.prime_radical, a)) {
          w2 = "a = " + ctx.R().format(a) + " is nilpotent but not in the prime radical";
          break;
        }
      Clause branch_a = all_of("2-primal and compatible",
                               {exact_clause("2-primal", p.two_primal, w2), compat});
      Clause arm = clause("Sigma-skew Armendariz", Tri::unknown, Evidence::bounded);
      if (branch_a.value != Tri::yes && compat.value == Tri::yes) {
        std::string diag;
        auto const& a = ctx.armendariz(diag);
        if (!a) {
          arm.detail = diag;
        } else if (a->holds) {
          arm.value = Tri::yes;
          arm.detail = "degree <= 1, support <= " + std::to_string(a->support_cap);
        } else {
          arm.value = Tri::no;
          arm.evidence = Evidence::exact;
          arm.witness = "f = " + to_string(a->witness->f) + ", g = " + to_string(a->witness->g) +
                        ", fg = 0 but " + ctx.R().format(a->witness->a) + " * sigma^alpha(" +
                        ctx.R().format(a->witness->b) + ") != 0";
        }
      } else if (compat.value != Tri::yes) {
        arm = compat;
      }
      Clause branch_b = all_of("locally finite, compatible and Sigma-skew Armendariz",
                               {exact_clause("locally finite", p.locally_finite), compat, arm});
      Clause pre{"branch (a) or branch (b)", Tri::no, Evidence::exact, "", ""};
      if (branch_a.value == Tri::yes || branch_b.value == Tri::yes) {
        Clause const& taken = branch_a.value == Tri::yes ? branch_a : branch_b;
        pre.value = Tri::yes;
        pre.evidence = taken.evidence;
        pre.detail = taken.name;
      } else if (branch_a.value == Tri::unknown || branch_b.value == Tri::unknown) {
        pre.value = Tri::unknown;
        pre.evidence = Evidence::bounded;
        pre.detail = arm.detail;
      } else {
        pre.witness = branch_a.witness + "; " + branch_b.witness;
      }
      rep.notes.push_back(branch_a.name + ": " + to_string(branch_a.value));
      rep.notes.push_back(branch_b.name + ": " + to_string(branch_b.value));
      rep.preconditions = {pre};
      break;
    }
    case TheoremId::T5: {
      Clause ni = ctx.a_ni();
      Clause pre = clause("A is not refuted NI", Tri::unknown, Evidence::bounded, ni.detail);
      if (ni.value == Tri::no) {
        pre.value = Tri::no;
        pre.evidence = Evidence::exact;
        pre.witness = ni.witness;
      } else if (ni.value == Tri::yes) {
        pre.value = Tri::yes;
      }
      rep.preconditions = {pre};
      break;
    }
    case TheoremId::T6:
      rep.preconditions = {exact_clause("graded extension", true)};
      break;
    case TheoremId::T7: {
      RingProfile const& p = ctx.profile();
      std::string w;
      for (elem_t a : p.nilpotents)
        if (!contains(p.levitzki_radical, a)) {
          w = "a = " + ctx.R().format(a) + " is nilpotent but not in the Levitzki radical";
          break;
        }
      rep.preconditions = {exact_clause("weakly 2-primal", p.weakly_two_primal, w),
                           ctx.weak_sigma_clause()};
      break;
    }
    default:
      break;
  }

  bool pre_ok = true, pre_exact = true;
  for (auto const& c : rep.preconditions) {
    if (c.value == Tri::no && pre_ok) {
      pre_ok = false;
      rep.verdict = Verdict::precondition_failed;
      rep.witness = c.name + ": " + c.witness;
    }
    if (!c.exact_yes()) pre_exact = false;
  }
  bool pre_unknown = false;
  for (auto const& c : rep.preconditions) pre_unknown = pre_unknown || c.value == Tri::unknown;

  if (pre_ok || check.conclusions_anyway) {
    switch (check.id) {
      case TheoremId::T1:
        equivalence(ctx.base_ni(), ctx.a_ni());
        break;
      case TheoremId::T2:
        conclude(ctx.a_ni());
        break;
      case TheoremId::T3:
        equivalence(ctx.a_ni(),
                    all_of("N(R) is a Delta-invariant ideal and N(A) = N(R)<x>",
                           {ctx.base_ni(), ctx.delta_invariant_N(), ctx.n_equality()}));
        break;
      case TheoremId::T4: {
        Clause rigid = ctx.sigma_rigid_N();
        statements({all_of("(i)", {ctx.a_ni(), rigid}),
                    all_of("(ii)", {ctx.sigma_ideal_N(), ctx.n_equality()}),
                    all_of("(iii)", {rigid, ctx.base_ni(), ctx.upper_equality()})},
                   {0, 1});
        break;
      }
      case TheoremId::T5: {
        FiniteRing const& R = ctx.R();
        std::string bad;
        for (auto const& [key, v] : ctx.A().d())
          if (bad.empty() && !R.is_unit(v))
            bad = "d_" + std::to_string(key.first + 1) + "," + std::to_string(key.second + 1) +
                  " = " + R.format(v);
        conclude(exact_clause("every d_ij is a unit", bad.empty(), bad));
        conclude(exact_clause("R is Dedekind-finite", ctx.profile().dedekind_finite));
        conclude(ctx.base_ni());
        break;
      }
      case TheoremId::T6: {
        Grading const& g = *check.instance.grading;
        conclude(ctx.quasi_regular("homogeneous nilpotents are quasi-regular",
                                   [&](SkewPolynomial const& f) {
                                     return homogeneous_degree(f, g).has_value();
                                   }));
        Clause ni = ctx.a_ni();
        if (ni.value == Tri::no) ni.evidence = Evidence::exact;
        rep.conclusions.push_back(ni);
        if (is_connected(g)) {
          rep.conclusions.push_back(clause("J(A) meets R_0 in a nil ideal", Tri::yes,
                                           Evidence::exact, "R_0 is a field"));
          rep.notes.push_back("connected: NJ reduces to NI");
        } else {
          rep.conclusions.push_back(clause("J(A) meets R_0 in a nil ideal", Tri::unknown,
                                           Evidence::unverifiable,
                                           "J(A) is not computable from finite data"));
        }
        break;
      }
      case TheoremId::T7: {
        conclude(ctx.a_ni());
        conclude(ctx.quasi_regular("nilpotents are quasi-regular"));
        // r x_1 is nilpotent exactly when r is
        NilpotencyProber const& pr = ctx.prober();
        Monomial x1(ctx.A().vars());
        x1.exps[0] = 1;
        Clause face = clause("r x_1 nilpotent iff r nilpotent", Tri::yes, Evidence::exact);
        for (elem_t r = 0; r < ctx.R().size() && face.value != Tri::no; ++r) {
          SkewPolynomial const f = SkewPolynomial::monomial(check.instance.extension, r, x1);
          ProbeResult const p = pr.probe(f);
          bool const member = contains(ctx.N(), r);
          if (p.unknown()) {
            face.value = Tri::unknown;
            face.evidence = Evidence::bounded;
          } else if (p.nilpotent() != member) {
            face.value = Tri::no;
            face.evidence = Evidence::exact;
            face.witness = "f = " + to_string(f) + " is " + to_string(p);
          }
        }
        conclude(face);
        break;
      }
      case TheoremId::T8: {
        Clause ni = ctx.a_ni();
        if (ni.value == Tri::yes) {
          conclude(ni);
          Clause over = ctx.nilpotents_over_N();
          if (over.value == Tri::no) over.evidence = Evidence::bounded;  // leans on A NI
          conclude(over);
          conclude(ctx.quasi_regular("nilpotents are quasi-regular"));
        } else {
          rep.conclusions.push_back(ni);
          if (ni.value == Tri::no) {
            rep.notes.push_back("A is not NI, hence not NJ");
          } else {
            verdicts.push_back(Verdict::inconclusive);
          }
        }
        break;
      }
      case TheoremId::T9: {
        Clause eq = ctx.n_equality();
        Clause rigid = ctx.sigma_rigid_N();
        statements({all_of("(i)", {ctx.a_nj(), eq}),
                    all_of("(ii)", {ctx.sigma_ideal_N(), eq}),
                    all_of("(iii)", {ctx.a_ni(), rigid}),
                    all_of("(iv)", {rigid, ctx.base_ni(), ctx.upper_equality()})},
                   {1, 2});
        break;
      }
      case TheoremId::T10: {
        Clause rni = ctx.base_ni();
        statements({ctx.a_nj(), ctx.a_ni(), all_of("(iii)", {rni, ctx.n_equality()}),
                    all_of("(iv)", {rni, ctx.upper_equality()})},
                   {1, 2});
        rep.conclusions[0].name = "(i) " + rep.conclusions[0].name;
        rep.conclusions[1].name = "(ii) " + rep.conclusions[1].name;
        break;
      }
    }
  }

  if (pre_ok) {
    if (pre_unknown) {
      rep.verdict = Verdict::inconclusive;
      rep.notes.push_back("precondition undecided");
    } else {
      rep.verdict = combine(verdicts);
      if (rep.verdict == Verdict::violated && !pre_exact) {
        rep.verdict = Verdict::inconclusive;
        rep.notes.push_back("conclusion fails but a precondition holds only at bounds: " +
                            violation);
      } else if (rep.verdict == Verdict::violated) {
        rep.witness = violation;
      }
    }
  }
  if (ctx.window() == nullptr) rep.notes.push_back(ctx.diagnostic());
  if (ctx.ni().verdict != NIVerdict::inconclusive || ctx.window()) rep.ni = ctx.ni();
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline TheoremReport run_check(TheoremCheck const& check) {
  CheckContext ctx(check.instance, check.budget);
  return run_check(check, ctx);
}

/// Runs the shape-compatible ids in order, sharing one context.
inline std::vector<TheoremReport> run_checks(Instance const& inst, std::vector<TheoremId> const& ids,
                                             SearchBudget const& budget,
                                             bool conclusions_anyway = false) {
  CheckContext ctx(inst, budget);
  std::vector<TheoremReport> out;
  for (TheoremId id : ids)
    if (shape_compatible(id, inst)) out.push_back(run_check({id, inst, budget, conclusions_anyway}, ctx));
  return out;
}

// ---------------------------------------------------------------------------
// Counterexample search

enum class SearchProperty { not_ni, not_weak_compatible, not_sigma_rigid, not_ni_reduced_base };
enum class SearchFamily { swap, derivation_invariant, identity };

inline char const* to_string(SearchProperty p) {
  switch (p) {
    case SearchProperty::not_ni: return "not-NI";
    case SearchProperty::not_weak_compatible: return "not-weak-compatible";
    case SearchProperty::not_sigma_rigid: return "not-Sigma-rigid";
    case SearchProperty::not_ni_reduced_base: return "not-NI-reduced-base";
  }
  return "?";
}

inline char const* to_string(SearchFamily f) {
  switch (f) {
    case SearchFamily::swap: return "swap";
    case SearchFamily::derivation_invariant: return "derivation-invariant";
    case SearchFamily::identity: return "identity";
  }
  return "?";
}

inline SearchProperty parse_search_property(std::string const& s) {
  for (auto p : {SearchProperty::not_ni, SearchProperty::not_weak_compatible,
                 SearchProperty::not_sigma_rigid, SearchProperty::not_ni_reduced_base})
    if (s == to_string(p)) return p;
  throw error(errc::param_range, "unknown property '" + s + "'");
}

inline SearchFamily parse_search_family(std::string const& s) {
  for (auto f : {SearchFamily::swap, SearchFamily::derivation_invariant, SearchFamily::identity})
    if (s == to_string(f)) return f;
  throw error(errc::param_range, "unknown family '" + s + "'");
}

namespace corpus {

/// Z_p^k with sigma the cyclic shift of coordinates.
inline ExtensionPtr cyclic_shift(int p, int k) {
  require(is_small_prime(p) && k >= 2 && k <= 4, "cyclic_shift parameters");
  std::size_t const m = static_cast<std::size_t>(k);
  FiniteRing::constants_t c(m, std::vector<coords_t>(m, coords_t(m, 0)));
  for (std::size_t i = 0; i < m; ++i) c[i][i][i] = 1;
  auto R = make_ring(std::vector<int>(m, p), c, coords_t(m, 1),
                     "Z" + std::to_string(p) + "^" + std::to_string(k));
  RingMap::matrix_t M(m, std::vector<int>(m, 0));
  for (std::size_t t = 0; t < m; ++t) M[(t + 1) % m][t] = 1;
  auto s = make_endomorphism(R, M);
  return single(R, s, zero_derivation(R, s),
                "shift_" + std::to_string(p) + "^" + std::to_string(k));
}

}  // namespace corpus

inline std::vector<ExtensionPtr> family_instances(SearchFamily family) {
  std::vector<ExtensionPtr> out;
  switch (family) {
    case SearchFamily::swap:
      for (int p : {2, 3})
        for (int k : {2, 3}) out.push_back(corpus::cyclic_shift(p, k));
      break;
    case SearchFamily::derivation_invariant:
      for (int p : {2, 3})
        for (int m : {2, 3})
          for (int k : {1, 2})
            for (int c = 1; c < p; ++c) {
              auto R = corpus::trunc_poly(p, m);
              auto id = identity_map(R);
              out.push_back(corpus::single(
                  R, id, corpus::power_derivation(R, id, c, k),
                  "Z" + std::to_string(p) + "[y]/(y^" + std::to_string(m) + "), delta(y) = " +
                      std::to_string(c) + "y^" + std::to_string(k)));
            }
      break;
    case SearchFamily::identity:
      for (auto const& e : corpus::all())
        if (!e.extension) out.push_back(corpus::ore_identity(e.ring, 1, e.name + "[x]"));
      break;
  }
  return out;
}

struct SearchOutcome {
  bool found = false;
  ExtensionPtr instance;
  std::string witness;
  std::optional<NIWitness> ni_witness;
  std::size_t examined = 0;
  std::size_t skipped = 0;
};

inline SearchOutcome counterexample_search(SearchProperty property, SearchFamily family,
                                           SearchBudget const& budget) {
  SearchOutcome out;
  auto const instances = family_instances(family);
  for (auto const& A : instances) {
    ++out.examined;
    FiniteRing const& R = A->ring();
    ElementSet const N = nilpotent_set(R);
    auto found = [&](std::string w) {
      out.found = true;
      out.instance = A;
      out.witness = std::move(w);
    };
    switch (property) {
      case SearchProperty::not_weak_compatible: {
        auto s = is_weak_sigma_compatible(A->system(), N);
        auto d = is_weak_delta_compatible(A->system(), N);
        if (!s.holds) found(detail::map_witness(R, *s.witness, "sigma word"));
        else if (!d.holds) found(detail::map_witness(R, *d.witness, "delta word"));
        break;
      }
      case SearchProperty::not_sigma_rigid: {
        auto r = is_sigma_rigid_subset(A->system(), N);
        if (!r.holds) found("r = " + R.format(r.witness->a));
        break;
      }
      case SearchProperty::not_ni:
      case SearchProperty::not_ni_reduced_base: {
        if (property == SearchProperty::not_ni_reduced_base && N.size() != 1) break;
        CheckContext ctx({A->name(), A, std::nullopt}, budget);
        NICheckResult const& r = ctx.ni();
        if (r.verdict == NIVerdict::violation) {
          found(detail::describe(r.witnesses.front()));
          out.ni_witness = r.witnesses.front();
        } else if (ctx.window() == nullptr || !r.diagnostic.empty()) {
          ++out.skipped;
        }
        break;
      }
    }
    if (out.found) return out;
  }
  if (!instances.empty() && out.skipped == instances.size())
    throw error(errc::budget_exceeded, "every instance of the family exceeded the budget");
  return out;
}

}  // namespace skewpbw
