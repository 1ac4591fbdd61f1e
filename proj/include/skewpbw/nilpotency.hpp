#pragma once

// Nilpotency in A is only semi-decidable by power iteration. The probe
// returns Nilpotent(k), NotNilpotent(reason) or Unknown(cap); every
// NotNilpotent carries a sound certificate:
//   base_ring          degree 0, decided exactly in R;
//   stabilized_power   f^j = f^k != 0 for some j < k, so the power sequence
//                      cycles without reaching 0;
//   unit_leading_chain A bijective and the leading coefficient a unit: the
//                      top-degree part of f^k is u x^{k alpha} with u a unit;
//   leading_norm       one variable with bijective sigma: the top coefficient
//                      of f^{mP} is N^m with N = r sigma^a(r) ... sigma^{(P-1)a}(r),
//                      and N is not nilpotent.
// The two leading certificates are applied modulo N(R)<x> when N(R) is a
// Sigma- and Delta-invariant ideal (then N(R)<x> is an ideal of A), which
// lets them see past nilpotent top coefficients.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "skewpbw/compat.hpp"
#include "skewpbw/polynomial.hpp"

namespace skewpbw {

inline constexpr std::size_t default_exponent_cap = 16;

/// Bounds shared by every bounded search.
struct SearchBudget {
  std::size_t degree_cap = 4;
  std::size_t support_cap = 3;
  std::size_t exponent_cap = default_exponent_cap;
  std::size_t pair_budget = 1'000'000;
  double time_hint_seconds = 0.0;

  SearchBudget doubled() const {
    return {degree_cap * 2, support_cap * 2, exponent_cap * 2, pair_budget * 2,
            time_hint_seconds * 2};
  }
};

enum class ProbeStatus { nilpotent, not_nilpotent, unknown };
enum class NonNilReason { none, base_ring, stabilized_power, unit_leading_chain, leading_norm };

inline char const* to_string(ProbeStatus s) {
  switch (s) {
    case ProbeStatus::nilpotent: return "Nilpotent";
    case ProbeStatus::not_nilpotent: return "NotNilpotent";
    case ProbeStatus::unknown: return "Unknown";
  }
  return "?";
}

inline char const* to_string(NonNilReason r) {
  switch (r) {
    case NonNilReason::none: return "None";
    case NonNilReason::base_ring: return "BaseRing";
    case NonNilReason::stabilized_power: return "StabilizedPower";
    case NonNilReason::unit_leading_chain: return "UnitLeadingChain";
    case NonNilReason::leading_norm: return "LeadingNorm";
  }
  return "?";
}

struct ProbeResult {
  ProbeStatus status = ProbeStatus::unknown;
  /// Nilpotency index for Nilpotent; the power carrying the certificate for
  /// NotNilpotent; the cap for Unknown.
  std::size_t index = 0;
  NonNilReason reason = NonNilReason::none;

  bool nilpotent() const noexcept { return status == ProbeStatus::nilpotent; }
  bool not_nilpotent() const noexcept { return status == ProbeStatus::not_nilpotent; }
  bool unknown() const noexcept { return status == ProbeStatus::unknown; }
};

inline std::string to_string(ProbeResult const& r) {
  switch (r.status) {
    case ProbeStatus::nilpotent: return "Nilpotent(" + std::to_string(r.index) + ")";
    case ProbeStatus::not_nilpotent: return std::string("NotNilpotent(") + to_string(r.reason) + ")";
    case ProbeStatus::unknown: return "Unknown(" + std::to_string(r.index) + ")";
  }
  return "?";
}

struct TermsLess {
  bool operator()(Terms const& a, Terms const& b) const {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(), [](auto const& x, auto const& y) {
          if (DegLex{}(x.first, y.first)) return true;
          if (DegLex{}(y.first, x.first)) return false;
          return x.second < y.second;
        });
  }
};

/// Per-extension probe context with a memo of results. Safe to share
/// between threads.
class NilpotencyProber {
 public:
  explicit NilpotencyProber(ExtensionPtr ext, std::size_t exponent_cap = default_exponent_cap)
      : ext_(std::move(ext)), cap_(exponent_cap) {
    if (!ext_->verified())
      throw error(errc::unverified, "nilpotency probe over an unverified presentation");
    FiniteRing const& R = ext_->ring();
    nilpotents_ = nilpotent_set(R);
    SigmaSystem const& sys = ext_->system();
    if (Ideal::is_ideal(R, nilpotents_) &&
        invariance(nilpotents_, sys, InvarianceMode::sigma_invariant).holds &&
        invariance(nilpotents_, sys, InvarianceMode::delta_invariant).holds)
      quotient_ = nilpotents_;
    else
      quotient_ = ElementSet{R.zero()};
  }

  ExtensionPtr const& extension() const noexcept { return ext_; }
  std::size_t exponent_cap() const noexcept { return cap_; }
  ElementSet const& nilpotents() const noexcept { return nilpotents_; }
  /// The ideal I of R used for the leading certificates (N(R) or {0}).
  ElementSet const& quotient_ideal() const noexcept { return quotient_; }

  ProbeResult probe(SkewPolynomial const& f) const {
    if (f.extension() != ext_)
      throw error(errc::ring_mismatch, "polynomial from another extension");
    return probe(f.terms());
  }

  ProbeResult probe(Terms const& f) const {
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    }
    ProbeResult r = compute(f);
    std::lock_guard lock(mutex_);
    memo_.emplace(f, r);
    return r;
  }

  /// Leading certificate alone (no power iteration).
  bool leading_certificate(Terms const& f, NonNilReason& reason) const {
    FiniteRing const& R = ext_->ring();
    auto top = f.rend();
    for (auto it = f.rbegin(); it != f.rend(); ++it)
      if (!contains(quotient_, it->second)) {
        top = it;
        break;
      }
    if (top == f.rend()) return false;
    Monomial const& alpha = top->first;
    elem_t const r = top->second;
    if (alpha.is_one()) {
      if (!contains(nilpotents_, r)) {
        reason = NonNilReason::leading_norm;
        return true;
      }
      return false;
    }
    if (ext_->flags().bijective && R.is_unit(r)) {
      reason = NonNilReason::unit_leading_chain;
      return true;
    }
    if (ext_->vars() == 1 && ext_->system().sigma(0).injective()) {
      MapTable const step = ext_->system().sigma_power(alpha.exps);
      MapTable tau = identity_table(R.size());
      elem_t norm = R.one();
      do {
        norm = R.mul(norm, tau[r]);
        tau = compose(step, tau);
      } while (tau != identity_table(R.size()));
      if (!contains(nilpotents_, norm)) {
        reason = NonNilReason::leading_norm;
        return true;
      }
    }
    return false;
  }

 private:
  ProbeResult compute(Terms const& f) const {
    FiniteRing const& R = ext_->ring();
    if (f.empty()) return {ProbeStatus::nilpotent, 1, NonNilReason::none};
    if (f.rbegin()->first.is_one()) {
      std::size_t const k = nilpotency_index(R, f.rbegin()->second);
      if (k) return {ProbeStatus::nilpotent, k, NonNilReason::none};
      return {ProbeStatus::not_nilpotent, 1, NonNilReason::base_ring};
    }
    NonNilReason reason = NonNilReason::none;
    if (leading_certificate(f, reason)) return {ProbeStatus::not_nilpotent, 1, reason};
    std::vector<Terms> powers{f};
    for (std::size_t k = 2; k <= cap_; ++k) {
      Terms next = ext_->multiply_terms(powers.back(), f);
      if (next.empty()) return {ProbeStatus::nilpotent, k, NonNilReason::none};
      if (std::find(powers.begin(), powers.end(), next) != powers.end())
        return {ProbeStatus::not_nilpotent, k, NonNilReason::stabilized_power};
      if (leading_certificate(next, reason)) return {ProbeStatus::not_nilpotent, k, reason};
      powers.push_back(std::move(next));
    }
    return {ProbeStatus::unknown, cap_, NonNilReason::none};
  }

  ExtensionPtr ext_;
  std::size_t cap_;
  ElementSet nilpotents_;
  ElementSet quotient_;
  mutable std::mutex mutex_;
  mutable std::map<Terms, ProbeResult, TermsLess> memo_;
};

inline ProbeResult nilpotency_probe(SkewPolynomial const& f,
                                    std::size_t exponent_cap = default_exponent_cap) {
  return NilpotencyProber(f.extension(), exponent_cap).probe(f);
}

/// Membership in S<x_1, ..., x_n>: every coefficient lies in S.
inline bool coefficients_in(SkewPolynomial const& f, ElementSet const& S) {
  for (auto const& [m, c] : f.terms())
    if (!contains(S, c)) return false;
  return true;
}

/// f in N(R)<x_1, ..., x_n>.
inline bool coefficient_criterion_member(SkewPolynomial const& f, ElementSet const& nilpotents) {
  return coefficients_in(f, nilpotents);
}

inline bool coefficient_criterion_member(SkewPolynomial const& f) {
  return coefficients_in(f, nilpotent_set(f.extension()->ring()));
}

// ---------------------------------------------------------------------------
// Bounded enumeration

/// Standard monomials of degree <= degree_cap in ascending deglex order.
inline std::vector<Monomial> monomials_up_to(std::size_t vars, std::size_t degree_cap) {
  std::vector<Monomial> out;
  Monomial m(vars);
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (i == vars) {
      out.push_back(m);
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      m.exps[i] = static_cast<unsigned>(e);
      self(self, i + 1, left - e);
    }
    m.exps[i] = 0;
  };
  rec(rec, 0, degree_cap);
  std::sort(out.begin(), out.end(), DegLex{});
  return out;
}

/// Number of polynomials with degree <= degree_cap and at most support_cap
/// terms, saturating at the maximum of std::size_t.
inline std::size_t window_size(std::size_t ring_size, std::size_t vars, std::size_t degree_cap,
                               std::size_t support_cap) {
  long double const M = static_cast<long double>(monomials_up_to(vars, degree_cap).size());
  long double total = 0, binom = 1, pw = 1;
  for (std::size_t s = 0; s <= support_cap && s <= M; ++s) {
    total += binom * pw;
    binom = binom * (M - s) / (s + 1);
    pw *= static_cast<long double>(ring_size - 1);
  }
  long double const lim = static_cast<long double>(std::numeric_limits<std::size_t>::max());
  return total >= lim ? std::numeric_limits<std::size_t>::max()
                      : static_cast<std::size_t>(total + 0.5L);
}

/// Deterministic order: degree, support size, then terms from the top
/// monomial down (monomial, coefficient index).
struct WindowOrder {
  bool operator()(SkewPolynomial const& a, SkewPolynomial const& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.support() != b.support()) return a.support() < b.support();
    auto ia = a.terms().rbegin(), ib = b.terms().rbegin();
    for (; ia != a.terms().rend(); ++ia, ++ib) {
      if (DegLex{}(ia->first, ib->first)) return true;
      if (DegLex{}(ib->first, ia->first)) return false;
      if (ia->second != ib->second) return ia->second < ib->second;
    }
    return false;
  }
};

/// Every polynomial with degree <= degree_cap and <= support_cap terms.
inline std::vector<SkewPolynomial> enumerate_window(ExtensionPtr const& ext,
                                                    std::size_t degree_cap,
                                                    std::size_t support_cap,
                                                    std::size_t limit) {
  std::size_t const count =
      window_size(ext->ring().size(), ext->vars(), degree_cap, support_cap);
  if (count > limit)
    throw error(errc::budget_exceeded, "window has " + std::to_string(count) +
                                           " elements, budget " + std::to_string(limit));
  std::vector<Monomial> const mons = monomials_up_to(ext->vars(), degree_cap);
  elem_t const q = static_cast<elem_t>(ext->ring().size());
  std::vector<SkewPolynomial> out;
  out.reserve(count);
  Terms current;
  auto rec = [&](auto&& self, std::size_t start, std::size_t left) -> void {
    out.emplace_back(ext, current);
    if (left == 0) return;
    for (std::size_t i = start; i < mons.size(); ++i)
      for (elem_t c = 1; c < q; ++c) {
        current.emplace(mons[i], c);
        self(self, i + 1, left - 1);
        current.erase(mons[i]);
      }
  };
  rec(rec, 0, support_cap);
  std::sort(out.begin(), out.end(), WindowOrder{});
  return out;
}

/// Enumerated window with a probe result per element.
struct ProbedWindow {
  std::vector<SkewPolynomial> elements;
  std::vector<ProbeResult> probes;
  std::size_t degree_cap = 0;
  std::size_t support_cap = 0;

  std::size_t count(ProbeStatus s) const {
    return static_cast<std::size_t>(std::count_if(
        probes.begin(), probes.end(), [&](ProbeResult const& p) { return p.status == s; }));
  }
};

inline ProbedWindow probe_window(NilpotencyProber const& prober, SearchBudget const& budget) {
  ProbedWindow w;
  w.degree_cap = budget.degree_cap;
  w.support_cap = budget.support_cap;
  w.elements = enumerate_window(prober.extension(), budget.degree_cap, budget.support_cap,
                                budget.pair_budget);
  w.probes.reserve(w.elements.size());
  for (auto const& f : w.elements) w.probes.push_back(prober.probe(f));
  return w;
}

// ---------------------------------------------------------------------------
// Bounded NI check

enum class NIVerdict { consistent, violation, inconclusive };

inline char const* to_string(NIVerdict v) {
  switch (v) {
    case NIVerdict::consistent: return "ConsistentWithNI";
    case NIVerdict::violation: return "Violation";
    case NIVerdict::inconclusive: return "Inconclusive";
  }
  return "?";
}

enum class NIWitnessKind { sum, left_product, right_product };

inline char const* to_string(NIWitnessKind k) {
  switch (k) {
    case NIWitnessKind::sum: return "sum";
    case NIWitnessKind::left_product: return "left_product";
    case NIWitnessKind::right_product: return "right_product";
  }
  return "?";
}

/// f is proved nilpotent; g is the second nilpotent (sum) or the multiplier
/// h (left_product: h*f, right_product: f*h); `result` is proved not nilpotent.
struct NIWitness {
  NIWitnessKind kind;
  SkewPolynomial f;
  SkewPolynomial g;
  SkewPolynomial result;
  ProbeResult result_probe;
};

struct NICheckResult {
  NIVerdict verdict = NIVerdict::consistent;
  /// First witness of each kind found, in enumeration order.
  std::vector<NIWitness> witnesses;
  std::size_t enumerated = 0;
  std::size_t proved_nilpotent = 0;
  std::size_t unknown_in_window = 0;
  std::size_t pairs_checked = 0;
  std::size_t unknown_results = 0;
  std::string diagnostic;

  NIWitness const* witness(NIWitnessKind k) const {
    for (auto const& w : witnesses)
      if (w.kind == k) return &w;
    return nullptr;
  }
};

/// Re-evaluates a witness with the engine.
inline bool replay(NIWitness const& w, NilpotencyProber const& prober) {
  SkewPolynomial const r = w.kind == NIWitnessKind::sum            ? w.f + w.g
                           : w.kind == NIWitnessKind::left_product ? w.g * w.f
                                                                   : w.f * w.g;
  if (!(r == w.result)) return false;
  bool const g_ok = w.kind != NIWitnessKind::sum || prober.probe(w.g).nilpotent();
  return prober.probe(w.f).nilpotent() && g_ok && prober.probe(r).not_nilpotent();
}

/// Closure of the proved-nilpotent part of a window under sums and under
/// products with window elements.
inline NICheckResult bounded_NI_check(NilpotencyProber const& prober, ProbedWindow const& w,
                                      std::size_t pair_budget) {
  NICheckResult out;
  out.enumerated = w.elements.size();
  out.unknown_in_window = w.count(ProbeStatus::unknown);
  std::vector<std::size_t> nil;
  for (std::size_t i = 0; i < w.elements.size(); ++i)
    if (w.probes[i].nilpotent()) nil.push_back(i);
  out.proved_nilpotent = nil.size();
  std::size_t const pairs = nil.size() * (nil.size() + 1) / 2 + 2 * nil.size() * w.elements.size();
  if (pairs > pair_budget)
    throw error(errc::budget_exceeded, std::to_string(pairs) + " pairs exceed budget " +
                                           std::to_string(pair_budget));
  bool seen[3] = {false, false, false};
  auto check = [&](NIWitnessKind kind, SkewPolynomial const& f, SkewPolynomial const& g,
                   SkewPolynomial const& r) {
    ++out.pairs_checked;
    auto const k = static_cast<std::size_t>(kind);
    if (seen[k]) return;
    ProbeResult const p = prober.probe(r);
    if (p.not_nilpotent()) {
      seen[k] = true;
      out.witnesses.push_back({kind, f, g, r, p});
    } else if (p.unknown()) {
      ++out.unknown_results;
    }
  };
  for (std::size_t a = 0; a < nil.size(); ++a)
    for (std::size_t b = a; b < nil.size(); ++b) {
      auto const& f = w.elements[nil[a]];
      auto const& g = w.elements[nil[b]];
      check(NIWitnessKind::sum, f, g, f + g);
    }
  for (std::size_t a : nil) {
    auto const& f = w.elements[a];
    for (auto const& h : w.elements) {
      check(NIWitnessKind::left_product, f, h, h * f);
      check(NIWitnessKind::right_product, f, h, f * h);
    }
  }
  std::sort(out.witnesses.begin(), out.witnesses.end(),
            [](NIWitness const& x, NIWitness const& y) { return x.kind < y.kind; });
  if (!out.witnesses.empty()) {
    out.verdict = NIVerdict::violation;
  } else if (out.unknown_results > 0) {
    out.verdict = NIVerdict::inconclusive;
    out.diagnostic = std::to_string(out.unknown_results) + " sums/products left Unknown";
  }
  return out;
}

inline NICheckResult bounded_NI_check(ExtensionPtr const& ext, SearchBudget const& budget = {}) {
  NilpotencyProber const prober(ext, budget.exponent_cap);
  return bounded_NI_check(prober, probe_window(prober, budget), budget.pair_budget);
}

/// Agreement between the coefficient criterion (all coefficients in N(R))
/// and the probe on a window: members must be Nilpotent, non-members
/// NotNilpotent.
struct CriterionAgreement {
  std::size_t members = 0;
  std::size_t member_not_proved = 0;
  std::size_t outsider_not_refuted = 0;
  std::optional<SkewPolynomial> first_mismatch;

  bool exact() const noexcept { return member_not_proved == 0 && outsider_not_refuted == 0; }
};

inline CriterionAgreement coefficient_agreement(NilpotencyProber const& prober,
                                                ProbedWindow const& w) {
  CriterionAgreement out;
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    bool const member = coefficients_in(w.elements[i], prober.nilpotents());
    bool bad = false;
    if (member) {
      ++out.members;
      if (!w.probes[i].nilpotent()) {
        ++out.member_not_proved;
        bad = true;
      }
    } else if (!w.probes[i].not_nilpotent()) {
      ++out.outsider_not_refuted;
      bad = true;
    }
    if (bad && !out.first_mismatch) out.first_mismatch = w.elements[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quasi-regularity

struct QuasiRegularity {
  SkewPolynomial inverse;  // g with (1 + f) g = g (1 + f) = 1
  bool verified = false;
};

/// g = sum_{j<k} (-f)^j for f with f^k = 0, checked on both sides.
inline QuasiRegularity quasi_regularity_witness(SkewPolynomial const& f, ProbeResult const& p) {
  if (!p.nilpotent())
    throw error(errc::not_proved_nilpotent, to_string(f) + " is " + to_string(p));
  ExtensionPtr const& ext = f.extension();
  SkewPolynomial const one = SkewPolynomial::one(ext);
  SkewPolynomial const minus_f = -f;
  SkewPolynomial g = SkewPolynomial(ext);
  SkewPolynomial term = one;
  for (std::size_t j = 0; j < p.index; ++j) {
    g = g + term;
    term = term * minus_f;
  }
  SkewPolynomial const u = one + f;
  return {g, u * g == one && g * u == one};
}

inline QuasiRegularity quasi_regularity_witness(SkewPolynomial const& f,
                                                std::size_t exponent_cap = default_exponent_cap) {
  return quasi_regularity_witness(f, nilpotency_probe(f, exponent_cap));
}

// ---------------------------------------------------------------------------
// Extended ideals I<x_1, ..., x_n>

inline bool extended_ideal_member(Ideal const& I, SkewPolynomial const& f) {
  if (I.ring() != f.extension()->base())
    throw error(errc::ring_mismatch, "ideal of another ring");
  return coefficients_in(f, I.carrier());
}

struct ExtendedIdealReport {
  bool closed = true;
  /// Failing product when not closed: operand r x^gamma, the multiplier and
  /// the side ("x_i *", "* x_i", "r *", "* r").
  std::optional<SkewPolynomial> operand;
  std::optional<SkewPolynomial> product;
  std::string operation;
  bool delta_invariant = false;
  bool sigma_invariant = false;
  bool derivation_type = false;
  /// closed == (sigma_invariant && delta_invariant); the biconditional is a
  /// theorem for derivation type, reported for information otherwise.
  bool agrees = false;
  std::size_t degree_cap = 0;
};

/// Checks at monomials of degree <= degree_cap that I<x> absorbs products
/// with the variables and with base generators on both sides.
inline ExtendedIdealReport extended_ideal_closure(Ideal const& I, ExtensionPtr const& ext,
                                                  std::size_t degree_cap) {
  if (I.ring() != ext->base()) throw error(errc::ring_mismatch, "ideal of another ring");
  FiniteRing const& R = ext->ring();
  ExtendedIdealReport rep;
  rep.degree_cap = degree_cap;
  rep.derivation_type = ext->flags().derivation_type;
  rep.sigma_invariant = invariance(I, ext->system(), InvarianceMode::sigma_invariant).holds;
  rep.delta_invariant = invariance(I, ext->system(), InvarianceMode::delta_invariant).holds;
  std::vector<SkewPolynomial> multipliers;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ext->vars(); ++i) {
    multipliers.push_back(SkewPolynomial::variable(ext, i));
    names.push_back(detail::var_name(ext->vars(), i));
  }
  for (std::size_t g = 0; g < R.rank(); ++g) {
    multipliers.push_back(SkewPolynomial::constant(ext, R.generator(g)));
    names.push_back("e_" + std::to_string(g + 1));
  }
  for (auto const& gamma : monomials_up_to(ext->vars(), degree_cap)) {
    for (elem_t r : I.carrier()) {
      if (r == R.zero()) continue;
      auto const f = SkewPolynomial::monomial(ext, r, gamma);
      for (std::size_t k = 0; k < multipliers.size() && rep.closed; ++k) {
        auto const left = multipliers[k] * f;
        auto const right = f * multipliers[k];
        if (!coefficients_in(left, I.carrier())) {
          rep.closed = false;
          rep.operand = f;
          rep.product = left;
          rep.operation = names[k] + " *";
        } else if (!coefficients_in(right, I.carrier())) {
          rep.closed = false;
          rep.operand = f;
          rep.product = right;
          rep.operation = "* " + names[k];
        }
      }
      if (!rep.closed) break;
    }
    if (!rep.closed) break;
  }
  rep.agrees = rep.closed == (rep.sigma_invariant && rep.delta_invariant);
  return rep;
}

}  // namespace skewpbw
