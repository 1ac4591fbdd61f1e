#pragma once

// Bounded Sigma-skew Armendariz checks: fg = 0 must force
// a_i sigma^{alpha_i}(b_j) = 0 for all term pairs. The weak variant only
// looks at f, g of the form a_0 + a_1 x_1 + ... + a_n x_n and uses
// sigma_i (sigma_0 = id).

#include <optional>

#include "skewpbw/nilpotency.hpp"

namespace skewpbw {

struct ArmendarizWitness {
  SkewPolynomial f;
  SkewPolynomial g;
  Monomial alpha;  // exponent of the term of f
  elem_t a = 0;
  elem_t b = 0;
};

struct ArmendarizResult {
  bool holds = true;
  std::optional<ArmendarizWitness> witness;
  std::size_t pairs_checked = 0;
  std::size_t zero_products = 0;
  std::size_t degree_cap = 0;
  std::size_t support_cap = 0;
};

namespace detail {

// sigma^alpha, or sigma_i for alpha = e_i in the weak variant
inline MapTable term_sigma(Extension const& A, Monomial const& alpha, bool weak) {
  if (!weak) return A.system().sigma_power(alpha.exps);
  for (std::size_t i = 0; i < alpha.vars(); ++i)
    if (alpha.exps[i]) return A.system().sigma(i).table();
  return identity_table(A.ring().size());
}

inline ArmendarizResult armendariz_scan(ExtensionPtr const& ext,
                                        std::vector<SkewPolynomial> const& E,
                                        std::size_t pair_budget, bool weak) {
  FiniteRing const& R = ext->ring();
  if (E.size() > 0 && E.size() > pair_budget / E.size())
    throw error(errc::budget_exceeded, std::to_string(E.size()) + "^2 pairs exceed budget " +
                                           std::to_string(pair_budget));
  ArmendarizResult out;
  for (auto const& f : E)
    for (auto const& g : E) {
      ++out.pairs_checked;
      if (f.is_zero() || g.is_zero() || !(f * g).is_zero()) continue;
      ++out.zero_products;
      for (auto const& [alpha, a] : f.terms()) {
        MapTable const tau = term_sigma(*ext, alpha, weak);
        for (auto const& [beta, b] : g.terms())
          if (R.mul(a, tau[b]) != R.zero()) {
            out.holds = false;
            out.witness = ArmendarizWitness{f, g, alpha, a, b};
            return out;
          }
      }
    }
  return out;
}

}  // namespace detail

inline ArmendarizResult bounded_skew_armendariz(ExtensionPtr const& ext, std::size_t degree_cap,
                                                std::size_t support_cap,
                                                std::size_t pair_budget = 1'000'000) {
  if (!ext->verified()) throw error(errc::unverified, "Armendariz check");
  auto const E = enumerate_window(ext, degree_cap, support_cap, pair_budget);
  auto out = detail::armendariz_scan(ext, E, pair_budget, false);
  out.degree_cap = degree_cap;
  out.support_cap = support_cap;
  return out;
}

/// Exhaustive over all f, g in R + R x_1 + ... + R x_n.
inline ArmendarizResult bounded_weak_skew_armendariz(ExtensionPtr const& ext,
                                                     std::size_t pair_budget = 1'000'000) {
  if (!ext->verified()) throw error(errc::unverified, "Armendariz check");
  auto const E = enumerate_window(ext, 1, ext->vars() + 1, pair_budget);
  auto out = detail::armendariz_scan(ext, E, pair_budget, true);
  out.degree_cap = 1;
  out.support_cap = ext->vars() + 1;
  return out;
}

}  // namespace skewpbw
