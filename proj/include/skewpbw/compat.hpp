#pragma once

// Compatibility, rigidity and invariance predicates for a system of
// endomorphisms and sigma-derivations. All quantifiers run over the whole
// ring; sigma-quantifiers run over the generated monoid, delta-quantifiers
// over composite words up to the system's word cap (reported as Bounded).

#include <optional>

#include "skewpbw/maps.hpp"
#include "skewpbw/radicals.hpp"

namespace skewpbw {

struct MapWitness {
  elem_t a = 0;
  elem_t b = 0;
  /// Index into SigmaSystem::closure() or SigmaSystem::delta_words(), or the
  /// variable index for invariance checks.
  std::size_t map_index = 0;
};

struct PredicateResult {
  bool holds = true;
  std::optional<MapWitness> witness;
  /// Set when the quantifier over delta words was truncated at `word_cap`.
  bool bounded = false;
  std::size_t word_cap = 0;

  explicit operator bool() const noexcept { return holds; }
};

namespace detail {

template <class Zero>
PredicateResult sigma_compat(SigmaSystem const& sys, Zero&& is_zero) {
  FiniteRing const& R = *sys.ring();
  auto const& maps = sys.closure();
  for (elem_t a = 0; a < R.size(); ++a)
    for (elem_t b = 0; b < R.size(); ++b) {
      bool const ab = is_zero(R.mul(a, b));
      for (std::size_t k = 0; k < maps.size(); ++k)
        if (is_zero(R.mul(a, maps[k][b])) != ab) return {false, MapWitness{a, b, k}};
    }
  return {};
}

template <class Zero>
PredicateResult delta_compat(SigmaSystem const& sys, Zero&& is_zero) {
  FiniteRing const& R = *sys.ring();
  auto const& words = sys.delta_words();
  PredicateResult out;
  if (!words.empty()) {
    out.bounded = true;
    out.word_cap = sys.delta_word_cap();
  }
  for (elem_t a = 0; a < R.size(); ++a)
    for (elem_t b = 0; b < R.size(); ++b) {
      if (!is_zero(R.mul(a, b))) continue;
      for (std::size_t k = 0; k < words.size(); ++k)
        if (!is_zero(R.mul(a, words[k][b]))) {
          out.holds = false;
          out.witness = MapWitness{a, b, k};
          return out;
        }
    }
  return out;
}

}  // namespace detail

/// a sigma^alpha(b) = 0 iff ab = 0.
inline PredicateResult is_sigma_compatible(SigmaSystem const& sys) {
  return detail::sigma_compat(sys, [](elem_t x) { return x == 0; });
}

/// ab = 0 implies a delta^beta(b) = 0.
inline PredicateResult is_delta_compatible(SigmaSystem const& sys) {
  return detail::delta_compat(sys, [](elem_t x) { return x == 0; });
}

inline PredicateResult is_weak_sigma_compatible(SigmaSystem const& sys,
                                                ElementSet const& nilpotents) {
  return detail::sigma_compat(sys, [&](elem_t x) { return contains(nilpotents, x); });
}

inline PredicateResult is_weak_sigma_compatible(SigmaSystem const& sys) {
  return is_weak_sigma_compatible(sys, nilpotent_set(*sys.ring()));
}

inline PredicateResult is_weak_delta_compatible(SigmaSystem const& sys,
                                                ElementSet const& nilpotents) {
  return detail::delta_compat(sys, [&](elem_t x) { return contains(nilpotents, x); });
}

inline PredicateResult is_weak_delta_compatible(SigmaSystem const& sys) {
  return is_weak_delta_compatible(sys, nilpotent_set(*sys.ring()));
}

/// r sigma^alpha(r) in S implies r in S.
inline PredicateResult is_sigma_rigid_subset(SigmaSystem const& sys, ElementSet const& S) {
  FiniteRing const& R = *sys.ring();
  auto const& maps = sys.closure();
  for (elem_t r = 0; r < R.size(); ++r) {
    if (contains(S, r)) continue;
    for (std::size_t k = 0; k < maps.size(); ++k)
      if (contains(S, R.mul(r, maps[k][r]))) return {false, MapWitness{r, r, k}};
  }
  return {};
}

/// r sigma^alpha(r) = 0 implies r = 0.
inline PredicateResult is_sigma_rigid(SigmaSystem const& sys) {
  return is_sigma_rigid_subset(sys, ElementSet{sys.ring()->zero()});
}

enum class InvarianceMode { sigma_invariant, delta_invariant, sigma_ideal };

/// Witness: `a` is the offending element of I (or, for sigma_ideal, an
/// element of I missing from sigma_i(I)), `map_index` the variable i.
inline PredicateResult invariance(ElementSet const& I, SigmaSystem const& sys,
                                  InvarianceMode mode) {
  for (std::size_t i = 0; i < sys.size(); ++i) {
    RingMap const& f =
        mode == InvarianceMode::delta_invariant ? sys.delta(i) : sys.sigma(i);
    ElementSet image;
    for (elem_t x : I) {
      elem_t const y = f(x);
      if (!contains(I, y)) return {false, MapWitness{x, y, i}};
      image.push_back(y);
    }
    if (mode == InvarianceMode::sigma_ideal) {
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (image.size() != I.size()) {
        for (elem_t x : I)
          if (!contains(image, x)) return {false, MapWitness{x, x, i}};
      }
    }
  }
  return {};
}

inline PredicateResult invariance(Ideal const& I, SigmaSystem const& sys,
                                  InvarianceMode mode) {
  return invariance(I.carrier(), sys, mode);
}

}  // namespace skewpbw
