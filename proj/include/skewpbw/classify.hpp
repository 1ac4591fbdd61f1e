#pragma once

// Exhaustive ring predicates for finite rings.

#include <optional>
#include <string>
#include <vector>

#include "skewpbw/radicals.hpp"

namespace skewpbw {

struct RingProfile {
  bool NI = false;
  bool NJ = false;
  bool two_primal = false;
  bool weakly_two_primal = false;
  bool reduced = false;
  bool domain = false;
  bool symmetric = false;
  bool reversible = false;
  bool semicommutative = false;
  bool right_duo = false;
  bool left_duo = false;
  bool abelian = false;
  bool dedekind_finite = false;
  bool locally_finite = true;  // every finite ring

  ElementSet nilpotents;
  ElementSet prime_radical;
  ElementSet levitzki_radical;
  ElementSet upper_nilradical;
  ElementSet jacobson_radical;

  /// When NI fails: nilpotents a, b with a + b, or a product with a ring
  /// element, outside the nilpotent set.
  std::optional<std::pair<elem_t, elem_t>> ni_witness;
};

/// Nilpotent set closed under addition and two-sided multiplication.
/// Returns a witness pair (a, b) on failure; for multiplicative failures b is
/// the multiplier.
inline std::optional<std::pair<elem_t, elem_t>> nilpotents_ideal_witness(
    FiniteRing const& R, ElementSet const& N) {
  for (elem_t a : N)
    for (elem_t b : N)
      if (!contains(N, R.add(a, b))) return std::pair{a, b};
  for (elem_t a : N)
    for (elem_t r = 0; r < R.size(); ++r)
      if (!contains(N, R.mul(r, a)) || !contains(N, R.mul(a, r)))
        return std::pair{a, r};
  return std::nullopt;
}

namespace predicates {

inline bool is_domain(FiniteRing const& R) {
  for (elem_t a = 1; a < R.size(); ++a)
    for (elem_t b = 1; b < R.size(); ++b)
      if (R.mul(a, b) == R.zero()) return false;
  return true;
}

// rst = 0 implies rts = 0
inline bool is_symmetric(FiniteRing const& R) {
  for (elem_t r = 0; r < R.size(); ++r)
    for (elem_t s = 0; s < R.size(); ++s) {
      elem_t const rs = R.mul(r, s);
      for (elem_t t = 0; t < R.size(); ++t)
        if (R.mul(rs, t) == R.zero() && R.mul(R.mul(r, t), s) != R.zero())
          return false;
    }
  return true;
}

inline bool is_reversible(FiniteRing const& R) {
  for (elem_t a = 0; a < R.size(); ++a)
    for (elem_t b = 0; b < R.size(); ++b)
      if (R.mul(a, b) == R.zero() && R.mul(b, a) != R.zero()) return false;
  return true;
}

// ab = 0 implies aRb = 0; a r b is additive in r.
inline bool is_semicommutative(FiniteRing const& R) {
  for (elem_t a = 0; a < R.size(); ++a)
    for (elem_t b = 0; b < R.size(); ++b) {
      if (R.mul(a, b) != R.zero()) continue;
      for (std::size_t i = 0; i < R.rank(); ++i)
        if (R.mul(R.mul(a, R.generator(i)), b) != R.zero()) return false;
    }
  return true;
}

// Every principal right ideal aR is two-sided: R a is inside aR.
inline bool is_right_duo(FiniteRing const& R) {
  for (elem_t a = 0; a < R.size(); ++a) {
    std::vector<char> aR(R.size(), 0);
    for (elem_t s = 0; s < R.size(); ++s) aR[R.mul(a, s)] = 1;
    for (std::size_t i = 0; i < R.rank(); ++i)
      if (!aR[R.mul(R.generator(i), a)]) return false;
  }
  return true;
}

inline bool is_left_duo(FiniteRing const& R) {
  for (elem_t a = 0; a < R.size(); ++a) {
    std::vector<char> Ra(R.size(), 0);
    for (elem_t s = 0; s < R.size(); ++s) Ra[R.mul(s, a)] = 1;
    for (std::size_t i = 0; i < R.rank(); ++i)
      if (!Ra[R.mul(a, R.generator(i))]) return false;
  }
  return true;
}

// idempotents are central
inline bool is_abelian(FiniteRing const& R) {
  for (elem_t e = 0; e < R.size(); ++e) {
    if (R.mul(e, e) != e) continue;
    for (std::size_t i = 0; i < R.rank(); ++i) {
      elem_t const g = R.generator(i);
      if (R.mul(e, g) != R.mul(g, e)) return false;
    }
  }
  return true;
}

inline bool is_dedekind_finite(FiniteRing const& R) {
  for (elem_t a = 0; a < R.size(); ++a)
    for (elem_t b = 0; b < R.size(); ++b)
      if (R.mul(a, b) == R.one() && R.mul(b, a) != R.one()) return false;
  return true;
}

inline bool is_commutative(FiniteRing const& R) {
  for (std::size_t i = 0; i < R.rank(); ++i)
    for (std::size_t j = 0; j < R.rank(); ++j)
      if (R.mul(R.generator(i), R.generator(j)) != R.mul(R.generator(j), R.generator(i)))
        return false;
  return true;
}

}  // namespace predicates

inline RingProfile classify_ring(RingPtr const& ring, std::size_t cap = default_ideal_cap) {
  FiniteRing const& R = *ring;
  RingProfile p;
  p.nilpotents = nilpotent_set(R);
  p.jacobson_radical = jacobson_radical(ring).carrier();
  p.prime_radical = prime_radical(ring, cap).carrier();
  p.upper_nilradical = upper_nilradical(ring, cap).carrier();
  p.levitzki_radical = levitzki_radical(ring, cap).carrier();

  p.ni_witness = nilpotents_ideal_witness(R, p.nilpotents);
  p.NI = !p.ni_witness.has_value();
  p.NJ = p.nilpotents == p.jacobson_radical;
  p.two_primal = p.nilpotents == p.prime_radical;
  p.weakly_two_primal = p.nilpotents == p.levitzki_radical;
  p.reduced = p.nilpotents.size() == 1;
  p.domain = predicates::is_domain(R);
  p.symmetric = predicates::is_symmetric(R);
  p.reversible = predicates::is_reversible(R);
  p.semicommutative = predicates::is_semicommutative(R);
  p.right_duo = predicates::is_right_duo(R);
  p.left_duo = predicates::is_left_duo(R);
  p.abelian = predicates::is_abelian(R);
  p.dedekind_finite = predicates::is_dedekind_finite(R);
  p.locally_finite = true;
  return p;
}

}  // namespace skewpbw
