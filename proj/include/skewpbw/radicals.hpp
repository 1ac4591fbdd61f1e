#pragma once

// Nilpotent elements, two-sided ideals and the radicals of a finite ring.
//
// J(R) is found by an invertibility search; N_*(R) by enumerating all
// two-sided ideals and intersecting the prime ones; N*(R) as the sum of the
// nil ideals in the same enumeration. For a finite ring all four radicals
// coincide, which makes J against N_* a cross-check of two unrelated
// algorithms.

#include <deque>
#include <set>
#include <string>
#include <vector>

#include "skewpbw/ring.hpp"

namespace skewpbw {

/// Default cap on |R| for computations that enumerate all ideals.
inline constexpr std::size_t default_ideal_cap = 256;

class Ideal {
 public:
  /// Checks closure under addition, negation and two-sided multiplication.
  static Ideal from_carrier(RingPtr ring, ElementSet carrier,
                            ElementSet generators = {}) {
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    if (!is_ideal(*ring, carrier))
      throw error(errc::not_an_ideal, "carrier of size " +
                                          std::to_string(carrier.size()) +
                                          " is not a two-sided ideal");
    return Ideal(std::move(ring), std::move(carrier), std::move(generators));
  }

  static bool is_ideal(FiniteRing const& R, ElementSet const& carrier) {
    if (!skewpbw::contains(carrier, R.zero())) return false;
    for (elem_t a : carrier) {
      if (!skewpbw::contains(carrier, R.neg(a))) return false;
      for (elem_t b : carrier)
        if (!skewpbw::contains(carrier, R.add(a, b))) return false;
      for (std::size_t i = 0; i < R.rank(); ++i) {
        elem_t const e = R.generator(i);
        if (!skewpbw::contains(carrier, R.mul(e, a)) || !skewpbw::contains(carrier, R.mul(a, e)))
          return false;
      }
    }
    return true;
  }

  RingPtr const& ring() const noexcept { return ring_; }
  ElementSet const& carrier() const noexcept { return carrier_; }
  ElementSet const& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  bool contains(elem_t x) const { return skewpbw::contains(carrier_, x); }
  bool is_proper() const { return carrier_.size() < ring_->size(); }

  friend bool operator==(Ideal const& a, Ideal const& b) {
    return a.carrier_ == b.carrier_;
  }

 private:
  Ideal(RingPtr ring, ElementSet carrier, ElementSet generators)
      : ring_(std::move(ring)),
        carrier_(std::move(carrier)),
        generators_(std::move(generators)) {}

  RingPtr ring_;
  ElementSet carrier_;
  ElementSet generators_;
};

/// Nilpotency index of a (smallest k >= 1 with a^k = 0), or 0 when a is not
/// nilpotent. Powers of an element of a finite ring cycle within |R| steps,
/// so the search stops there.
inline std::size_t nilpotency_index(FiniteRing const& R, elem_t a) {
  elem_t p = a;
  for (std::size_t k = 1; k <= R.size(); ++k) {
    if (p == R.zero()) return k;
    p = R.mul(p, a);
  }
  return 0;
}

inline bool is_nilpotent(FiniteRing const& R, elem_t a) {
  return nilpotency_index(R, a) != 0;
}

inline ElementSet nilpotent_set(FiniteRing const& R) {
  ElementSet out;
  for (elem_t a = 0; a < R.size(); ++a)
    if (is_nilpotent(R, a)) out.push_back(a);
  return out;
}

inline ElementSet units(FiniteRing const& R) {
  ElementSet out;
  for (elem_t a = 0; a < R.size(); ++a)
    if (R.is_unit(a)) out.push_back(a);
  return out;
}

namespace detail {

// Grows `members` (an additive subgroup, as a mask) by the subgroup
// generated by x, queueing every new element.
inline void join_cyclic(FiniteRing const& R, std::vector<char>& members,
                        ElementSet& listing, elem_t x, std::deque<elem_t>& fresh) {
  if (members[x]) return;
  std::vector<elem_t> multiples;
  for (elem_t k = x; k != R.zero(); k = R.add(k, x)) multiples.push_back(k);
  std::vector<elem_t> const base = listing;
  for (elem_t h : base) {
    for (elem_t k : multiples) {
      elem_t const y = R.add(h, k);
      if (!members[y]) {
        members[y] = 1;
        listing.push_back(y);
        fresh.push_back(y);
      }
    }
  }
}

}  // namespace detail

/// Smallest two-sided ideal containing S, by closure iteration: grow the
/// additive subgroup, then multiply every new element by the additive
/// generators on both sides, until nothing new appears.
inline Ideal ideal_generated_by(RingPtr const& ring, ElementSet S) {
  FiniteRing const& R = *ring;
  std::vector<char> members(R.size(), 0);
  ElementSet listing{R.zero()};
  members[R.zero()] = 1;
  std::deque<elem_t> fresh;
  for (elem_t s : S) detail::join_cyclic(R, members, listing, s, fresh);
  while (!fresh.empty()) {
    elem_t const y = fresh.front();
    fresh.pop_front();
    for (std::size_t i = 0; i < R.rank(); ++i) {
      elem_t const e = R.generator(i);
      detail::join_cyclic(R, members, listing, R.mul(e, y), fresh);
      detail::join_cyclic(R, members, listing, R.mul(y, e), fresh);
    }
  }
  std::sort(listing.begin(), listing.end());
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  return Ideal::from_carrier(ring, std::move(listing), std::move(S));
}

inline ElementSet ideal_sum(FiniteRing const& R, ElementSet const& a,
                            ElementSet const& b) {
  std::vector<char> seen(R.size(), 0);
  ElementSet out;
  for (elem_t x : a)
    for (elem_t y : b) {
      elem_t const z = R.add(x, y);
      if (!seen[z]) {
        seen[z] = 1;
        out.push_back(z);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline void check_cap(FiniteRing const& R, std::size_t cap) {
  if (R.size() > cap)
    throw error(errc::too_large, "|R| = " + std::to_string(R.size()) +
                                     " exceeds cap " + std::to_string(cap));
}

/// All two-sided ideals: principal ideals first, then closure under pairwise
/// sums until no new ideal appears. Every ideal of a finite ring is a finite
/// sum of principal ones, so this reaches all of them.
inline std::vector<Ideal> all_ideals(RingPtr const& ring,
                                     std::size_t cap = default_ideal_cap) {
  FiniteRing const& R = *ring;
  check_cap(R, cap);
  std::set<ElementSet> found;
  std::vector<ElementSet> order;
  auto record = [&](ElementSet s) {
    if (found.insert(s).second) order.push_back(std::move(s));
  };
  record({R.zero()});
  for (elem_t a = 1; a < R.size(); ++a)
    record(ideal_generated_by(ring, {a}).carrier());
  std::size_t const principal = order.size();
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 1; j < principal; ++j) {
      record(ideal_sum(R, order[i], order[j]));
    }
  }
  std::vector<Ideal> out;
  out.reserve(order.size());
  std::sort(order.begin(), order.end(),
            [](ElementSet const& a, ElementSet const& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  for (auto& s : order) out.push_back(Ideal::from_carrier(ring, std::move(s)));
  return out;
}

/// P is prime iff P is proper and aRb is not inside P for all a, b outside
/// P. Since r -> a r b is additive, testing the additive generators of R
/// suffices.
inline bool is_prime_ideal(FiniteRing const& R, Ideal const& P) {
  if (!P.is_proper()) return false;
  ElementSet outside;
  for (elem_t a = 0; a < R.size(); ++a)
    if (!P.contains(a)) outside.push_back(a);
  for (elem_t a : outside) {
    for (elem_t b : outside) {
      bool escapes = false;
      for (std::size_t i = 0; i < R.rank() && !escapes; ++i)
        escapes = !P.contains(R.mul(R.mul(a, R.generator(i)), b));
      if (!escapes) return false;
    }
  }
  return true;
}

inline bool is_nil(FiniteRing const& R, ElementSet const& s) {
  for (elem_t a : s)
    if (!is_nilpotent(R, a)) return false;
  return true;
}

/// J(R) = { r : 1 - s r is a unit for every s }.
inline Ideal jacobson_radical(RingPtr const& ring) {
  FiniteRing const& R = *ring;
  ElementSet carrier;
  for (elem_t r = 0; r < R.size(); ++r) {
    bool ok = true;
    for (elem_t s = 0; s < R.size() && ok; ++s)
      ok = R.is_unit(R.sub(R.one(), R.mul(s, r)));
    if (ok) carrier.push_back(r);
  }
  return Ideal::from_carrier(ring, std::move(carrier));
}

/// N_*(R): intersection of all prime ideals.
inline Ideal prime_radical(RingPtr const& ring, std::size_t cap = default_ideal_cap) {
  FiniteRing const& R = *ring;
  auto ideals = all_ideals(ring, cap);
  ElementSet meet = ring->elements();
  for (auto const& I : ideals) {
    if (!is_prime_ideal(R, I)) continue;
    ElementSet next;
    std::set_intersection(meet.begin(), meet.end(), I.carrier().begin(),
                          I.carrier().end(), std::back_inserter(next));
    meet = std::move(next);
  }
  return Ideal::from_carrier(ring, std::move(meet));
}

/// N*(R): sum of all nil ideals.
inline Ideal upper_nilradical(RingPtr const& ring, std::size_t cap = default_ideal_cap) {
  FiniteRing const& R = *ring;
  auto ideals = all_ideals(ring, cap);
  ElementSet sum{R.zero()};
  for (auto const& I : ideals)
    if (is_nil(R, I.carrier())) sum = ideal_sum(R, sum, I.carrier());
  return Ideal::from_carrier(ring, std::move(sum));
}

inline ElementSet additive_span(FiniteRing const& R, ElementSet const& gens) {
  ElementSet span{R.zero()};
  for (elem_t c : gens) {
    if (contains(span, c)) continue;
    ElementSet cyclic{R.zero()};
    for (elem_t k = c; k != R.zero(); k = R.add(k, c)) cyclic.push_back(k);
    std::sort(cyclic.begin(), cyclic.end());
    span = ideal_sum(R, span, cyclic);
  }
  return span;
}

/// True iff I^k = 0 for some k, where I^{k+1} is the additive span of
/// I^k * I. A nilpotent ideal is locally nilpotent: every finite subset
/// generates a nilpotent multiplicative semigroup.
inline bool is_nilpotent_ideal(FiniteRing const& R, ElementSet const& I) {
  ElementSet power = I;
  for (std::size_t step = 0; step <= R.size(); ++step) {
    if (power.size() == 1 && power.front() == R.zero()) return true;
    std::vector<char> seen(R.size(), 0);
    ElementSet products;
    for (elem_t a : power)
      for (elem_t b : I) {
        elem_t const c = R.mul(a, b);
        if (!seen[c]) {
          seen[c] = 1;
          products.push_back(c);
        }
      }
    ElementSet span = additive_span(R, products);
    if (span == power) return false;
    power = std::move(span);
  }
  return false;
}

/// L(R). For finite rings every nil ideal is nilpotent, hence locally
/// nilpotent, so L(R) = N*(R); the result is re-verified to be nilpotent.
inline Ideal levitzki_radical(RingPtr const& ring, std::size_t cap = default_ideal_cap) {
  Ideal upper = upper_nilradical(ring, cap);
  if (!is_nilpotent_ideal(*ring, upper.carrier()))
    throw error(errc::not_an_ideal,
                "upper nilradical of a finite ring failed the local nilpotence check");
  return upper;
}

}  // namespace skewpbw
