#pragma once

// N-gradings attached to the additive generators of a finite ring, the graded
// extension conditions, and homogeneous decomposition in A. R_p is the span
// of the generators labelled p.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewpbw/polynomial.hpp"

namespace skewpbw {

class Grading {
 public:
  Grading(RingPtr ring, std::vector<unsigned> labels)
      : ring_(std::move(ring)), labels_(std::move(labels)) {
    FiniteRing const& R = *ring_;
    if (labels_.size() != R.rank())
      throw error(errc::shape_mismatch, "need one degree label per generator");
    for (std::size_t s = 0; s < R.rank(); ++s)
      for (std::size_t t = 0; t < R.rank(); ++t)
        if (!in_degree(R.mul(R.generator(s), R.generator(t)), labels_[s] + labels_[t]))
          throw error(errc::inhomogeneous_constant,
                      "e_" + std::to_string(s + 1) + "*e_" + std::to_string(t + 1));
    if (!in_degree(R.one(), 0)) throw error(errc::identity_not_degree_zero, R.format(R.one()));
  }

  static Grading trivial(RingPtr ring) {
    std::vector<unsigned> zeros(ring->rank(), 0);
    return Grading(std::move(ring), std::move(zeros));
  }

  RingPtr const& ring() const noexcept { return ring_; }
  std::vector<unsigned> const& labels() const noexcept { return labels_; }

  /// x lies in R_p (zero lies in every R_p).
  bool in_degree(elem_t x, unsigned p) const {
    coords_t const c = ring_->decode(x);
    for (std::size_t t = 0; t < c.size(); ++t)
      if (c[t] != 0 && labels_[t] != p) return false;
    return true;
  }

  /// Component of x in R_p.
  elem_t component(elem_t x, unsigned p) const {
    coords_t c = ring_->decode(x);
    for (std::size_t t = 0; t < c.size(); ++t)
      if (labels_[t] != p) c[t] = 0;
    return ring_->encode(c);
  }

  /// Degrees carrying a nonzero component of x, ascending.
  std::vector<unsigned> support(elem_t x) const {
    coords_t const c = ring_->decode(x);
    std::vector<unsigned> out;
    for (std::size_t t = 0; t < c.size(); ++t)
      if (c[t] != 0) out.push_back(labels_[t]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Elements of R_p.
  ElementSet part(unsigned p) const {
    ElementSet out;
    for (elem_t x = 0; x < ring_->size(); ++x)
      if (in_degree(x, p)) out.push_back(x);
    return out;
  }

 private:
  RingPtr ring_;
  std::vector<unsigned> labels_;
};

inline Grading attach_grading(RingPtr ring, std::vector<unsigned> labels) {
  return Grading(std::move(ring), std::move(labels));
}

struct GradedCondition {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct GradedProfile {
  bool is_graded_extension = true;
  bool connected = false;
  std::vector<GradedCondition> conditions;
};

/// R_0 = Z 1 and R_0 is a field.
inline bool is_connected(Grading const& g) {
  FiniteRing const& R = *g.ring();
  ElementSet const r0 = g.part(0);
  ElementSet multiples;
  elem_t k = R.zero();
  do {
    multiples.push_back(k);
    k = R.add(k, R.one());
  } while (k != R.zero());
  std::sort(multiples.begin(), multiples.end());
  if (multiples != r0) return false;
  for (elem_t a : r0) {
    if (a == R.zero()) continue;
    bool inverse = false;
    for (elem_t b : r0) inverse = inverse || R.mul(a, b) == R.one();
    if (!inverse) return false;
  }
  return true;
}

/// Sigmas preserve degree, deltas raise it by one, d_ij in R_0, tail
/// constants in R_2 and linear tail coefficients in R_1.
inline GradedProfile is_graded_extension(Extension const& A, Grading const& g) {
  if (g.ring() != A.base()) throw error(errc::ring_mismatch, "grading of another ring");
  if (!A.flags().bijective) throw error(errc::not_bijective, A.name());
  FiniteRing const& R = A.ring();
  std::size_t const n = A.vars();
  GradedProfile out;
  auto record = [&](std::string name, std::string detail) {
    GradedCondition c{std::move(name), detail.empty(), std::move(detail)};
    out.is_graded_extension = out.is_graded_extension && c.ok;
    out.conditions.push_back(std::move(c));
  };
  auto gen = [](std::size_t t) { return "e_" + std::to_string(t + 1); };
  for (std::size_t i = 0; i < n; ++i) {
    std::string bad_sigma, bad_delta;
    for (std::size_t t = 0; t < R.rank() && bad_sigma.empty(); ++t)
      if (!g.in_degree(A.system().sigma(i)(R.generator(t)), g.labels()[t]))
        bad_sigma = "sigma_" + std::to_string(i + 1) + "(" + gen(t) + ")";
    for (std::size_t t = 0; t < R.rank() && bad_delta.empty(); ++t)
      if (!g.in_degree(A.system().delta(i)(R.generator(t)), g.labels()[t] + 1))
        bad_delta = "delta_" + std::to_string(i + 1) + "(" + gen(t) + ")";
    record("sigma_" + std::to_string(i + 1) + " graded", bad_sigma);
    record("delta_" + std::to_string(i + 1) + " raises degree by 1", bad_delta);
  }
  std::string bad_d, bad_tail;
  for (auto const& [key, v] : A.d())
    if (bad_d.empty() && !g.in_degree(v, 0))
      bad_d = "d_" + std::to_string(key.first + 1) + "," + std::to_string(key.second + 1);
  for (auto const& [key, t] : A.tails()) {
    if (!bad_tail.empty()) break;
    std::string const tag = std::to_string(key.first + 1) + "," + std::to_string(key.second + 1);
    if (!g.in_degree(t.constant, 2)) bad_tail = "constant tail " + tag;
    for (std::size_t k = 0; k < n && bad_tail.empty(); ++k)
      if (!g.in_degree(t.linear[k], 1))
        bad_tail = "linear tail " + tag + " at " + detail::var_name(n, k);
  }
  record("d in R_0", bad_d);
  record("tails in R_2 + R_1 x", bad_tail);
  out.connected = is_connected(g);
  return out;
}

/// Degree of r x^alpha for r in R_t: t + |alpha|.
inline std::optional<unsigned> homogeneous_degree(SkewPolynomial const& f, Grading const& g) {
  std::optional<unsigned> deg;
  for (auto const& [m, c] : f.terms())
    for (unsigned t : g.support(c)) {
      unsigned const p = t + m.degree();
      if (deg && *deg != p) return std::nullopt;
      deg = p;
    }
  if (!deg) return 0u;
  return deg;
}

/// Splits f into homogeneous parts, ascending by degree; parts sum to f.
inline std::vector<std::pair<unsigned, SkewPolynomial>> homogeneous_components(
    SkewPolynomial const& f, Grading const& g) {
  ExtensionPtr const& A = f.extension();
  if (g.ring() != A->base()) throw error(errc::ring_mismatch, "grading of another ring");
  if (!A->flags().bijective || !is_graded_extension(*A, g).is_graded_extension)
    throw error(errc::not_graded, A->name());
  std::map<unsigned, Terms> parts;
  for (auto const& [m, c] : f.terms())
    for (unsigned t : g.support(c)) A->add_term(parts[t + m.degree()], m, g.component(c, t));
  std::vector<std::pair<unsigned, SkewPolynomial>> out;
  for (auto& [p, terms] : parts) out.emplace_back(p, SkewPolynomial(A, std::move(terms)));
  return out;
}

}  // namespace skewpbw
