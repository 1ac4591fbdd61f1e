#pragma once

// Built-in example rings and extensions. The flagship examples of the theory
// live over infinite rings; these are finite truncations that keep the
// behaviour each check needs (Delta-(non)invariance of N(R), gradings,
// connectedness, failure of compatibility).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewpbw/classify.hpp"
#include "skewpbw/graded.hpp"
#include "skewpbw/nilpotency.hpp"

namespace skewpbw {

/// Ground truths recorded with an entry; unset fields are not asserted.
struct ExpectedProfile {
  std::optional<std::size_t> size;
  std::optional<bool> NI;
  std::optional<bool> NJ;
  std::optional<bool> reduced;
  std::optional<bool> two_primal;
  std::optional<std::size_t> nilpotent_count;
  std::optional<std::size_t> jacobson_size;
  std::optional<bool> bijective;
  std::optional<bool> quasi_commutative;
  std::optional<bool> derivation_type;
  std::optional<bool> weak_sigma_compatible;
  std::optional<bool> weak_delta_compatible;
  std::optional<bool> graded_extension;
  std::optional<bool> connected;
  std::optional<NIVerdict> ni_check;  // at the entry's budget
};

struct CorpusEntry {
  std::string name;
  /// The infinite example the entry stands in for, if any.
  std::string shadows;
  RingPtr ring;
  ExtensionPtr extension;  // null for ring-only entries
  std::optional<Grading> grading;
  ExpectedProfile expected;
  /// Window small enough for the whole harness to run quickly.
  SearchBudget budget;
};

namespace corpus {

inline void require(bool ok, std::string const& what) {
  if (!ok) throw error(errc::param_range, what);
}

inline bool is_small_prime(int p) { return p == 2 || p == 3 || p == 5; }

// ---- rings ----

inline RingPtr zn(int n) {
  require(n >= 2 && n <= 64, "Z_n needs 2 <= n <= 64");
  return make_ring({n}, {{{1}}}, {1}, "Z" + std::to_string(n));
}

/// M_2(Z_p) on the matrix units e11, e12, e21, e22.
inline RingPtr matrix_full(int p) {
  require(is_small_prime(p), "p must be a prime <= 5");
  FiniteRing::constants_t c(4, std::vector<coords_t>(4, coords_t(4, 0)));
  auto idx = [](int i, int j) { return 2 * i + j; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          if (j == k) c[idx(i, j)][idx(k, l)][idx(i, l)] = 1;
  return make_ring({p, p, p, p}, c, {1, 0, 0, 1}, "M2(Z" + std::to_string(p) + ")");
}

/// U_2(Z_p) on e11, e12, e22.
inline RingPtr matrix_upper(int p) {
  require(is_small_prime(p), "p must be a prime <= 5");
  FiniteRing::constants_t c(3, std::vector<coords_t>(3, coords_t(3, 0)));
  // e11 e11 = e11, e11 e12 = e12, e12 e22 = e12, e22 e22 = e22
  c[0][0][0] = 1;
  c[0][1][1] = 1;
  c[1][2][1] = 1;
  c[2][2][2] = 1;
  return make_ring({p, p, p}, c, {1, 0, 1}, "U2(Z" + std::to_string(p) + ")");
}

inline RingPtr product(RingPtr const& R, RingPtr const& S) {
  std::size_t const a = R->rank(), b = S->rank();
  std::vector<int> orders(R->orders().begin(), R->orders().end());
  orders.insert(orders.end(), S->orders().begin(), S->orders().end());
  FiniteRing::constants_t c(a + b, std::vector<coords_t>(a + b, coords_t(a + b, 0)));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) {
      coords_t const v = R->structure_constants()[i][j];
      std::copy(v.begin(), v.end(), c[i][j].begin());
    }
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      coords_t const v = S->structure_constants()[i][j];
      std::copy(v.begin(), v.end(), c[a + i][a + j].begin() + static_cast<long>(a));
    }
  coords_t one = R->decode(R->one());
  coords_t const s1 = S->decode(S->one());
  one.insert(one.end(), s1.begin(), s1.end());
  return make_ring(orders, c, one, R->name() + "x" + S->name());
}

/// Z_p[y]/(y^m) on 1, y, ..., y^{m-1}.
inline RingPtr trunc_poly(int p, int m) {
  require(is_small_prime(p), "p must be a prime <= 5");
  require(m >= 1 && m <= 4, "m must lie in 1..4");
  auto const M = static_cast<std::size_t>(m);
  FiniteRing::constants_t c(M, std::vector<coords_t>(M, coords_t(M, 0)));
  for (std::size_t a = 0; a < M; ++a)
    for (std::size_t b = 0; a + b < M; ++b) c[a][b][a + b] = 1;
  coords_t one(M, 0);
  one[0] = 1;
  return make_ring(std::vector<int>(M, p), c, one,
                   "Z" + std::to_string(p) + "[y]/(y^" + std::to_string(m) + ")");
}

inline std::vector<unsigned> trunc_poly_labels(int m) {
  std::vector<unsigned> l;
  for (int i = 0; i < m; ++i) l.push_back(static_cast<unsigned>(i));
  return l;
}

/// F_4 = Z_2[w]/(w^2 + w + 1) on 1, w.
inline RingPtr gf4() {
  return make_ring({2, 2}, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}}, {1, 0}, "F4");
}

/// Z_p[y_1..y_n]/(y_1..y_n)^2 on 1, y_1, ..., y_n.
inline RingPtr square_zero_poly(int p, int n) {
  require(is_small_prime(p), "p must be a prime <= 5");
  require(n >= 1 && n <= 3, "n must lie in 1..3");
  auto const m = static_cast<std::size_t>(n) + 1;
  FiniteRing::constants_t c(m, std::vector<coords_t>(m, coords_t(m, 0)));
  for (std::size_t i = 0; i < m; ++i) {
    c[0][i][i] = 1;
    c[i][0][i] = 1;
  }
  coords_t one(m, 0);
  one[0] = 1;
  std::string name = "Z" + std::to_string(p) + "[y1";
  for (int k = 2; k <= n; ++k) name += ",y" + std::to_string(k);
  return make_ring(std::vector<int>(m, p), c, one, name + "]/(y)^2");
}

// ---- maps ----

inline MapPtr swap_map(RingPtr const& R) {
  require(R->rank() == 2, "swap needs rank 2");
  return make_endomorphism(R, {{0, 1}, {1, 0}});
}

inline MapPtr frobenius_gf4(RingPtr const& R) {
  // 1 -> 1, w -> w^2 = w + 1
  return make_endomorphism(R, {{1, 1}, {0, 1}});
}

/// delta(y^a) = a * c * y^{a-1+k} on Z_p[y]/(y^m); k = 0 is d/dy scaled.
inline MapPtr power_derivation(RingPtr const& R, MapPtr const& id, int c, int k) {
  std::size_t const m = R->rank();
  RingMap::matrix_t M(m, std::vector<int>(m, 0));
  for (std::size_t a = 1; a < m; ++a) {
    std::size_t const target = a - 1 + static_cast<std::size_t>(k);
    if (target < m) M[target][a] = static_cast<int>(a) * c;
  }
  return make_sigma_derivation(R, id, M);
}

// ---- extensions ----

inline ExtensionPtr finish(std::shared_ptr<Extension> ext) {
  auto const v = verify_presentation(*ext);
  if (!v.ok)
    throw error(errc::overlap_fails, ext->name() + ": " + v.check + " " + v.description);
  return ext;
}

inline ExtensionPtr single(RingPtr const& R, MapPtr sigma, MapPtr delta, std::string name) {
  SigmaSystem sys(R, {std::move(sigma)}, {std::move(delta)});
  return finish(make_extension(R, std::move(sys), {}, {}, std::move(name)));
}

inline ExtensionPtr ore_identity(RingPtr const& R, std::size_t n, std::string name) {
  return finish(make_extension(R, SigmaSystem::trivial(R, n), {}, {}, std::move(name)));
}

inline ExtensionPtr swap_extension() {
  auto R = product(zn(2), zn(2));
  auto s = swap_map(R);
  return single(R, s, zero_derivation(R, s), "swap");
}

/// Z_p[y]/(y^p) with delta = d/dy; truncating at y^p keeps d/dy a derivation.
inline ExtensionPtr weyl_like(int p) {
  require(p == 2 || p == 3, "weyl_like needs p in {2, 3}");
  auto R = trunc_poly(p, p);
  auto id = identity_map(R);
  return single(R, id, power_derivation(R, id, 1, 0), "weyl_like(" + std::to_string(p) + ")");
}

/// Same base with delta = y d/dy.
inline ExtensionPtr euler_like(int p) {
  require(p == 2 || p == 3, "euler_like needs p in {2, 3}");
  auto R = trunc_poly(p, p);
  auto id = identity_map(R);
  return single(R, id, power_derivation(R, id, 1, 1), "euler_like(" + std::to_string(p) + ")");
}

/// Two variables over Z_2[y]/(y^2), delta_1 = d/dy, delta_2 = 0 and the
/// relation x_2 x_1 = x_1 x_2 + x_1: the tail is not compatible with
/// delta_1, so the overlap (x_2 x_1) y = x_2 (x_1 y) fails. Returned
/// unverified.
inline std::shared_ptr<Extension> corrupted_weyl_fixture() {
  auto R = trunc_poly(2, 2);
  auto id = identity_map(R);
  SigmaSystem sys(R, {id, id}, {power_derivation(R, id, 1, 0), zero_derivation(R, id)});
  Tail t;
  t.linear = {R->one(), R->zero()};
  return make_extension(R, std::move(sys), {}, {{{0, 1}, t}}, "weyl_like(2)/corrupted");
}

/// x_j x_i = -x_i x_j + sum_k (M_k)_{ij} y_k over Z_p[y_1..y_n]/(y)^2 with
/// y_k in degree 2. Only the entries i < j enter the presentation.
inline ExtensionPtr clifford_trunc(int n, std::vector<std::vector<std::vector<int>>> const& Ms,
                                   int p = 2) {
  require(n >= 1 && n <= 3, "clifford_trunc needs 1 <= n <= 3");
  require(Ms.size() == static_cast<std::size_t>(n), "need n matrices");
  auto R = square_zero_poly(p, n);
  auto const N = static_cast<std::size_t>(n);
  DTable d;
  TailTable tails;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      d[{i, j}] = R->neg(R->one());
      coords_t c(N + 1, 0);
      for (std::size_t k = 0; k < N; ++k) {
        require(Ms[k].size() == N && Ms[k][i].size() == N, "matrices must be n x n");
        require(Ms[k][i][j] == Ms[k][j][i], "matrices must be symmetric");
        c[k + 1] = Ms[k][i][j];
      }
      Tail t;
      t.constant = R->encode(c);
      tails[{i, j}] = t;
    }
  return finish(make_extension(R, SigmaSystem::trivial(R, N), d, tails,
                               "clifford_trunc(" + std::to_string(n) + ")"));
}

inline std::vector<std::vector<std::vector<int>>> identity_matrices(int n) {
  std::vector<std::vector<int>> I(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) I[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return std::vector<std::vector<std::vector<int>>>(static_cast<std::size_t>(n), I);
}

inline Grading clifford_grading(RingPtr const& R) {
  std::vector<unsigned> labels(R->rank(), 2);
  labels[0] = 0;
  return Grading(R, labels);
}

/// Quasi-commutative extension over R with the given sigmas and d table.
inline ExtensionPtr quasi_comm(RingPtr const& R, std::vector<MapPtr> sigmas, DTable d,
                               std::string name) {
  std::vector<MapPtr> deltas;
  for (auto const& s : sigmas) deltas.push_back(zero_derivation(R, s));
  SigmaSystem sys(R, std::move(sigmas), std::move(deltas));
  return finish(make_extension(R, std::move(sys), std::move(d), {}, std::move(name)));
}

// ---- entries ----

inline CorpusEntry ring_entry(std::string name, RingPtr R, ExpectedProfile e,
                              std::string shadows = "") {
  CorpusEntry c;
  c.name = std::move(name);
  c.shadows = std::move(shadows);
  c.ring = std::move(R);
  c.expected = e;
  return c;
}

inline CorpusEntry ext_entry(std::string name, ExtensionPtr A, ExpectedProfile e,
                             SearchBudget budget, std::string shadows = "",
                             std::optional<Grading> grading = std::nullopt) {
  CorpusEntry c;
  c.name = std::move(name);
  c.shadows = std::move(shadows);
  c.ring = A->base();
  c.extension = std::move(A);
  c.grading = std::move(grading);
  c.expected = e;
  c.budget = budget;
  return c;
}

inline SearchBudget window(std::size_t degree, std::size_t support, std::size_t exponent = 16) {
  SearchBudget b;
  b.degree_cap = degree;
  b.support_cap = support;
  b.exponent_cap = exponent;
  return b;
}

inline std::vector<CorpusEntry> build_all() {
  std::vector<CorpusEntry> out;
  ExpectedProfile e;

  e = {};
  e.size = 4; e.NI = true; e.NJ = true; e.reduced = false; e.two_primal = true;
  e.nilpotent_count = 2; e.jacobson_size = 2;
  out.push_back(ring_entry("z4", zn(4), e));
  e = {};
  e.size = 6; e.NI = true; e.NJ = true; e.reduced = true; e.nilpotent_count = 1;
  out.push_back(ring_entry("z6", zn(6), e));
  e = {};
  e.size = 8; e.NI = true; e.NJ = true; e.reduced = false; e.nilpotent_count = 4;
  out.push_back(ring_entry("z8", zn(8), e));
  e = {};
  e.size = 4; e.NI = true; e.NJ = true; e.reduced = true; e.nilpotent_count = 1;
  e.jacobson_size = 1;
  out.push_back(ring_entry("z2xz2", product(zn(2), zn(2)), e));
  e = {};
  e.size = 16; e.NI = false; e.NJ = false; e.reduced = false; e.nilpotent_count = 4;
  e.jacobson_size = 1;
  out.push_back(ring_entry("m2z2", matrix_full(2), e));
  e = {};
  e.size = 8; e.NI = true; e.NJ = true; e.reduced = false; e.nilpotent_count = 2;
  e.jacobson_size = 2;
  out.push_back(ring_entry("u2z2", matrix_upper(2), e));
  e = {};
  e.size = 27; e.NI = true; e.NJ = true; e.nilpotent_count = 3; e.jacobson_size = 3;
  out.push_back(ring_entry("u2z3", matrix_upper(3), e));
  e = {};
  e.size = 4; e.NI = true; e.NJ = true; e.reduced = true; e.nilpotent_count = 1;
  out.push_back(ring_entry("gf4", gf4(), e));
  e = {};
  e.size = 8; e.NI = true; e.NJ = true; e.nilpotent_count = 4; e.jacobson_size = 4;
  out.push_back(ring_entry("trunc_2_3", trunc_poly(2, 3), e));
  e = {};
  e.size = 16; e.NI = true; e.NJ = true; e.nilpotent_count = 2;
  out.push_back(ring_entry("z2xz2_x_z4", product(product(zn(2), zn(2)), zn(4)), e));
  e = {};
  e.size = 32; e.NI = false; e.NJ = false; e.nilpotent_count = 4;
  out.push_back(ring_entry("m2z2_x_z2", product(matrix_full(2), zn(2)), e));

  // extensions
  e = {};
  e.NI = true; e.reduced = true; e.bijective = true; e.quasi_commutative = true;
  e.weak_sigma_compatible = false; e.weak_delta_compatible = true;
  e.ni_check = NIVerdict::violation;
  out.push_back(ext_entry("swap", swap_extension(), e, window(2, 2)));

  e = {};
  e.nilpotent_count = 2; e.derivation_type = true; e.bijective = true;
  e.weak_delta_compatible = false; e.ni_check = NIVerdict::violation;
  out.push_back(ext_entry("weyl_like_2", weyl_like(2), e, window(2, 2),
                          "Weyl algebra / differential operator ring"));
  e = {};
  e.nilpotent_count = 9; e.derivation_type = true; e.weak_delta_compatible = false;
  e.ni_check = NIVerdict::violation;
  out.push_back(ext_entry("weyl_like_3", weyl_like(3), e, window(1, 2),
                          "Weyl algebra / differential operator ring"));
  e = {};
  e.nilpotent_count = 2; e.derivation_type = true; e.bijective = true;
  e.weak_sigma_compatible = true; e.weak_delta_compatible = true;
  e.ni_check = NIVerdict::consistent;
  out.push_back(ext_entry("euler_like_2", euler_like(2), e, window(2, 3, 8),
                          "enveloping algebra of the 2-dim non-abelian Lie algebra"));
  e = {};
  e.nilpotent_count = 9; e.derivation_type = true; e.weak_delta_compatible = true;
  e.ni_check = NIVerdict::consistent;
  out.push_back(ext_entry("euler_like_3", euler_like(3), e, window(1, 2),
                          "enveloping algebra of the 2-dim non-abelian Lie algebra"));

  {
    auto A = clifford_trunc(2, identity_matrices(2));
    e = {};
    e.size = 8; e.bijective = true; e.quasi_commutative = true; e.graded_extension = true;
    e.connected = true; e.ni_check = NIVerdict::consistent;
    out.push_back(ext_entry("clifford_trunc_2", A, e, window(2, 2), "graded Clifford algebra",
                            clifford_grading(A->base())));
  }
  {
    std::vector<std::vector<std::vector<int>>> Ms = {{{0, 1}, {1, 0}}, {{0, 0}, {0, 0}}};
    auto A = clifford_trunc(2, Ms);
    e = {};
    e.size = 8; e.bijective = true; e.quasi_commutative = false; e.graded_extension = true;
    e.connected = true; e.ni_check = NIVerdict::consistent;
    out.push_back(ext_entry("clifford_trunc_2_mixed", A, e, window(2, 2),
                            "graded Clifford algebra", clifford_grading(A->base())));
  }
  {
    std::vector<std::vector<std::vector<int>>> Ms = {{{0, 1}, {1, 0}}, {{0, 0}, {0, 0}}};
    auto A = clifford_trunc(2, Ms, 3);
    e = {};
    e.size = 27; e.bijective = true; e.graded_extension = true; e.connected = true;
    out.push_back(ext_entry("clifford_trunc_2_p3", A, e, window(1, 2),
                            "graded Clifford algebra", clifford_grading(A->base())));
  }
  {
    auto R = zn(3);
    auto id = identity_map(R);
    e = {};
    e.reduced = true; e.bijective = true; e.quasi_commutative = true;
    e.weak_sigma_compatible = true; e.graded_extension = true;
    e.ni_check = NIVerdict::consistent;
    out.push_back(ext_entry("qc_z3_d2", quasi_comm(R, {id, id}, {{{0, 1}, 2}}, "qc_z3_d2"), e,
                            window(2, 2), "", Grading::trivial(R)));
  }
  {
    auto R = gf4();
    auto fr = frobenius_gf4(R);
    auto id = identity_map(R);
    e = {};
    e.reduced = true; e.bijective = true; e.quasi_commutative = true;
    e.weak_sigma_compatible = true; e.graded_extension = true;
    e.ni_check = NIVerdict::consistent;
    out.push_back(ext_entry("qc_gf4_frobenius",
                            quasi_comm(R, {fr, id}, {{{0, 1}, R->encode({0, 1})}},
                                       "qc_gf4_frobenius"),
                            e, window(2, 2), "", Grading::trivial(R)));
  }
  {
    auto R = zn(4);
    auto id = identity_map(R);
    e = {};
    e.nilpotent_count = 2; e.bijective = true; e.quasi_commutative = true;
    e.weak_sigma_compatible = true; e.graded_extension = true;
    e.ni_check = NIVerdict::consistent;
    out.push_back(ext_entry("qc_z4_d3", quasi_comm(R, {id, id}, {{{0, 1}, 3}}, "qc_z4_d3"), e,
                            window(2, 2), "", Grading::trivial(R)));
  }
  {
    auto R = product(zn(2), zn(2));
    auto id = identity_map(R);
    e = {};
    e.reduced = true; e.bijective = true; e.quasi_commutative = true;
    e.weak_sigma_compatible = true; e.graded_extension = true;
    e.ni_check = NIVerdict::consistent;
    out.push_back(ext_entry("qc_z2xz2_id", quasi_comm(R, {id}, {}, "qc_z2xz2_id"), e,
                            window(2, 3), "", Grading::trivial(R)));
  }
  {
    auto R = zn(4);
    e = {};
    e.bijective = true; e.quasi_commutative = true; e.derivation_type = true;
    e.ni_check = NIVerdict::consistent;
    out.push_back(ext_entry("commutative_z4_xy", ore_identity(R, 2, "commutative_z4_xy"), e,
                            window(2, 2), "commutative polynomial ring R[x, y]",
                            Grading::trivial(R)));
  }
  {
    auto R = matrix_upper(2);
    e = {};
    e.NI = true; e.bijective = true; e.quasi_commutative = true; e.derivation_type = true;
    e.weak_sigma_compatible = true; e.ni_check = NIVerdict::consistent;
    out.push_back(ext_entry("u2z2_poly", ore_identity(R, 1, "u2z2_poly"), e, window(2, 2), "",
                            Grading::trivial(R)));
  }
  {
    auto R = matrix_full(2);
    e = {};
    e.NI = false; e.bijective = true; e.derivation_type = true; e.weak_sigma_compatible = true;
    e.ni_check = NIVerdict::violation;
    out.push_back(ext_entry("m2z2_poly", ore_identity(R, 1, "m2z2_poly"), e, window(1, 1), "",
                            Grading::trivial(R)));
  }
  return out;
}

/// The corpus, built once.
inline std::vector<CorpusEntry> const& all() {
  static std::vector<CorpusEntry> const entries = build_all();
  return entries;
}

inline std::vector<std::string> names() {
  std::vector<std::string> out;
  for (auto const& e : all()) out.push_back(e.name);
  return out;
}

inline CorpusEntry const& by_name(std::string const& name) {
  for (auto const& e : all())
    if (e.name == name) return e;
  throw error(errc::param_range, "no corpus entry named '" + name + "'");
}

/// Recomputes every annotated field; returns one line per mismatch.
inline std::vector<std::string> self_check(CorpusEntry const& c) {
  std::vector<std::string> bad;
  auto cmp = [&](char const* what, auto const& expected, auto const& actual) {
    if (expected && *expected != actual) bad.push_back(c.name + ": " + what);
  };
  auto const& x = c.expected;
  cmp("size", x.size, c.ring->size());
  bool const ring_fields = x.NI || x.NJ || x.reduced || x.two_primal || x.jacobson_size;
  if (ring_fields) {
    RingProfile const p = classify_ring(c.ring);
    cmp("NI", x.NI, p.NI);
    cmp("NJ", x.NJ, p.NJ);
    cmp("reduced", x.reduced, p.reduced);
    cmp("two_primal", x.two_primal, p.two_primal);
    cmp("jacobson_size", x.jacobson_size, p.jacobson_radical.size());
  }
  cmp("nilpotent_count", x.nilpotent_count, nilpotent_set(*c.ring).size());
  if (c.extension) {
    ExtensionPtr const& A = c.extension;
    if (!A->verified()) bad.push_back(c.name + ": presentation not verified");
    cmp("bijective", x.bijective, A->flags().bijective);
    cmp("quasi_commutative", x.quasi_commutative, A->flags().quasi_commutative);
    cmp("derivation_type", x.derivation_type, A->flags().derivation_type);
    cmp("weak_sigma_compatible", x.weak_sigma_compatible,
        is_weak_sigma_compatible(A->system()).holds);
    cmp("weak_delta_compatible", x.weak_delta_compatible,
        is_weak_delta_compatible(A->system()).holds);
    if (c.grading && (x.graded_extension || x.connected)) {
      GradedProfile const g = is_graded_extension(*A, *c.grading);
      cmp("graded_extension", x.graded_extension, g.is_graded_extension);
      cmp("connected", x.connected, g.connected);
    }
    if (x.ni_check) cmp("ni_check", x.ni_check, bounded_NI_check(A, c.budget).verdict);
  }
  return bad;
}

}  // namespace corpus
}  // namespace skewpbw
