#include <array>
#include <set>

#include "catch_amalgamated.hpp"
#include "skewpbw/classify.hpp"
#include "skewpbw/corpus.hpp"

using namespace skewpbw;

namespace {

// 2x2 matrices over Z_p, stored row-major; coordinates (a11, a12, a21, a22).
using Mat = std::array<int, 4>;

Mat mat_mul(Mat const& a, Mat const& b, int p) {
  return {(a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p,
          (a[2] * b[0] + a[3] * b[2]) % p, (a[2] * b[1] + a[3] * b[3]) % p};
}

Mat as_mat(FiniteRing const& R, elem_t x) {
  coords_t c = R.decode(x);
  return {c[0], c[1], c[2], c[3]};
}

elem_t from_mat(FiniteRing const& R, Mat const& m) { return R.encode({m[0], m[1], m[2], m[3]}); }

// Upper triangular: coordinates (a11, a12, a22).
Mat upper_mat(FiniteRing const& R, elem_t x) {
  coords_t c = R.decode(x);
  return {c[0], c[1], 0, c[2]};
}

ElementSet sorted(ElementSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// All two-sided ideals by subset enumeration.
std::vector<ElementSet> brute_ideals(FiniteRing const& R) {
  std::vector<ElementSet> out;
  std::size_t const n = R.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {  // 0 always in
    ElementSet s;
    for (elem_t x = 0; x < n; ++x)
      if (mask >> x & 1) s.push_back(x);
    bool ok = true;
    for (elem_t a : s) {
      for (elem_t b : s) ok = ok && contains(s, R.add(a, b));
      for (elem_t r = 0; r < n && ok; ++r)
        ok = contains(s, R.mul(r, a)) && contains(s, R.mul(a, r));
      if (!ok) break;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

bool brute_nilpotent(FiniteRing const& R, elem_t a) {
  elem_t p = a;
  for (std::size_t k = 0; k <= R.size(); ++k) {
    if (p == R.zero()) return true;
    p = R.mul(p, a);
  }
  return false;
}

bool brute_unit(FiniteRing const& R, elem_t a) {
  for (elem_t b = 0; b < R.size(); ++b)
    if (R.mul(a, b) == R.one() && R.mul(b, a) == R.one()) return true;
  return false;
}

// r in J iff 1 - s r is a unit for every s.
ElementSet naive_jacobson(FiniteRing const& R) {
  ElementSet out;
  for (elem_t r = 0; r < R.size(); ++r) {
    bool in = true;
    for (elem_t s = 0; s < R.size() && in; ++s) in = brute_unit(R, R.sub(R.one(), R.mul(s, r)));
    if (in) out.push_back(r);
  }
  return out;
}

struct BruteRadicals {
  ElementSet prime, upper, levitzki;
};

BruteRadicals brute_radicals(FiniteRing const& R) {
  auto const ideals = brute_ideals(R);
  ElementSet all;
  for (elem_t x = 0; x < R.size(); ++x) all.push_back(x);
  BruteRadicals out;
  out.prime = all;
  for (auto const& P : ideals) {
    if (P.size() == R.size()) continue;
    bool prime = true;
    for (elem_t a = 0; a < R.size() && prime; ++a) {
      if (contains(P, a)) continue;
      for (elem_t b = 0; b < R.size() && prime; ++b) {
        if (contains(P, b)) continue;
        bool inside = true;  // aRb in P
        for (elem_t r = 0; r < R.size() && inside; ++r) inside = contains(P, R.mul(R.mul(a, r), b));
        if (inside) prime = false;
      }
    }
    if (!prime) continue;
    ElementSet meet;
    for (elem_t x : out.prime)
      if (contains(P, x)) meet.push_back(x);
    out.prime = meet;
  }
  // largest nil ideal and largest nilpotent ideal (both exist for finite rings)
  for (auto const& I : ideals) {
    bool nil = true;
    for (elem_t a : I) nil = nil && brute_nilpotent(R, a);
    if (nil && I.size() > out.upper.size()) out.upper = I;
    // nilpotent: I^k = 0 for some k; products of |R| elements suffice
    ElementSet power = I;
    for (std::size_t k = 0; k < R.size() && power.size() > 1; ++k) {
      ElementSet next;
      for (elem_t a : power)
        for (elem_t b : I) next.push_back(R.mul(a, b));
      next = sorted(next);
      // additive closure
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t i = 0; i < next.size(); ++i)
          for (std::size_t j = 0; j < next.size(); ++j) {
            elem_t s = R.add(next[i], next[j]);
            if (!contains(next, s)) {
              next.push_back(s);
              next = sorted(next);
              grew = true;
            }
          }
      }
      power = next;
    }
    if (power.size() <= 1 && I.size() > out.levitzki.size()) out.levitzki = I;
  }
  return out;
}

}  // namespace

TEST_CASE("constructors build the standard small rings", "[ring]") {
  auto Z4 = make_ring({4}, {{{1}}}, {1}, "Z4");
  CHECK(Z4->size() == 4);
  CHECK(Z4->one() == Z4->encode({1}));
  CHECK(Z4->mul(Z4->encode({2}), Z4->encode({2})) == Z4->zero());
  CHECK(Z4->mul(Z4->encode({3}), Z4->encode({3})) == Z4->one());

  auto P = make_ring({2, 2}, {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}}, {1, 1}, "Z2xZ2");
  CHECK(P->size() == 4);
  CHECK(P->mul(P->encode({1, 0}), P->encode({0, 1})) == P->zero());
  CHECK(P->mul(P->encode({1, 1}), P->encode({1, 0})) == P->encode({1, 0}));
}

TEST_CASE("M_2(Z_2) agrees with explicit matrix multiplication", "[ring][oracle]") {
  auto R = corpus::matrix_full(2);
  REQUIRE(R->size() == 16);
  for (elem_t a = 0; a < 16; ++a)
    for (elem_t b = 0; b < 16; ++b)
      REQUIRE(R->mul(a, b) == from_mat(*R, mat_mul(as_mat(*R, a), as_mat(*R, b), 2)));
  // associativity over all 16^3 triples
  for (elem_t a = 0; a < 16; ++a)
    for (elem_t b = 0; b < 16; ++b)
      for (elem_t c = 0; c < 16; ++c)
        REQUIRE(R->mul(R->mul(a, b), c) == R->mul(a, R->mul(b, c)));
  elem_t const s = R->encode({0, 1, 1, 0});
  CHECK(R->pow(s, 2) == R->one());
  CHECK(R->one() == from_mat(*R, {1, 0, 0, 1}));
}

TEST_CASE("M_2(Z_3) and U_2(Z_3) agree with matrix multiplication", "[ring][oracle]") {
  auto M = corpus::matrix_full(3);
  REQUIRE(M->size() == 81);
  for (elem_t a = 0; a < 81; ++a)
    for (elem_t b = 0; b < 81; ++b)
      REQUIRE(M->mul(a, b) == from_mat(*M, mat_mul(as_mat(*M, a), as_mat(*M, b), 3)));
  auto U = corpus::matrix_upper(3);
  REQUIRE(U->size() == 27);
  for (elem_t a = 0; a < 27; ++a)
    for (elem_t b = 0; b < 27; ++b) {
      Mat const m = mat_mul(upper_mat(*U, a), upper_mat(*U, b), 3);
      REQUIRE(m[2] == 0);
      REQUIRE(U->mul(a, b) == U->encode({m[0], m[1], m[3]}));
    }
}

TEST_CASE("constructor rejects malformed data", "[ring][errors]") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (error const& e) {
      return e.code();
    }
    return errc::param_range;  // sentinel: nothing thrown
  };
  CHECK(code_of([] { make_ring({4}, {}, {1}); }) == errc::bad_shape);
  CHECK(code_of([] { make_ring({4}, {{{1}}}, {1, 0}); }) == errc::bad_shape);
  // e*e = 2e in Z_4 and one = e: 1*1 = 2 != 1
  CHECK(code_of([] { make_ring({4}, {{{2}}}, {1}); }) == errc::bad_identity);
  // e1*e2 = e1 but e2*e1 = e2 and e_i*e_i = 0: (e1 e2) e2 = e1, e1 (e2 e2) = 0
  CHECK(code_of([] {
          make_ring({2, 2}, {{{0, 0}, {1, 0}}, {{0, 1}, {0, 0}}}, {1, 1});
        }) == errc::non_associative);
  // e1 has order 2 but e1*e2 = e2 has order 4
  CHECK(code_of([] { make_ring({2, 4}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}}, {1, 0}); }) ==
        errc::bad_shape);
}

TEST_CASE("nilpotent sets", "[ring][radicals]") {
  auto Z4 = corpus::zn(4);
  CHECK(nilpotent_set(*Z4) == ElementSet{0, Z4->encode({2})});
  auto P = corpus::product(corpus::zn(2), corpus::zn(2));
  CHECK(nilpotent_set(*P) == ElementSet{0});

  // M_2(Z_2): power-iterate each matrix with the explicit product
  auto M = corpus::matrix_full(2);
  ElementSet expected;
  for (elem_t a = 0; a < 16; ++a) {
    Mat p = as_mat(*M, a);
    for (int k = 0; k < 4; ++k) p = mat_mul(p, as_mat(*M, a), 2);
    if (p == Mat{0, 0, 0, 0}) expected.push_back(a);
  }
  CHECK(expected.size() == 4);
  CHECK(nilpotent_set(*M) == expected);
  CHECK(nilpotency_index(*M, M->encode({0, 1, 0, 0})) == 2);
  CHECK(nilpotency_index(*M, M->one()) == 0);
}

TEST_CASE("Jacobson radical matches the invertibility oracle", "[ring][radicals][oracle]") {
  for (auto const& e : corpus::all()) {
    if (e.ring->size() > 64) continue;
    INFO(e.name);
    CHECK(jacobson_radical(e.ring).carrier() == naive_jacobson(*e.ring));
  }
  auto Z4 = corpus::zn(4);
  CHECK(jacobson_radical(Z4).carrier() == ElementSet{0, 2});
  auto U = corpus::matrix_upper(2);
  CHECK(jacobson_radical(U).carrier() == ElementSet{0, U->encode({0, 1, 0})});
  auto P = corpus::product(corpus::zn(2), corpus::zn(2));
  CHECK(jacobson_radical(P).carrier() == ElementSet{0});
}

TEST_CASE("ideal enumeration matches subset enumeration", "[ring][radicals][oracle]") {
  for (auto const& e : corpus::all()) {
    if (e.ring->size() > 16) continue;
    INFO(e.name);
    std::set<ElementSet> mine, brute;
    for (auto const& I : all_ideals(e.ring)) mine.insert(I.carrier());
    for (auto const& s : brute_ideals(*e.ring)) brute.insert(s);
    CHECK(mine == brute);
  }
  auto Z4 = corpus::zn(4);
  CHECK(all_ideals(Z4).size() == 3);
}

TEST_CASE("prime, upper nil and Levitzki radicals match brute force", "[ring][radicals][oracle]") {
  for (auto const& e : corpus::all()) {
    if (e.ring->size() > 16) continue;
    INFO(e.name);
    BruteRadicals const b = brute_radicals(*e.ring);
    CHECK(prime_radical(e.ring).carrier() == b.prime);
    CHECK(upper_nilradical(e.ring).carrier() == b.upper);
    CHECK(levitzki_radical(e.ring).carrier() == b.levitzki);
  }
}

TEST_CASE("radical examples", "[ring][radicals]") {
  auto Z4 = corpus::zn(4);
  ElementSet const two{0, 2};
  CHECK(prime_radical(Z4).carrier() == two);
  CHECK(upper_nilradical(Z4).carrier() == two);
  CHECK(levitzki_radical(Z4).carrier() == two);
  auto P = corpus::product(corpus::zn(2), corpus::zn(2));
  CHECK(prime_radical(P).carrier() == ElementSet{0});
  auto F = corpus::gf4();
  CHECK(prime_radical(F).carrier() == ElementSet{0});
  CHECK(levitzki_radical(F).carrier() == ElementSet{0});
  auto M = corpus::matrix_full(2);
  CHECK(upper_nilradical(M).carrier() == ElementSet{0});
  auto U = corpus::matrix_upper(2);
  ElementSet const strict{0, U->encode({0, 1, 0})};
  CHECK(upper_nilradical(U).carrier() == strict);
  CHECK(levitzki_radical(U).carrier() == strict);
}

TEST_CASE("generated ideals", "[ring][radicals]") {
  auto Z4 = corpus::zn(4);
  CHECK(ideal_generated_by(Z4, {2}).carrier() == ElementSet{0, 2});
  CHECK(ideal_generated_by(Z4, {}).carrier() == ElementSet{0});
  auto M = corpus::matrix_full(2);
  CHECK(ideal_generated_by(M, {M->encode({0, 1, 0, 0})}).size() == 16);
  CHECK_THROWS_AS(Ideal::from_carrier(Z4, {0, 1}), error);
}

TEST_CASE("ideal enumeration is capped", "[ring][radicals][errors]") {
  auto big = corpus::product(corpus::zn(8), corpus::product(corpus::zn(8), corpus::zn(8)));
  REQUIRE(big->size() == 512);
  try {
    all_ideals(big);
    FAIL("expected TooLarge");
  } catch (error const& e) {
    CHECK(e.code() == errc::too_large);
  }
}

TEST_CASE("classification ground truths", "[ring][classify]") {
  auto M = corpus::matrix_full(2);
  RingProfile const m = classify_ring(M);
  CHECK_FALSE(m.NI);
  REQUIRE(m.ni_witness);
  // e_12 + e_21 squares to the identity
  elem_t const e12 = M->encode({0, 1, 0, 0}), e21 = M->encode({0, 0, 1, 0});
  CHECK(M->pow(M->add(e12, e21), 2) == M->one());
  CHECK(contains(m.nilpotents, e12));
  CHECK(contains(m.nilpotents, e21));

  RingProfile const u = classify_ring(corpus::matrix_upper(2));
  CHECK(u.NI);
  CHECK(u.NJ);
  CHECK(u.nilpotents == u.jacobson_radical);
  CHECK(u.nilpotents.size() == 2);

  RingProfile const z = classify_ring(corpus::zn(4));
  CHECK_FALSE(z.reduced);
  CHECK(z.NI);
  CHECK(z.NJ);
  CHECK(z.two_primal);
}

TEST_CASE("radical chain and finite collapse on the corpus", "[ring][property]") {
  for (auto const& e : corpus::all()) {
    INFO(e.name);
    RingProfile const p = classify_ring(e.ring);
    CHECK(is_subset(p.prime_radical, p.levitzki_radical));
    CHECK(is_subset(p.levitzki_radical, p.upper_nilradical));
    CHECK(is_subset(p.upper_nilradical, p.nilpotents));
    CHECK(is_subset(p.upper_nilradical, p.jacobson_radical));
    CHECK(p.prime_radical == p.levitzki_radical);
    CHECK(p.levitzki_radical == p.upper_nilradical);
    CHECK(p.upper_nilradical == p.jacobson_radical);
  }
}

TEST_CASE("classification implication chain", "[ring][property]") {
  for (auto const& e : corpus::all()) {
    INFO(e.name);
    RingProfile const p = classify_ring(e.ring);
    if (p.reduced) CHECK(p.symmetric);
    if (p.symmetric) CHECK(p.reversible);
    if (p.reversible) CHECK(p.semicommutative);
    if (p.semicommutative) CHECK(p.two_primal);
    if (p.two_primal) CHECK(p.weakly_two_primal);
    if (p.weakly_two_primal) CHECK(p.NI);
    CHECK(p.NJ == p.NI);
    CHECK(Ideal::is_ideal(*e.ring, p.nilpotents) == p.NI);
    if (p.NI) CHECK(p.dedekind_finite);
    CHECK(p.locally_finite);
  }
}
