#include "catch_amalgamated.hpp"
#include "skewpbw/corpus.hpp"
#include "skewpbw/graded.hpp"

using namespace skewpbw;

namespace {

template <class F>
errc code_of(F&& fn) {
  try {
    fn();
  } catch (error const& e) {
    return e.code();
  }
  return errc::param_range;
}

std::string failing(GradedProfile const& p) {
  for (auto const& c : p.conditions)
    if (!c.ok) return c.name;
  return "";
}

}  // namespace

TEST_CASE("attach_grading examples", "[graded]") {
  auto T = corpus::trunc_poly(2, 3);
  auto const g = attach_grading(T, {0, 1, 2});
  CHECK(g.part(0).size() == 2);
  CHECK(g.part(1).size() == 2);
  CHECK(g.part(3).size() == 1);  // only zero
  for (auto const& e : corpus::all()) CHECK_NOTHROW(Grading::trivial(e.ring));
  auto Q = corpus::square_zero_poly(2, 2);
  auto const c = corpus::clifford_grading(Q);
  CHECK(c.labels() == std::vector<unsigned>{0, 2, 2});
}

TEST_CASE("attach_grading errors", "[graded][errors]") {
  auto T = corpus::trunc_poly(2, 3);
  // y * y = y^2 would need degree 2
  CHECK(code_of([&] { attach_grading(T, {0, 1, 1}); }) == errc::inhomogeneous_constant);
  CHECK(code_of([&] { attach_grading(T, {1, 1, 2}); }) == errc::inhomogeneous_constant);
  CHECK(code_of([&] { attach_grading(T, {0, 1}); }) == errc::shape_mismatch);
}

TEST_CASE("components of ring elements", "[graded]") {
  auto T = corpus::trunc_poly(2, 3);
  auto const g = attach_grading(T, {0, 1, 2});
  elem_t const x = T->encode({1, 0, 1});
  CHECK(g.support(x) == std::vector<unsigned>{0, 2});
  CHECK(g.component(x, 0) == T->one());
  CHECK(g.component(x, 2) == T->encode({0, 0, 1}));
  CHECK(g.component(x, 1) == T->zero());
  CHECK(T->add(g.component(x, 0), g.component(x, 2)) == x);
}

TEST_CASE("is_graded_extension examples", "[graded]") {
  auto const E = corpus::euler_like(2);
  auto const g01 = attach_grading(E->base(), {0, 1});
  auto const pe = is_graded_extension(*E, g01);
  CHECK_FALSE(pe.is_graded_extension);
  CHECK(failing(pe) == "delta_1 raises degree by 1");

  auto const W = corpus::weyl_like(2);
  CHECK_FALSE(is_graded_extension(*W, attach_grading(W->base(), {0, 1})).is_graded_extension);

  auto const& cl = corpus::by_name("clifford_trunc_2");
  auto const pc = is_graded_extension(*cl.extension, *cl.grading);
  CHECK(pc.is_graded_extension);
  CHECK(pc.connected);
  CHECK(failing(pc).empty());

  auto const& mixed = corpus::by_name("clifford_trunc_2_mixed");
  CHECK(is_graded_extension(*mixed.extension, *mixed.grading).is_graded_extension);

  // the nonzero constant tail sits in R_2, so the trivial grading fails it
  auto const pt = is_graded_extension(*mixed.extension, Grading::trivial(mixed.ring));
  CHECK_FALSE(pt.is_graded_extension);
  CHECK(failing(pt) == "tails in R_2 + R_1 x");
}

TEST_CASE("is_graded_extension errors", "[graded][errors]") {
  auto Z4 = corpus::zn(4);
  auto id = identity_map(Z4);
  auto A = corpus::quasi_comm(Z4, {id, id}, {{{0, 1}, 2}}, "qc_z4_d2");
  CHECK_FALSE(A->flags().bijective);
  CHECK(code_of([&] { is_graded_extension(*A, Grading::trivial(Z4)); }) == errc::not_bijective);
  auto const& cl = corpus::by_name("clifford_trunc_2");
  CHECK(code_of([&] { is_graded_extension(*A, *cl.grading); }) == errc::ring_mismatch);
}

TEST_CASE("trivial grading on the quasi-commutative corpus", "[graded][property]") {
  std::size_t seen = 0;
  for (auto const& e : corpus::all()) {
    if (!e.extension || !e.extension->flags().quasi_commutative ||
        !e.extension->flags().bijective)
      continue;
    INFO(e.name);
    ++seen;
    CHECK(is_graded_extension(*e.extension, Grading::trivial(e.ring)).is_graded_extension);
  }
  CHECK(seen >= 5);
}

TEST_CASE("is_connected examples", "[graded]") {
  CHECK(is_connected(attach_grading(corpus::trunc_poly(2, 2), {0, 1})));
  CHECK_FALSE(is_connected(Grading::trivial(corpus::zn(4))));
  CHECK(is_connected(Grading::trivial(corpus::zn(3))));
  // R_0 = GF(4) is a field but not spanned by 1
  CHECK_FALSE(is_connected(Grading::trivial(corpus::gf4())));
  auto Q = corpus::square_zero_poly(2, 2);
  CHECK(is_connected(corpus::clifford_grading(Q)));
}

TEST_CASE("homogeneous components examples", "[graded]") {
  auto R = corpus::trunc_poly(2, 2);
  auto const A = corpus::ore_identity(R, 1, "Z2[y]/(y^2)[x]");
  auto const g = attach_grading(R, {0, 1});
  REQUIRE(is_graded_extension(*A, g).is_graded_extension);
  elem_t const y = R->encode({0, 1});
  auto const f = SkewPolynomial::constant(A, y) + SkewPolynomial::variable(A, 0);
  auto const parts = homogeneous_components(f, g);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].first == 1);
  CHECK(parts[0].second == f);
  CHECK(homogeneous_degree(f, g) == 1u);

  auto const one = homogeneous_components(SkewPolynomial::one(A), g);
  REQUIRE(one.size() == 1);
  CHECK(one[0].first == 0);

  auto const mixed = SkewPolynomial::one(A) + SkewPolynomial::variable(A, 0);
  CHECK_FALSE(homogeneous_degree(mixed, g).has_value());
  CHECK(homogeneous_components(mixed, g).size() == 2);

  auto const& cl = corpus::by_name("clifford_trunc_2");
  auto const C = cl.extension;
  auto const yx = SkewPolynomial::constant(C, C->ring().encode({0, 1, 0})) *
                  SkewPolynomial::variable(C, 0);
  auto const cp = homogeneous_components(yx, *cl.grading);
  REQUIRE(cp.size() == 1);
  CHECK(cp[0].first == 3);
}

TEST_CASE("homogeneous components errors", "[graded][errors]") {
  auto const E = corpus::euler_like(2);
  auto const g = attach_grading(E->base(), {0, 1});
  CHECK(code_of([&] { homogeneous_components(SkewPolynomial::variable(E, 0), g); }) ==
        errc::not_graded);
}

TEST_CASE("homogeneous multiplicativity", "[graded][property]") {
  for (auto const& e : corpus::all()) {
    if (!e.extension || !e.grading || !e.extension->flags().bijective) continue;
    if (!is_graded_extension(*e.extension, *e.grading).is_graded_extension) continue;
    INFO(e.name);
    auto const E = enumerate_window(e.extension, 2, 2, 1'000'000);
    std::vector<std::pair<unsigned, SkewPolynomial const*>> homog;
    for (auto const& f : E)
      if (!f.is_zero())
        if (auto d = homogeneous_degree(f, *e.grading)) homog.emplace_back(*d, &f);
    REQUIRE_FALSE(homog.empty());
    std::size_t failures = 0;
    for (auto const& [p, f] : homog)
      for (auto const& [q, h] : homog) {
        auto const fh = *f * *h;
        if (fh.is_zero()) continue;
        auto const d = homogeneous_degree(fh, *e.grading);
        if (!d || *d != p + q) ++failures;
      }
    CHECK(failures == 0);
  }
}

TEST_CASE("homogeneous decomposition sums back and is idempotent", "[graded][property]") {
  for (auto const& e : corpus::all()) {
    if (!e.extension || !e.grading) continue;
    if (!is_graded_extension(*e.extension, *e.grading).is_graded_extension) continue;
    INFO(e.name);
    for (auto const& f : enumerate_window(e.extension, 2, 2, 1'000'000)) {
      auto const parts = homogeneous_components(f, *e.grading);
      SkewPolynomial sum(e.extension);
      unsigned last = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        auto const& [p, part] = parts[i];
        if (i > 0) CHECK(p > last);
        last = p;
        sum = sum + part;
        auto const again = homogeneous_components(part, *e.grading);
        REQUIRE(again.size() == 1);
        CHECK(again[0].first == p);
        CHECK(again[0].second == part);
      }
      CHECK(sum == f);
    }
  }
}
