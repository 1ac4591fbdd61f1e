// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "skewpbw.hpp"

using namespace skewpbw;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, std::string const& what) {
  if (!ok) throw Failure{what};
}

std::set<elem_t> as_set(ElementSet const& s) { return {s.begin(), s.end()}; }

bool subset(ElementSet const& a, ElementSet const& b) {
  auto const B = as_set(b);
  return std::all_of(a.begin(), a.end(), [&](elem_t x) { return B.count(x) > 0; });
}

// Distinct base rings of the corpus.
std::vector<RingPtr> corpus_rings() {
  std::vector<RingPtr> out;
  std::set<FiniteRing const*> seen;
  for (auto const& e : corpus::all())
    if (seen.insert(e.ring.get()).second) out.push_back(e.ring);
  return out;
}

// Jacobson radical by brute force: a with 1 - ra a unit for every r.
std::set<elem_t> naive_jacobson(FiniteRing const& R) {
  std::vector<char> unit(R.size(), 0);
  for (elem_t u = 0; u < R.size(); ++u)
    for (elem_t v = 0; v < R.size() && !unit[u]; ++v)
      unit[u] = R.mul(u, v) == R.one() && R.mul(v, u) == R.one();
  std::set<elem_t> out;
  for (elem_t a = 0; a < R.size(); ++a) {
    bool ok = true;
    for (elem_t r = 0; r < R.size() && ok; ++r) ok = unit[R.sub(R.one(), R.mul(r, a))];
    if (ok) out.insert(a);
  }
  return out;
}

std::set<elem_t> naive_nilpotents(FiniteRing const& R) {
  std::set<elem_t> out;
  for (elem_t a = 0; a < R.size(); ++a) {
    elem_t p = a;
    for (std::size_t k = 0; k <= R.size() && p != R.zero(); ++k) p = R.mul(p, a);
    if (p == R.zero()) out.insert(a);
  }
  return out;
}

SkewPolynomial random_poly(ExtensionPtr const& A, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> nterms(0, 3);
  std::uniform_int_distribution<elem_t> coef(0, static_cast<elem_t>(A->ring().size() - 1));
  std::uniform_int_distribution<unsigned> deg(0, 3);
  std::uniform_int_distribution<std::size_t> var(0, A->vars() - 1);
  SkewPolynomial f(A);
  for (std::size_t t = nterms(rng); t > 0; --t) {
    Monomial m(A->vars());
    for (unsigned d = deg(rng); d > 0; --d) ++m.exps[var(rng)];
    f = f + SkewPolynomial::monomial(A, coef(rng), m);
  }
  return f;
}

SkewPolynomial C(ExtensionPtr const& A, std::vector<int> c) {
  return SkewPolynomial::constant(A, A->ring().encode(c));
}
SkewPolynomial X(ExtensionPtr const& A) { return SkewPolynomial::variable(A, 0); }

// ---- criteria ----

void radical_collapse() {
  for (auto const& R : corpus_rings()) {
    if (R->size() > 64) continue;
    std::string const n = R->name();
    auto const prime = as_set(prime_radical(R).carrier());
    auto const lev = as_set(levitzki_radical(R).carrier());
    auto const upper = as_set(upper_nilradical(R).carrier());
    auto const jac = as_set(jacobson_radical(R).carrier());
    require(prime == lev && lev == upper && upper == jac, n + ": radicals differ");
    require(jac == naive_jacobson(*R), n + ": J differs from the 1 - ra search");
  }
}

void radical_chain() {
  for (auto const& R : corpus_rings()) {
    if (R->size() > 64) continue;
    std::string const n = R->name();
    auto const N = nilpotent_set(*R);
    require(as_set(N) == naive_nilpotents(*R), n + ": N(R)");
    auto const prime = prime_radical(R).carrier();
    auto const lev = levitzki_radical(R).carrier();
    auto const upper = upper_nilradical(R).carrier();
    auto const jac = jacobson_radical(R).carrier();
    require(subset(prime, lev) && subset(lev, upper) && subset(upper, N), n + ": chain");
    require(subset(upper, jac), n + ": N* not in J");
  }
}

void classification() {
  auto const M = corpus::matrix_full(2);
  // coordinates on e11, e12, e21, e22; oracle: 2x2 matrices over Z_2
  auto mat = [&](elem_t x) {
    coords_t const c = M->decode(x);
    return std::array<int, 4>{c[0], c[1], c[2], c[3]};
  };
  auto mmul = [](std::array<int, 4> a, std::array<int, 4> b) {
    return std::array<int, 4>{(a[0] * b[0] + a[1] * b[2]) % 2, (a[0] * b[1] + a[1] * b[3]) % 2,
                              (a[2] * b[0] + a[3] * b[2]) % 2, (a[2] * b[1] + a[3] * b[3]) % 2};
  };
  for (elem_t a = 0; a < M->size(); ++a)
    for (elem_t b = 0; b < M->size(); ++b)
      require(mat(M->mul(a, b)) == mmul(mat(a), mat(b)), "M2(Z2) multiplication");
  elem_t const e12 = M->encode({0, 1, 0, 0}), e21 = M->encode({0, 0, 1, 0});
  auto const s = mat(M->add(e12, e21));
  require(mmul(mat(e12), mat(e12)) == std::array<int, 4>{} &&
              mmul(mat(e21), mat(e21)) == std::array<int, 4>{},
          "e12, e21 nilpotent");
  require(mmul(s, s) == std::array<int, 4>{1, 0, 0, 1}, "(e12 + e21)^2 = 1");
  auto const pm = classify_ring(M);
  require(!pm.NI && !pm.NJ, "M2(Z2) is not NI");

  auto const U = corpus::matrix_upper(2);
  auto const pu = classify_ring(U);
  std::set<elem_t> const e12u{U->zero(), U->encode({0, 1, 0})};
  require(pu.NI && pu.NJ, "U2(Z2) NI and NJ");
  require(naive_nilpotents(*U) == e12u && naive_jacobson(*U) == e12u, "U2(Z2) N = J = {0, e12}");
  require(as_set(pu.nilpotents) == e12u && as_set(pu.jacobson_radical) == e12u,
          "U2(Z2) profile sets");

  auto const Z4 = corpus::zn(4);
  auto const pz = classify_ring(Z4);
  require(pz.NI && pz.NJ && pz.two_primal, "Z4 NI/NJ/2-primal");
  require(as_set(pz.nilpotents) == std::set<elem_t>{0, Z4->encode({2})}, "N(Z4) = {0, 2}");
}

void engine_soundness() {
  std::mt19937 rng(424242);
  for (auto const& e : corpus::all()) {
    if (!e.extension) continue;
    auto const& A = e.extension;
    for (int i = 0; i < 1000; ++i) {
      auto const f = random_poly(A, rng), g = random_poly(A, rng), h = random_poly(A, rng);
      require((f * g) * h == f * (g * h), e.name + ": associativity");
      require(f * (g + h) == f * g + f * h, e.name + ": left distributivity");
      require((f + g) * h == f * h + g * h, e.name + ": right distributivity");
    }
  }
  // commutative oracle on Z_4[x, y]
  auto const A = corpus::by_name("commutative_z4_xy").extension;
  for (int i = 0; i < 1000; ++i) {
    auto const f = random_poly(A, rng), g = random_poly(A, rng);
    std::map<std::pair<unsigned, unsigned>, int> dense;
    for (auto const& [ma, ca] : f.terms())
      for (auto const& [mb, cb] : g.terms()) {
        auto& s = dense[{ma.exps[0] + mb.exps[0], ma.exps[1] + mb.exps[1]}];
        s = (s + A->ring().decode(ca)[0] * A->ring().decode(cb)[0]) % 4;
      }
    std::erase_if(dense, [](auto const& kv) { return kv.second == 0; });
    std::map<std::pair<unsigned, unsigned>, int> got;
    auto const fg = f * g;
    for (auto const& [m, c] : fg.terms())
      got[{m.exps[0], m.exps[1]}] = A->ring().decode(c)[0];
    require(got == dense, "commutative oracle");
  }
}

void presentation_gate() {
  for (auto const& e : corpus::all())
    if (e.extension) require(verify_presentation(*e.extension).ok, e.name + " fails overlaps");
  auto bad = corpus::corrupted_weyl_fixture();
  require(!verify_presentation(*bad).ok, "corrupted fixture verified");
  bool threw = false;
  try {
    corpus::finish(corpus::corrupted_weyl_fixture());
  } catch (error const& err) {
    threw = err.code() == errc::overlap_fails;
  }
  require(threw, "corrupted fixture did not raise OverlapFails");
}

void weak_compat_transfer() {
  auto const A = corpus::euler_like(2);
  require(is_weak_sigma_compatible(A->system()).holds &&
              is_weak_delta_compatible(A->system()).holds,
          "base not weak (Sigma,Delta)-compatible");
  require(classify_ring(A->base()).NI, "base not NI");
  SearchBudget const b = corpus::window(2, 3, 8);
  NilpotencyProber const prober(A, b.exponent_cap);
  auto const w = probe_window(prober, b);
  require(w.elements.size() == window_size(A->ring().size(), 1, 2, 3), "window not exhaustive");
  require(bounded_NI_check(prober, w, b.pair_budget).verdict == NIVerdict::consistent,
          "NI check not consistent");
  auto const agree = coefficient_agreement(prober, w);
  require(agree.exact(), "coefficient criterion and probe disagree");
}

void derivation_negative() {
  auto const& e = corpus::by_name("weyl_like_2");
  auto const A = e.extension;
  NilpotencyProber const prober(A, e.budget.exponent_cap);
  auto const y = C(A, {0, 1});
  auto const xy = X(A) * y;
  require(xy == y * X(A) + SkewPolynomial::one(A), "x y = y x + 1");
  require(xy * xy == xy, "x y idempotent");
  require(prober.probe(y).nilpotent() && prober.probe(xy).not_nilpotent(), "probe on x y");
  require(!invariance(nilpotent_set(A->ring()), A->system(), InvarianceMode::delta_invariant).holds,
          "N(R) Delta-invariant");
  auto const r = bounded_NI_check(A, e.budget);
  require(r.verdict == NIVerdict::violation, "NI check not a violation");
  auto const* left = r.witness(NIWitnessKind::left_product);
  require(left != nullptr, "no left-product witness");
  for (auto const& w : r.witnesses) require(replay(w, prober), "witness does not replay");
  auto const rep = run_check({TheoremId::T3, instance_of(e), e.budget, false});
  require(rep.verdict == Verdict::consistent, "T3 not Consistent");
}

void hypothesis_necessary() {
  auto const& e = corpus::by_name("swap");
  auto const A = e.extension;
  require(classify_ring(A->base()).reduced, "base not reduced");
  require(!is_weak_sigma_compatible(A->system()).holds, "swap weak Sigma-compatible");
  NilpotencyProber const prober(A, e.budget.exponent_cap);
  auto const f = C(A, {1, 0}) * X(A), g = C(A, {0, 1}) * X(A);
  require(prober.probe(f).nilpotent() && prober.probe(g).nilpotent(), "f, g not nilpotent");
  require(f + g == X(A) && prober.probe(X(A)).not_nilpotent(), "f + g = x not refuted");
  auto const r = bounded_NI_check(A, e.budget);
  require(r.verdict == NIVerdict::violation, "NI check not a violation");
  for (auto const& w : r.witnesses) require(replay(w, prober), "witness does not replay");
}

void ni_nj_bounded() {
  auto const& e = corpus::by_name("euler_like_2");
  auto const A = e.extension;
  SearchBudget const b = corpus::window(2, 3, 8);
  NilpotencyProber const prober(A, b.exponent_cap);
  auto const w = probe_window(prober, b);
  auto const one = SkewPolynomial::one(A);
  std::size_t proved = 0;
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    if (!w.probes[i].nilpotent()) continue;
    ++proved;
    auto const& f = w.elements[i];
    auto const q = quasi_regularity_witness(f, w.probes[i]);
    require(q.verified && (one + f) * q.inverse == one, "no quasi-inverse for " + to_string(f));
  }
  require(proved > 0, "no proved nilpotents");
  auto const rep = run_check({TheoremId::T8, instance_of(e), b, false});
  require(rep.verdict == Verdict::consistent, "T8 not Consistent");
}

void graded_checks() {
  auto const& cl = corpus::by_name("clifford_trunc_2");
  auto const p = is_graded_extension(*cl.extension, *cl.grading);
  require(p.is_graded_extension && is_connected(*cl.grading), "clifford_trunc(2) graded/connected");
  auto const E = enumerate_window(cl.extension, 2, 2, 1'000'000);
  for (auto const& f : E)
    for (auto const& g : E) {
      auto const df = homogeneous_degree(f, *cl.grading), dg = homogeneous_degree(g, *cl.grading);
      if (f.is_zero() || g.is_zero() || !df || !dg) continue;
      auto const fg = f * g;
      if (fg.is_zero()) continue;
      auto const d = homogeneous_degree(fg, *cl.grading);
      require(d && *d == *df + *dg, "homogeneous product " + to_string(f) + " * " + to_string(g));
    }
  for (auto const& e : corpus::all()) {
    if (!e.extension || !e.extension->flags().quasi_commutative) continue;
    require(is_graded_extension(*e.extension, Grading::trivial(e.ring)).is_graded_extension,
            e.name + " not graded under the trivial grading");
  }
}

void harness_invariant() {
  std::set<std::string> const spot{"swap", "euler_like_2", "qc_z3_d2", "u2z2_poly"};
  for (auto const& e : corpus::all()) {
    if (!e.extension) continue;
    auto const reports = run_checks(instance_of(e), all_theorems(), e.budget);
    for (auto const& r : reports) {
      std::string const tag = e.name + " " + to_string(r.id);
      require(r.verdict != Verdict::violated, tag + " Violated: " + r.witness);
      if (r.verdict == Verdict::precondition_failed)
        require(!r.witness.empty(), tag + " PreconditionFailed without witness");
    }
    if (!spot.count(e.name)) continue;
    auto const bigger = run_checks(instance_of(e), all_theorems(), e.budget.doubled());
    for (std::size_t i = 0; i < reports.size(); ++i)
      require(!(reports[i].verdict == Verdict::consistent &&
                bigger[i].verdict == Verdict::violated),
              e.name + " " + to_string(reports[i].id) + " flips under doubled budget");
  }
}

}  // namespace

int main() {
  std::vector<std::pair<char const*, std::function<void()>>> const criteria = {
      {"radical collapse oracle", radical_collapse},
      {"radical chain", radical_chain},
      {"classification ground truths", classification},
      {"engine soundness", engine_soundness},
      {"presentation gate", presentation_gate},
      {"weak-compatible NI transfer (euler_like(2))", weak_compat_transfer},
      {"derivation type, negative face (weyl_like(2))", derivation_negative},
      {"hypothesis necessity (swap)", hypothesis_necessary},
      {"NI iff NJ, bounded face (euler_like(2))", ni_nj_bounded},
      {"graded checks", graded_checks},
      {"harness global invariant", harness_invariant},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto const start = std::chrono::steady_clock::now();
    std::string why;
    try {
      criteria[k].second();
    } catch (Failure const& f) {
      why = f.what;
    } catch (std::exception const& ex) {
      why = std::string("exception: ") + ex.what();
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s (%.2fs)%s%s\n", why.empty() ? "PASS" : "FAIL", k + 1, criteria[k].first,
                secs, why.empty() ? "" : ": ", why.c_str());
    if (!why.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
