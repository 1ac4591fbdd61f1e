#pragma once

// Presentations of skew PBW extensions A = sigma(R)<x_1, ..., x_n> over a
// finite ring and the rewriting that brings products into normal form
//   sum_alpha r_alpha x^alpha   (left coefficients, standard monomials).
//
// Rewriting rules:
//   x_i r     -> sigma_i(r) x_i + delta_i(r)
//   x_j x_i   -> d_ij x_i x_j + t_0 + t_1 x_1 + ... + t_n x_n     (i < j)
// Both rules either keep total degree and move towards normal form, or drop
// total degree, so rewriting terminates.

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewpbw/maps.hpp"

namespace skewpbw {

/// Exponent vector alpha in N^n of a standard monomial x^alpha.
struct Monomial {
  std::vector<unsigned> exps;

  Monomial() = default;
  explicit Monomial(std::size_t n) : exps(n, 0) {}
  explicit Monomial(std::vector<unsigned> e) : exps(std::move(e)) {}

  static Monomial unit(std::size_t n, std::size_t i) {
    Monomial m(n);
    m.exps[i] = 1;
    return m;
  }

  std::size_t vars() const noexcept { return exps.size(); }
  unsigned degree() const noexcept {
    unsigned d = 0;
    for (unsigned e : exps) d += e;
    return d;
  }
  bool is_one() const noexcept { return degree() == 0; }

  Monomial operator+(Monomial const& o) const {
    Monomial m(*this);
    for (std::size_t i = 0; i < exps.size(); ++i) m.exps[i] += o.exps[i];
    return m;
  }

  friend bool operator==(Monomial const&, Monomial const&) = default;
};

/// Degree-lexicographic order: total degree first, then the exponent of x_1,
/// then x_2, and so on (x_1 > x_2 > ... > x_n).
struct DegLex {
  bool operator()(Monomial const& a, Monomial const& b) const noexcept {
    unsigned const da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exps < b.exps;
  }
};

/// Normal form: standard monomial -> nonzero left coefficient.
using Terms = std::map<Monomial, elem_t, DegLex>;

/// Right-hand side of x_j x_i = d_ij x_i x_j + constant + sum_k linear[k] x_k.
struct Tail {
  elem_t constant = 0;
  std::vector<elem_t> linear;  // length n

  bool is_zero() const {
    if (constant != 0) return false;
    for (elem_t t : linear)
      if (t != 0) return false;
    return true;
  }
};

/// Keys are 0-based variable pairs (i, j) with i < j.
using VarPair = std::pair<std::size_t, std::size_t>;
using DTable = std::map<VarPair, elem_t>;
using TailTable = std::map<VarPair, Tail>;

struct ExtensionFlags {
  bool bijective = false;
  bool quasi_commutative = false;
  bool derivation_type = false;
  bool endomorphism_type = false;
};

class Extension;
using ExtensionPtr = std::shared_ptr<Extension const>;

struct VerifyResult {
  bool ok = true;
  /// Which overlap failed: "relation-coefficient", "relation-triple" or
  /// "coefficient-product".
  std::string check;
  std::string description;
  Terms lhs;
  Terms rhs;

  explicit operator bool() const noexcept { return ok; }
};

class Extension {
 public:
  /// Builds an unverified presentation. Missing d entries default to 1 and
  /// missing tails to zero.
  static std::shared_ptr<Extension> make(RingPtr base, SigmaSystem system, DTable d = {},
                                         TailTable tails = {}, std::string name = "") {
    std::size_t const n = system.size();
    if (system.ring() != base)
      throw error(errc::shape_mismatch, "system is defined over a different ring");
    if (n == 0) throw error(errc::shape_mismatch, "at least one variable required");
    for (std::size_t i = 0; i < n; ++i)
      if (!system.sigma(i).injective())
        throw error(errc::non_injective_sigma, "sigma_" + std::to_string(i + 1));
    auto ext = std::shared_ptr<Extension>(new Extension());
    ext->base_ = std::move(base);
    ext->system_ = std::move(system);
    ext->name_ = std::move(name);
    FiniteRing const& R = *ext->base_;
    for (auto const& [key, value] : d) {
      if (key.first >= key.second || key.second >= n)
        throw error(errc::shape_mismatch, "d index out of range");
      if (value >= R.size()) throw error(errc::shape_mismatch, "d value out of range");
    }
    for (auto const& [key, tail] : tails) {
      if (key.first >= key.second || key.second >= n)
        throw error(errc::shape_mismatch, "tail index out of range");
      if (tail.linear.size() != n && !tail.linear.empty())
        throw error(errc::shape_mismatch, "tail needs n linear coefficients");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        auto it = d.find({i, j});
        elem_t const dij = it == d.end() ? R.one() : it->second;
        if (dij == R.zero())
          throw error(errc::zero_d,
                      "d_" + std::to_string(i + 1) + "," + std::to_string(j + 1) + " = 0");
        ext->d_[{i, j}] = dij;
        Tail t;
        if (auto tt = tails.find({i, j}); tt != tails.end()) t = tt->second;
        if (t.linear.empty()) t.linear.assign(n, R.zero());
        ext->tails_[{i, j}] = std::move(t);
      }
    ext->compute_flags();
    return ext;
  }

  RingPtr const& base() const noexcept { return base_; }
  FiniteRing const& ring() const noexcept { return *base_; }
  SigmaSystem const& system() const noexcept { return system_; }
  std::size_t vars() const noexcept { return system_.size(); }
  std::string const& name() const noexcept { return name_; }
  DTable const& d() const noexcept { return d_; }
  TailTable const& tails() const noexcept { return tails_; }
  elem_t d(std::size_t i, std::size_t j) const { return d_.at({i, j}); }
  Tail const& tail(std::size_t i, std::size_t j) const { return tails_.at({i, j}); }
  ExtensionFlags const& flags() const noexcept { return flags_; }
  bool verified() const noexcept { return verified_.load(); }

  // ---- normal-form arithmetic on Terms (no verification check) ----

  void add_term(Terms& p, Monomial const& m, elem_t c) const {
    if (c == 0) return;
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
      it->second = base_->add(it->second, c);
      if (it->second == 0) p.erase(it);
    }
  }

  void add_into(Terms& p, Terms const& q) const {
    for (auto const& [m, c] : q) add_term(p, m, c);
  }

  /// r * p (left multiplication by a base element).
  Terms left_scale(elem_t r, Terms const& p) const {
    Terms out;
    if (r == 0) return out;
    for (auto const& [m, c] : p) add_term(out, m, base_->mul(r, c));
    return out;
  }

  /// Normal form of x_i * x^gamma.
  Terms const& var_times_monomial(std::size_t i, Monomial const& gamma) const {
    {
      std::lock_guard lock(cache_mutex_);
      auto it = mono_cache_.find({i, gamma});
      if (it != mono_cache_.end()) return it->second;
    }
    Terms result = compute_var_times_monomial(i, gamma);
    std::lock_guard lock(cache_mutex_);
    return mono_cache_.try_emplace({i, gamma}, std::move(result)).first->second;
  }

  /// x_i * p for p in normal form.
  Terms var_times(std::size_t i, Terms const& p) const {
    FiniteRing const& R = *base_;
    RingMap const& sigma = system_.sigma(i);
    RingMap const& delta = system_.delta(i);
    Terms out;
    for (auto const& [gamma, c] : p) {
      elem_t const s = sigma(c);
      if (s != 0) {
        for (auto const& [m, e] : var_times_monomial(i, gamma))
          add_term(out, m, R.mul(s, e));
      }
      add_term(out, gamma, delta(c));
    }
    return out;
  }

  /// x^alpha * p, applying x_n^{a_n} first.
  Terms monomial_times(Monomial const& alpha, Terms p) const {
    for (std::size_t i = alpha.vars(); i-- > 0;)
      for (unsigned k = 0; k < alpha.exps[i]; ++k) p = var_times(i, p);
    return p;
  }

  Terms multiply_terms(Terms const& f, Terms const& g) const {
    Terms out;
    if (f.empty() || g.empty()) return out;
    for (auto const& [alpha, a] : f) add_into(out, left_scale(a, monomial_times(alpha, g)));
    return out;
  }

  Terms constant(elem_t r) const {
    Terms t;
    add_term(t, Monomial(vars()), r);
    return t;
  }
  Terms variable(std::size_t i) const {
    Terms t;
    add_term(t, Monomial::unit(vars(), i), base_->one());
    return t;
  }

  /// Normal form of the relation word x_j x_i (i < j) read off the
  /// presentation: d_ij x_i x_j + tail.
  Terms relation_rhs(std::size_t i, std::size_t j) const {
    Terms out;
    Monomial m(vars());
    m.exps[i] += 1;
    m.exps[j] += 1;
    add_term(out, m, d(i, j));
    Tail const& t = tail(i, j);
    add_term(out, Monomial(vars()), t.constant);
    for (std::size_t k = 0; k < vars(); ++k)
      add_term(out, Monomial::unit(vars(), k), t.linear[k]);
    return out;
  }

  void mark_verified() const { verified_.store(true); }

 private:
  struct CacheKeyLess {
    bool operator()(std::pair<std::size_t, Monomial> const& a,
                    std::pair<std::size_t, Monomial> const& b) const noexcept {
      if (a.first != b.first) return a.first < b.first;
      return DegLex{}(a.second, b.second);
    }
  };

  Extension() = default;

  Terms compute_var_times_monomial(std::size_t i, Monomial const& gamma) const {
    std::size_t const n = vars();
    std::size_t first = n;
    for (std::size_t k = 0; k < n; ++k)
      if (gamma.exps[k] > 0) {
        first = k;
        break;
      }
    Terms out;
    if (first >= i) {
      Monomial m = gamma;
      m.exps[i] += 1;
      add_term(out, m, base_->one());
      return out;
    }
    // x_i x_j x^rest with j = first < i:
    //   = d_ji x_j (x_i x^rest) + t_0 x^rest + sum_k t_k (x_k x^rest)
    std::size_t const j = first;
    Monomial rest = gamma;
    rest.exps[j] -= 1;
    Tail const& t = tail(j, i);
    Terms inner = var_times_monomial(i, rest);
    add_into(out, left_scale(d(j, i), var_times(j, inner)));
    add_term(out, rest, t.constant);
    for (std::size_t k = 0; k < n; ++k)
      if (t.linear[k] != 0) add_into(out, left_scale(t.linear[k], var_times_monomial(k, rest)));
    return out;
  }

  void compute_flags() {
    FiniteRing const& R = *base_;
    bool d_units = true;
    bool tails_zero = true;
    for (auto const& [key, v] : d_) d_units = d_units && R.is_unit(v);
    for (auto const& [key, t] : tails_) tails_zero = tails_zero && t.is_zero();
    flags_.bijective = system_.all_sigmas_bijective() && d_units;
    flags_.quasi_commutative = system_.all_deltas_zero() && tails_zero;
    flags_.derivation_type = system_.all_sigmas_identity();
    flags_.endomorphism_type = system_.all_deltas_zero();
  }

  RingPtr base_;
  SigmaSystem system_;
  std::string name_;
  DTable d_;
  TailTable tails_;
  ExtensionFlags flags_;
  mutable std::atomic<bool> verified_{false};
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<std::size_t, Monomial>, Terms, CacheKeyLess> mono_cache_;
};

inline std::shared_ptr<Extension> make_extension(RingPtr base, SigmaSystem system,
                                                 DTable d = {}, TailTable tails = {},
                                                 std::string name = "") {
  return Extension::make(std::move(base), std::move(system), std::move(d), std::move(tails),
                         std::move(name));
}

namespace detail {

inline std::string var_name(std::size_t n, std::size_t i) {
  return n == 1 ? std::string("x") : "x" + std::to_string(i + 1);
}

}  // namespace detail

/// Overlap checks with both sides reduced to normal form along different
/// association orders:
///   (a) (x_j x_i) e = x_j (x_i e)       for i < j and every generator e of R;
///   (b) (x_k x_j) x_i = x_k (x_j x_i)   for i < j < k;
///   (c) x_i (ab) = (x_i a) b            for generator pairs (a, b).
/// Success marks the extension verified; multiplication is refused before.
inline VerifyResult verify_presentation(Extension const& A) {
  FiniteRing const& R = A.ring();
  std::size_t const n = A.vars();
  auto fail = [](std::string check, std::string what, Terms lhs, Terms rhs) {
    VerifyResult r;
    r.ok = false;
    r.check = std::move(check);
    r.description = std::move(what);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t g = 0; g < R.rank(); ++g) {
        Terms const e = A.constant(R.generator(g));
        Terms lhs = A.multiply_terms(A.relation_rhs(i, j), e);
        Terms rhs = A.var_times(j, A.var_times(i, e));
        if (lhs != rhs)
          return fail("relation-coefficient",
                      "(" + detail::var_name(n, j) + detail::var_name(n, i) + ")e_" +
                          std::to_string(g + 1) + " != " + detail::var_name(n, j) + "(" +
                          detail::var_name(n, i) + "e_" + std::to_string(g + 1) + ")",
                      std::move(lhs), std::move(rhs));
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Terms lhs = A.multiply_terms(A.relation_rhs(j, k), A.variable(i));
        Terms rhs = A.var_times(k, A.relation_rhs(i, j));
        if (lhs != rhs)
          return fail("relation-triple",
                      "(" + detail::var_name(n, k) + detail::var_name(n, j) + ")" +
                          detail::var_name(n, i) + " != " + detail::var_name(n, k) + "(" +
                          detail::var_name(n, j) + detail::var_name(n, i) + ")",
                      std::move(lhs), std::move(rhs));
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < R.rank(); ++s)
      for (std::size_t t = 0; t < R.rank(); ++t) {
        elem_t const a = R.generator(s), b = R.generator(t);
        Terms lhs = A.var_times(i, A.constant(R.mul(a, b)));
        Terms rhs = A.multiply_terms(A.var_times(i, A.constant(a)), A.constant(b));
        if (lhs != rhs)
          return fail("coefficient-product",
                      detail::var_name(n, i) + "(e_" + std::to_string(s + 1) + "e_" +
                          std::to_string(t + 1) + ") != (" + detail::var_name(n, i) + "e_" +
                          std::to_string(s + 1) + ")e_" + std::to_string(t + 1),
                      std::move(lhs), std::move(rhs));
      }
  A.mark_verified();
  return {};
}

}  // namespace skewpbw
