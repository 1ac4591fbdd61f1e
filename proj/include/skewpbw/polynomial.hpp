#pragma once

#include <sstream>
#include <string>

#include "skewpbw/extension.hpp"

namespace skewpbw {

/// Element of a skew PBW extension in normal form: finitely many standard
/// monomials with nonzero left coefficients.
class SkewPolynomial {
 public:
  /// Sentinel degree of the zero polynomial.
  static constexpr int neg_infinity = -1;

  explicit SkewPolynomial(ExtensionPtr ext) : ext_(std::move(ext)) {}
  SkewPolynomial(ExtensionPtr ext, Terms terms) : ext_(std::move(ext)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second == 0) it = terms_.erase(it);
      else ++it;
    }
  }

  static SkewPolynomial constant(ExtensionPtr const& ext, elem_t r) {
    return {ext, ext->constant(r)};
  }
  static SkewPolynomial one(ExtensionPtr const& ext) { return constant(ext, ext->ring().one()); }
  static SkewPolynomial variable(ExtensionPtr const& ext, std::size_t i) {
    return {ext, ext->variable(i)};
  }
  static SkewPolynomial monomial(ExtensionPtr const& ext, elem_t r, Monomial alpha) {
    Terms t;
    ext->add_term(t, alpha, r);
    return {ext, std::move(t)};
  }

  ExtensionPtr const& extension() const noexcept { return ext_; }
  Terms const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t support() const noexcept { return terms_.size(); }

  int degree() const {
    if (terms_.empty()) return neg_infinity;
    return static_cast<int>(terms_.rbegin()->first.degree());
  }

  /// Coefficient of the deglex-largest monomial.
  elem_t leading_coefficient() const { return terms_.empty() ? 0 : terms_.rbegin()->second; }
  Monomial const& leading_monomial() const { return terms_.rbegin()->first; }

  elem_t coefficient(Monomial const& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  friend bool operator==(SkewPolynomial const& a, SkewPolynomial const& b) {
    return a.ext_ == b.ext_ && a.terms_ == b.terms_;
  }

  friend SkewPolynomial operator+(SkewPolynomial const& a, SkewPolynomial const& b) {
    check_same(a, b);
    Terms t = a.terms_;
    a.ext_->add_into(t, b.terms_);
    return {a.ext_, std::move(t)};
  }
  friend SkewPolynomial operator-(SkewPolynomial const& a) {
    Terms t;
    for (auto const& [m, c] : a.terms_) t.emplace(m, a.ext_->ring().neg(c));
    return {a.ext_, std::move(t)};
  }
  friend SkewPolynomial operator-(SkewPolynomial const& a, SkewPolynomial const& b) {
    return a + (-b);
  }
  /// Normal form of the product; refuses unverified presentations.
  friend SkewPolynomial operator*(SkewPolynomial const& a, SkewPolynomial const& b) {
    check_same(a, b);
    if (!a.ext_->verified())
      throw error(errc::unverified, "multiplication over an unverified presentation");
    return {a.ext_, a.ext_->multiply_terms(a.terms_, b.terms_)};
  }

  /// r * f
  SkewPolynomial left_scale(elem_t r) const { return {ext_, ext_->left_scale(r, terms_)}; }

 private:
  static void check_same(SkewPolynomial const& a, SkewPolynomial const& b) {
    if (a.ext_ != b.ext_)
      throw error(errc::ring_mismatch, "polynomials over different extensions");
  }

  ExtensionPtr ext_;
  Terms terms_;
};

inline SkewPolynomial multiply(SkewPolynomial const& f, SkewPolynomial const& g) { return f * g; }

inline SkewPolynomial power(SkewPolynomial const& f, std::uint64_t k) {
  SkewPolynomial result = SkewPolynomial::one(f.extension());
  if (!f.extension()->verified())
    throw error(errc::unverified, "power over an unverified presentation");
  SkewPolynomial base = f;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

/// Renders monomials as x1^a1*...*xn^an (x^a when n = 1), coefficients as
/// bracketed coordinate vectors, highest term first.
inline std::string format_monomial(Monomial const& m) {
  std::string out;
  for (std::size_t i = 0; i < m.vars(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += detail::var_name(m.vars(), i) + "^" + std::to_string(m.exps[i]);
  }
  return out;
}

inline std::string format_terms(FiniteRing const& R, Terms const& t) {
  if (t.empty()) return "0";
  std::string out;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += R.format(it->second);
    if (!it->first.is_one()) out += "*" + format_monomial(it->first);
  }
  return out;
}

inline std::string to_string(SkewPolynomial const& f) {
  return format_terms(f.extension()->ring(), f.terms());
}

inline std::ostream& operator<<(std::ostream& os, SkewPolynomial const& f) {
  return os << to_string(f);
}

}  // namespace skewpbw
