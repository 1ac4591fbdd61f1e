#pragma once

// Endomorphisms and sigma-derivations of a finite ring, stored as integer
// matrices over the additive presentation: column t is the image of e_t.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "skewpbw/ring.hpp"

namespace skewpbw {

enum class MapKind { endomorphism, sigma_derivation };

class RingMap;
using MapPtr = std::shared_ptr<RingMap const>;

class RingMap {
 public:
  using matrix_t = std::vector<std::vector<int>>;

  RingPtr const& ring() const noexcept { return ring_; }
  MapKind kind() const noexcept { return kind_; }
  matrix_t const& matrix() const noexcept { return matrix_; }
  /// Partner endomorphism of a sigma-derivation; null for endomorphisms.
  MapPtr const& partner() const noexcept { return partner_; }
  bool injective() const noexcept { return injective_; }
  bool surjective() const noexcept { return image_size_ == ring_->size(); }
  std::size_t image_size() const noexcept { return image_size_; }

  elem_t operator()(elem_t x) const { return table_[x]; }
  std::vector<elem_t> const& table() const noexcept { return table_; }

  bool is_identity() const {
    for (elem_t x = 0; x < table_.size(); ++x)
      if (table_[x] != x) return false;
    return true;
  }
  bool is_zero() const {
    for (elem_t v : table_)
      if (v != 0) return false;
    return true;
  }

  /// Applies a matrix to coordinates; well-definedness is checked by the
  /// factories.
  static coords_t apply(FiniteRing const& R, matrix_t const& M, coords_t const& v) {
    std::size_t const m = R.rank();
    coords_t out(m, 0);
    for (std::size_t s = 0; s < m; ++s) {
      long acc = 0;
      for (std::size_t t = 0; t < m; ++t) acc += static_cast<long>(M[s][t]) * v[t];
      int const k = R.orders()[s];
      out[s] = static_cast<int>(((acc % k) + k) % k);
    }
    return out;
  }

  static matrix_t identity_matrix(std::size_t m) {
    matrix_t I(m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i) I[i][i] = 1;
    return I;
  }
  static matrix_t zero_matrix(std::size_t m) {
    return matrix_t(m, std::vector<int>(m, 0));
  }

  static std::shared_ptr<RingMap> make_raw(RingPtr ring, matrix_t matrix, MapKind kind,
                                           MapPtr partner) {
    FiniteRing const& R = *ring;
    std::size_t const m = R.rank();
    if (matrix.size() != m)
      throw error(errc::not_additive_well_defined, "matrix must be m x m");
    for (auto const& row : matrix)
      if (row.size() != m)
        throw error(errc::not_additive_well_defined, "matrix must be m x m");
    // k_t e_t = 0 must map to 0: k_t * M[s][t] = 0 mod k_s.
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < m; ++t) {
        long const v = static_cast<long>(R.orders()[t]) * matrix[s][t];
        if (v % R.orders()[s] != 0)
          throw error(errc::not_additive_well_defined,
                      "entry (" + std::to_string(s + 1) + "," + std::to_string(t + 1) +
                          ") not annihilated by the order of e_" + std::to_string(t + 1));
      }
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < m; ++t) {
        int const k = R.orders()[s];
        matrix[s][t] = ((matrix[s][t] % k) + k) % k;
      }
    auto map = std::shared_ptr<RingMap>(new RingMap());
    map->ring_ = std::move(ring);
    map->matrix_ = std::move(matrix);
    map->kind_ = kind;
    map->partner_ = std::move(partner);
    map->table_.resize(R.size());
    std::vector<char> hit(R.size(), 0);
    for (elem_t x = 0; x < R.size(); ++x) {
      elem_t const y = R.encode(apply(R, map->matrix_, R.decode(x)));
      map->table_[x] = y;
      if (!hit[y]) {
        hit[y] = 1;
        ++map->image_size_;
      }
    }
    map->injective_ = map->image_size_ == R.size();
    return map;
  }

 private:
  RingMap() = default;

  RingPtr ring_;
  matrix_t matrix_;
  MapKind kind_ = MapKind::endomorphism;
  MapPtr partner_;
  std::vector<elem_t> table_;
  std::size_t image_size_ = 0;
  bool injective_ = false;
};

/// Verified endomorphism: multiplicative on generator pairs and fixes 1.
/// Non-injective maps are accepted; see RingMap::injective().
inline MapPtr make_endomorphism(RingPtr const& ring, RingMap::matrix_t matrix) {
  auto map = RingMap::make_raw(ring, std::move(matrix), MapKind::endomorphism, nullptr);
  FiniteRing const& R = *ring;
  for (std::size_t i = 0; i < R.rank(); ++i)
    for (std::size_t j = 0; j < R.rank(); ++j) {
      elem_t const a = R.generator(i), b = R.generator(j);
      if ((*map)(R.mul(a, b)) != R.mul((*map)(a), (*map)(b)))
        throw error(errc::not_multiplicative,
                    "sigma(e_" + std::to_string(i + 1) + "*e_" + std::to_string(j + 1) +
                        ") != sigma(e_" + std::to_string(i + 1) + ")*sigma(e_" +
                        std::to_string(j + 1) + ")");
    }
  if ((*map)(R.one()) != R.one())
    throw error(errc::does_not_fix_one, "sigma(1) = " + R.format((*map)(R.one())));
  return map;
}

/// Verified sigma-derivation: delta(ab) = sigma(a) delta(b) + delta(a) b on
/// generator pairs, and delta(1) = 0.
inline MapPtr make_sigma_derivation(RingPtr const& ring, MapPtr const& sigma,
                                    RingMap::matrix_t matrix) {
  if (!sigma || sigma->kind() != MapKind::endomorphism || sigma->ring() != ring)
    throw error(errc::shape_mismatch, "partner must be an endomorphism of the same ring");
  auto map = RingMap::make_raw(ring, std::move(matrix), MapKind::sigma_derivation, sigma);
  FiniteRing const& R = *ring;
  RingMap const& d = *map;
  RingMap const& s = *sigma;
  for (std::size_t i = 0; i < R.rank(); ++i)
    for (std::size_t j = 0; j < R.rank(); ++j) {
      elem_t const a = R.generator(i), b = R.generator(j);
      elem_t const lhs = d(R.mul(a, b));
      elem_t const rhs = R.add(R.mul(s(a), d(b)), R.mul(d(a), b));
      if (lhs != rhs)
        throw error(errc::leibniz_fails,
                    "generators (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        "): " + R.format(lhs) + " != " + R.format(rhs));
    }
  if (d(R.one()) != R.zero())
    throw error(errc::delta_one_nonzero, "delta(1) = " + R.format(d(R.one())));
  return map;
}

inline MapPtr identity_map(RingPtr const& ring) {
  return make_endomorphism(ring, RingMap::identity_matrix(ring->rank()));
}

inline MapPtr zero_derivation(RingPtr const& ring, MapPtr const& sigma) {
  return make_sigma_derivation(ring, sigma, RingMap::zero_matrix(ring->rank()));
}

/// A self-map of R given by its value table; composites of RingMaps.
using MapTable = std::vector<elem_t>;

inline MapTable compose(MapTable const& outer, MapTable const& inner) {
  MapTable out(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) out[x] = outer[inner[x]];
  return out;
}

inline MapTable identity_table(std::size_t size) {
  MapTable t(size);
  for (std::size_t x = 0; x < size; ++x) t[x] = static_cast<elem_t>(x);
  return t;
}

/// Default word-length cap W for quantifying over composite delta maps.
inline constexpr std::size_t default_delta_word_cap = 4;

/// The maps (sigma_i, delta_i) attached to the variables of an extension,
/// with the monoid generated by the sigmas and the composite delta maps
/// delta^beta = delta_1^{b_1} o ... o delta_n^{b_n}, 1 <= |beta| <= W.
class SigmaSystem {
 public:
  SigmaSystem() = default;

  SigmaSystem(RingPtr ring, std::vector<MapPtr> sigmas, std::vector<MapPtr> deltas,
              std::size_t delta_word_cap = default_delta_word_cap)
      : ring_(std::move(ring)),
        sigmas_(std::move(sigmas)),
        deltas_(std::move(deltas)),
        delta_word_cap_(delta_word_cap) {
    if (sigmas_.size() != deltas_.size())
      throw error(errc::shape_mismatch, "need one delta per sigma");
    for (std::size_t i = 0; i < sigmas_.size(); ++i) {
      if (!sigmas_[i] || sigmas_[i]->kind() != MapKind::endomorphism ||
          sigmas_[i]->ring() != ring_)
        throw error(errc::shape_mismatch,
                    "sigma_" + std::to_string(i + 1) + " is not an endomorphism of R");
      if (!deltas_[i] || deltas_[i]->kind() != MapKind::sigma_derivation ||
          deltas_[i]->ring() != ring_)
        throw error(errc::shape_mismatch,
                    "delta_" + std::to_string(i + 1) + " is not a sigma-derivation of R");
      if (deltas_[i]->partner()->table() != sigmas_[i]->table())
        throw error(errc::shape_mismatch,
                    "delta_" + std::to_string(i + 1) + " is not a sigma_" +
                        std::to_string(i + 1) + "-derivation");
    }
    closure_ = close(generator_tables());
    build_delta_words();
  }

  /// Identity sigmas and zero deltas on n variables.
  static SigmaSystem trivial(RingPtr const& ring, std::size_t n) {
    auto id = identity_map(ring);
    auto zero = zero_derivation(ring, id);
    return SigmaSystem(ring, std::vector<MapPtr>(n, id), std::vector<MapPtr>(n, zero));
  }

  RingPtr const& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return sigmas_.size(); }
  std::vector<MapPtr> const& sigmas() const noexcept { return sigmas_; }
  std::vector<MapPtr> const& deltas() const noexcept { return deltas_; }
  RingMap const& sigma(std::size_t i) const { return *sigmas_[i]; }
  RingMap const& delta(std::size_t i) const { return *deltas_[i]; }

  /// The finite monoid generated by the sigmas, identity first.
  std::vector<MapTable> const& closure() const noexcept { return closure_; }
  std::vector<MapTable> const& delta_words() const noexcept { return delta_words_; }
  std::size_t delta_word_cap() const noexcept { return delta_word_cap_; }

  bool all_deltas_zero() const {
    for (auto const& d : deltas_)
      if (!d->is_zero()) return false;
    return true;
  }
  bool all_sigmas_identity() const {
    for (auto const& s : sigmas_)
      if (!s->is_identity()) return false;
    return true;
  }
  bool all_sigmas_bijective() const {
    for (auto const& s : sigmas_)
      if (!s->injective()) return false;
    return true;
  }

  /// sigma^alpha = sigma_1^{a_1} o ... o sigma_n^{a_n}.
  MapTable sigma_power(std::vector<unsigned> const& alpha) const {
    MapTable t = identity_table(ring_->size());
    for (std::size_t i = alpha.size(); i-- > 0;)
      for (unsigned k = 0; k < alpha[i]; ++k) t = compose(sigmas_[i]->table(), t);
    return t;
  }

  /// Closes a set of self-maps under composition (with identity).
  static std::vector<MapTable> close(std::vector<MapTable> const& gens) {
    if (gens.empty()) return {};
    std::size_t const size = gens.front().size();
    std::set<MapTable> seen;
    std::vector<MapTable> out;
    MapTable const id = identity_table(size);
    seen.insert(id);
    out.push_back(id);
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (auto const& g : gens) {
        MapTable next = compose(g, out[i]);
        if (seen.insert(next).second) out.push_back(std::move(next));
      }
    }
    return out;
  }

 private:
  std::vector<MapTable> generator_tables() const {
    std::vector<MapTable> g;
    for (auto const& s : sigmas_) g.push_back(s->table());
    if (g.empty()) g.push_back(identity_table(ring_->size()));
    return g;
  }

  void build_delta_words() {
    delta_words_.clear();
    if (all_deltas_zero()) return;
    std::set<MapTable> seen;
    std::size_t const n = deltas_.size();
    std::vector<unsigned> beta(n, 0);
    // all beta with 1 <= |beta| <= W
    auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
      if (i == n) {
        std::size_t total = 0;
        for (auto b : beta) total += b;
        if (total == 0) return;
        MapTable t = identity_table(ring_->size());
        for (std::size_t j = n; j-- > 0;)
          for (unsigned k = 0; k < beta[j]; ++k) t = compose(deltas_[j]->table(), t);
        if (seen.insert(t).second) delta_words_.push_back(std::move(t));
        return;
      }
      for (std::size_t b = 0; b <= left; ++b) {
        beta[i] = static_cast<unsigned>(b);
        self(self, i + 1, left - b);
      }
      beta[i] = 0;
    };
    rec(rec, 0, delta_word_cap_);
  }

  RingPtr ring_;
  std::vector<MapPtr> sigmas_;
  std::vector<MapPtr> deltas_;
  std::size_t delta_word_cap_ = default_delta_word_cap;
  std::vector<MapTable> closure_;
  std::vector<MapTable> delta_words_;
};

inline std::vector<MapTable> sigma_closure(SigmaSystem const& system) {
  return system.closure();
}

}  // namespace skewpbw
