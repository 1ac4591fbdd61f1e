#pragma once

// Finite rings presented by an additive cyclic decomposition
// Z/k_1 x ... x Z/k_m together with bilinear structure constants e_i * e_j.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "skewpbw/error.hpp"

namespace skewpbw {

/// Index of an element in the mixed-radix enumeration of a FiniteRing.
using elem_t = std::uint32_t;
using coords_t = std::vector<int>;
/// Sorted, duplicate-free list of elements.
using ElementSet = std::vector<elem_t>;

inline bool contains(ElementSet const& set, elem_t x) {
  return std::binary_search(set.begin(), set.end(), x);
}

inline bool is_subset(ElementSet const& a, ElementSet const& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::string format_coords(coords_t const& c) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out << ',';
    out << c[i];
  }
  out << ']';
  return out.str();
}

class FiniteRing;
using RingPtr = std::shared_ptr<FiniteRing const>;

class FiniteRing {
 public:
  /// Rings up to this size get dense addition/multiplication tables.
  static constexpr std::size_t table_limit = 1024;
  static constexpr std::size_t size_limit = std::size_t{1} << 24;

  using constants_t = std::vector<std::vector<coords_t>>;

  /// Validates shape, well-definedness modulo the additive orders,
  /// associativity on all generator triples and the identity law on all
  /// generators. Inputs are reduced into [0, k_t).
  static RingPtr make(std::vector<int> orders, constants_t constants,
                      coords_t one, std::string name = "") {
    std::size_t const m = orders.size();
    if (m == 0) throw error(errc::bad_shape, "no additive generators");
    std::size_t size = 1;
    for (int k : orders) {
      if (k < 2) throw error(errc::bad_shape, "additive order below 2");
      size *= static_cast<std::size_t>(k);
      if (size > size_limit)
        throw error(errc::bad_shape, "ring too large to enumerate");
    }
    if (constants.size() != m)
      throw error(errc::bad_shape, "structure constants need m rows");
    for (auto& row : constants) {
      if (row.size() != m)
        throw error(errc::bad_shape, "structure constants need m columns");
      for (auto& v : row) {
        if (v.size() != m)
          throw error(errc::bad_shape, "structure constant vector length");
      }
    }
    if (one.size() != m) throw error(errc::bad_shape, "identity vector length");

    auto reduce = [&](coords_t& v) {
      for (std::size_t t = 0; t < m; ++t) {
        v[t] %= orders[t];
        if (v[t] < 0) v[t] += orders[t];
      }
    };
    for (auto& row : constants)
      for (auto& v : row) reduce(v);
    reduce(one);

    // k_i e_i = 0 forces k_i (e_i e_j) = 0 and k_j (e_i e_j) = 0.
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t t = 0; t < m; ++t) {
          long c = constants[i][j][t];
          if ((orders[i] * c) % orders[t] != 0 ||
              (orders[j] * c) % orders[t] != 0) {
            throw error(errc::bad_shape,
                        "e_" + std::to_string(i + 1) + "*e_" +
                            std::to_string(j + 1) +
                            " is not annihilated by the generator orders");
          }
        }
      }
    }

    auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
    ring->orders_ = std::move(orders);
    ring->constants_ = std::move(constants);
    ring->name_ = std::move(name);
    ring->size_ = size;
    ring->strides_.resize(m);
    std::size_t stride = 1;
    for (std::size_t t = 0; t < m; ++t) {
      ring->strides_[t] = stride;
      stride *= static_cast<std::size_t>(ring->orders_[t]);
    }
    ring->one_coords_ = one;

    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
          coords_t left = ring->mul_coords(ring->constants_[i][j],
                                           ring->unit_vector(k));
          coords_t right = ring->mul_coords(ring->unit_vector(i),
                                            ring->constants_[j][k]);
          if (left != right) {
            throw error(errc::non_associative,
                        "(e_" + std::to_string(i + 1) + "*e_" +
                            std::to_string(j + 1) + ")*e_" +
                            std::to_string(k + 1) + " = " +
                            format_coords(left) + " but e_" +
                            std::to_string(i + 1) + "*(e_" +
                            std::to_string(j + 1) + "*e_" +
                            std::to_string(k + 1) + ") = " +
                            format_coords(right));
          }
        }
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      coords_t e = ring->unit_vector(i);
      if (ring->mul_coords(one, e) != e || ring->mul_coords(e, one) != e) {
        throw error(errc::bad_identity,
                    "identity fails on e_" + std::to_string(i + 1));
      }
    }
    ring->build_tables();
    return ring;
  }

  std::string const& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  std::size_t size() const noexcept { return size_; }
  std::span<int const> orders() const noexcept { return orders_; }
  constants_t const& structure_constants() const noexcept { return constants_; }

  elem_t zero() const noexcept { return 0; }
  elem_t one() const noexcept { return one_; }
  elem_t generator(std::size_t i) const { return static_cast<elem_t>(strides_[i]); }

  coords_t decode(elem_t x) const {
    coords_t c(rank());
    for (std::size_t t = 0; t < rank(); ++t)
      c[t] = static_cast<int>((x / strides_[t]) % orders_[t]);
    return c;
  }

  elem_t encode(coords_t const& c) const {
    if (c.size() != rank())
      throw error(errc::bad_shape, "coordinate vector length " +
                                       std::to_string(c.size()) + " != " +
                                       std::to_string(rank()));
    std::size_t x = 0;
    for (std::size_t t = 0; t < rank(); ++t) {
      int v = c[t] % orders_[t];
      if (v < 0) v += orders_[t];
      x += static_cast<std::size_t>(v) * strides_[t];
    }
    return static_cast<elem_t>(x);
  }

  std::string format(elem_t x) const { return format_coords(decode(x)); }

  elem_t add(elem_t a, elem_t b) const {
    if (!add_table_.empty()) return add_table_[a * size_ + b];
    return add_direct(a, b);
  }
  elem_t neg(elem_t a) const { return neg_table_[a]; }
  elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }
  elem_t mul(elem_t a, elem_t b) const {
    if (!mul_table_.empty()) return mul_table_[a * size_ + b];
    return encode(mul_coords(decode(a), decode(b)));
  }
  /// Integer multiple c*a (c may be negative).
  elem_t scale(long c, elem_t a) const {
    coords_t v = decode(a);
    for (std::size_t t = 0; t < rank(); ++t)
      v[t] = static_cast<int>((c % orders_[t]) * v[t] % orders_[t]);
    return encode(v);
  }
  elem_t pow(elem_t a, std::uint64_t k) const {
    elem_t result = one_;
    elem_t base = a;
    while (k > 0) {
      if (k & 1U) result = mul(result, base);
      base = mul(base, base);
      k >>= 1U;
    }
    return result;
  }

  std::optional<elem_t> inverse(elem_t a) const {
    elem_t inv = inverse_[a];
    if (inv == no_inverse) return std::nullopt;
    return inv;
  }
  bool is_unit(elem_t a) const { return inverse_[a] != no_inverse; }

  /// Elements of the ring in enumeration order.
  auto elements() const {
    std::vector<elem_t> all(size_);
    std::iota(all.begin(), all.end(), elem_t{0});
    return all;
  }

  coords_t mul_coords(coords_t const& a, coords_t const& b) const {
    std::size_t const m = rank();
    std::vector<long> acc(m, 0);
    for (std::size_t s = 0; s < m; ++s) {
      if (a[s] == 0) continue;
      for (std::size_t t = 0; t < m; ++t) {
        if (b[t] == 0) continue;
        long const w = static_cast<long>(a[s]) * b[t];
        auto const& c = constants_[s][t];
        for (std::size_t u = 0; u < m; ++u) acc[u] += w * c[u];
      }
    }
    coords_t out(m);
    for (std::size_t u = 0; u < m; ++u) out[u] = static_cast<int>(acc[u] % orders_[u]);
    return out;
  }

 private:
  static constexpr elem_t no_inverse = ~elem_t{0};

  FiniteRing() = default;

  coords_t unit_vector(std::size_t i) const {
    coords_t e(rank(), 0);
    e[i] = 1;
    return e;
  }

  elem_t add_direct(elem_t a, elem_t b) const {
    std::size_t x = 0;
    for (std::size_t t = 0; t < rank(); ++t) {
      std::size_t const k = static_cast<std::size_t>(orders_[t]);
      std::size_t const s = ((a / strides_[t]) % k + (b / strides_[t]) % k) % k;
      x += s * strides_[t];
    }
    return static_cast<elem_t>(x);
  }

  void build_tables() {
    one_ = encode(one_coords_);
    neg_table_.resize(size_);
    for (elem_t a = 0; a < size_; ++a) {
      coords_t c = decode(a);
      for (std::size_t t = 0; t < rank(); ++t) c[t] = (orders_[t] - c[t]) % orders_[t];
      neg_table_[a] = encode(c);
    }
    if (size_ <= table_limit) {
      add_table_.resize(size_ * size_);
      mul_table_.resize(size_ * size_);
      std::vector<coords_t> dec(size_);
      for (elem_t a = 0; a < size_; ++a) dec[a] = decode(a);
      for (elem_t a = 0; a < size_; ++a) {
        for (elem_t b = 0; b < size_; ++b) {
          add_table_[a * size_ + b] = add_direct(a, b);
          mul_table_[a * size_ + b] = encode(mul_coords(dec[a], dec[b]));
        }
      }
    }
    // Finite rings: a one-sided inverse is two-sided, but both sides are
    // checked anyway.
    inverse_.assign(size_, no_inverse);
    for (elem_t a = 0; a < size_; ++a) {
      if (inverse_[a] != no_inverse) continue;
      for (elem_t b = 0; b < size_; ++b) {
        if (mul(a, b) == one_ && mul(b, a) == one_) {
          inverse_[a] = b;
          inverse_[b] = a;
          break;
        }
      }
    }
  }

  std::vector<int> orders_;
  constants_t constants_;
  coords_t one_coords_;
  std::string name_;
  std::size_t size_ = 0;
  std::vector<std::size_t> strides_;
  elem_t one_ = 0;
  std::vector<elem_t> neg_table_;
  std::vector<elem_t> add_table_;
  std::vector<elem_t> mul_table_;
  std::vector<elem_t> inverse_;
};

inline RingPtr make_ring(std::vector<int> orders, FiniteRing::constants_t constants,
                         coords_t one, std::string name = "") {
  return FiniteRing::make(std::move(orders), std::move(constants), std::move(one),
                          std::move(name));
}

/// An element bound to its ring; arithmetic between elements of different
/// rings throws RingMismatch.
class RingElement {
 public:
  RingElement(RingPtr ring, elem_t id) : ring_(std::move(ring)), id_(id) {}
  RingElement(RingPtr ring, coords_t const& c) : ring_(std::move(ring)) {
    id_ = ring_->encode(c);
  }

  RingPtr const& ring() const noexcept { return ring_; }
  elem_t id() const noexcept { return id_; }
  coords_t coords() const { return ring_->decode(id_); }

  friend bool operator==(RingElement const& a, RingElement const& b) {
    return a.ring_ == b.ring_ && a.id_ == b.id_;
  }

  friend RingElement operator+(RingElement const& a, RingElement const& b) {
    check_same(a, b);
    return {a.ring_, a.ring_->add(a.id_, b.id_)};
  }
  friend RingElement operator-(RingElement const& a, RingElement const& b) {
    check_same(a, b);
    return {a.ring_, a.ring_->sub(a.id_, b.id_)};
  }
  friend RingElement operator*(RingElement const& a, RingElement const& b) {
    check_same(a, b);
    return {a.ring_, a.ring_->mul(a.id_, b.id_)};
  }
  friend RingElement operator-(RingElement const& a) {
    return {a.ring_, a.ring_->neg(a.id_)};
  }
  friend RingElement pow(RingElement const& a, std::uint64_t k) {
    return {a.ring_, a.ring_->pow(a.id_, k)};
  }

 private:
  static void check_same(RingElement const& a, RingElement const& b) {
    if (a.ring_ != b.ring_)
      throw error(errc::ring_mismatch, "operands belong to different rings");
  }

  RingPtr ring_;
  elem_t id_;
};

}  // namespace skewpbw
