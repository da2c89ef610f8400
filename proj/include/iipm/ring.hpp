#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "iipm/errors.hpp"

namespace iipm {

namespace poly {

// Polynomials over GF(2) packed as bitmasks, bit i = coefficient of x^i.

inline int degree(uint64_t v) { return v ? 63 - __builtin_clzll(v) : -1; }

/// Carry-less product. Callers keep degree(a) + degree(b) < 64.
inline uint64_t clmul(uint64_t a, uint64_t b) {
  uint64_t acc = 0;
  while (a) {
    acc ^= b << __builtin_ctzll(a);
    a &= a - 1;
  }
  return acc;
}

/// Remainder of v modulo m (m != 0).
inline uint64_t mod(uint64_t v, uint64_t m) {
  const int dm = degree(m);
  for (int dv = degree(v); dv >= dm; dv = degree(v)) v ^= m << (dv - dm);
  return v;
}

/// Quotient and remainder of v divided by m (m != 0).
inline uint64_t divmod(uint64_t v, uint64_t m, uint64_t& quotient) {
  const int dm = degree(m);
  quotient = 0;
  for (int dv = degree(v); dv >= dm; dv = degree(v)) {
    quotient |= uint64_t(1) << (dv - dm);
    v ^= m << (dv - dm);
  }
  return v;
}

}  // namespace poly

enum class RingKind { gf2k, quotient };
enum class StarKind { identity, frobenius };

/// Construction parameters for a commutative characteristic-2 *-ring
/// GF(2)[x]/(modulus) with an involution of order at most 2.
struct RingSpec {
  RingKind kind = RingKind::gf2k;
  unsigned degree = 1;           ///< k: elements are residues of degree < k
  uint64_t modulus = 0b10;       ///< bit i = coefficient of x^i; bit k must be set
  StarKind star = StarKind::identity;
  unsigned frobenius_power = 0;  ///< m in a -> a^(2^m); only kind gf2k, k even, m = k/2

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Immutable interned payload behind a Ring handle.
class RingData {
 public:
  explicit RingData(const RingSpec& spec) : spec_(spec) {}

  const RingSpec& spec() const { return spec_; }
  unsigned k() const { return spec_.degree; }
  uint64_t modulus() const { return spec_.modulus; }
  bool is_field() const { return spec_.kind == RingKind::gf2k; }
  uint64_t order() const { return uint64_t(1) << spec_.degree; }

  uint64_t reduce(uint64_t v) const { return poly::mod(v, spec_.modulus); }
  uint64_t mul_mask(uint64_t a, uint64_t b) const { return reduce(poly::clmul(a, b)); }
  uint64_t star_mask(uint64_t a) const {
    if (spec_.star == StarKind::identity) return a;
    uint64_t r = a;
    for (unsigned i = 0; i < spec_.frobenius_power; ++i) r = mul_mask(r, r);
    return r;
  }
  /// Extended Euclid on polynomial representatives; nullopt when not a unit.
  std::optional<uint64_t> inv_mask(uint64_t a) const;

 private:
  RingSpec spec_;
};

class Elem;

/// Value handle to an interned ring; compare by identity.
class Ring {
 public:
  Ring() = default;

  bool null() const { return p_ == nullptr; }
  const RingData* data() const { return p_; }
  const RingSpec& spec() const { return p_->spec(); }
  unsigned k() const { return p_->k(); }
  uint64_t modulus() const { return p_->modulus(); }
  bool is_field() const { return p_->is_field(); }
  uint64_t order() const { return p_->order(); }

  Elem zero() const;
  Elem one() const;
  /// Element with the given coefficient mask; throws MaskOutOfRange.
  Elem element(uint64_t mask) const;

  friend bool operator==(Ring a, Ring b) { return a.p_ == b.p_; }
  friend bool operator!=(Ring a, Ring b) { return a.p_ != b.p_; }

 private:
  friend Ring make_ring(const RingSpec&);
  friend class Elem;
  explicit Ring(const RingData* p) : p_(p) {}
  const RingData* p_ = nullptr;
};

/// Element of a characteristic-2 *-ring: a residue mask plus the ring it lives
/// in. Default- and integer-constructed elements are unattached GF(2)
/// polynomial constants that bind to a ring on first contact; Eigen's product
/// kernels materialize Scalar(0) and Scalar(1) accumulators this way.
class Elem {
 public:
  Elem() = default;
  explicit Elem(long constant) : mask_(uint64_t(constant)) {}
  Elem(const RingData* ring, uint64_t mask) : ring_(ring), mask_(mask) {}

  const RingData* ring_data() const { return ring_; }
  Ring ring() const;
  uint64_t mask() const { return mask_; }
  bool attached() const { return ring_ != nullptr; }
  bool is_zero() const { return mask_ == 0; }
  bool is_one() const { return mask_ == 1; }

  friend Elem operator+(const Elem& a, const Elem& b) {
    if (a.ring_ == b.ring_) return Elem(a.ring_, a.mask_ ^ b.mask_);
    const RingData* r = joined(a, b);
    return Elem(r, r->reduce(a.mask_) ^ r->reduce(b.mask_));
  }
  friend Elem operator*(const Elem& a, const Elem& b) {
    const RingData* r = a.ring_ == b.ring_ ? a.ring_ : joined(a, b);
    const uint64_t prod = poly::clmul(a.mask_, b.mask_);
    return r ? Elem(r, r->reduce(prod)) : Elem(nullptr, prod);
  }
  friend Elem operator-(const Elem& a, const Elem& b) { return a + b; }  // char 2
  Elem operator-() const { return *this; }
  Elem& operator+=(const Elem& o) { return *this = *this + o; }
  Elem& operator-=(const Elem& o) { return *this = *this + o; }
  Elem& operator*=(const Elem& o) { return *this = *this * o; }

  friend bool operator==(const Elem& a, const Elem& b) {
    if (a.ring_ == b.ring_) return a.mask_ == b.mask_;
    const RingData* r = joined(a, b);
    return r->reduce(a.mask_) == r->reduce(b.mask_);
  }
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

 private:
  static const RingData* joined(const Elem& a, const Elem& b) {
    if (a.ring_ && b.ring_ && a.ring_ != b.ring_) throw RingMismatch();
    return a.ring_ ? a.ring_ : b.ring_;
  }

  const RingData* ring_ = nullptr;
  uint64_t mask_ = 0;
};

inline Elem Ring::zero() const { return Elem(p_, 0); }
inline Elem Ring::one() const { return Elem(p_, 1); }
inline Elem Ring::element(uint64_t mask) const {
  if (!p_) throw Error("element() on a null ring");
  if (mask >> p_->k()) throw MaskOutOfRange();
  return Elem(p_, mask);
}
inline Ring Elem::ring() const { return Ring(ring_); }

/// Ring involution: identity, or the order-2 Frobenius a -> a^(2^(k/2)).
inline Elem star(const Elem& a) {
  if (!a.attached()) return a;
  return Elem(a.ring_data(), a.ring_data()->star_mask(a.mask()));
}

/// Multiplicative inverse; throws NotAUnit for zero and zero divisors.
inline Elem inv(const Elem& a) {
  if (!a.attached()) {
    if (a.is_one()) return a;
    throw NotAUnit();
  }
  const auto m = a.ring_data()->inv_mask(a.mask());
  if (!m) throw NotAUnit();
  return Elem(a.ring_data(), *m);
}

/// Lowercase hex of the coefficient mask, no prefix (the wire encoding).
std::string to_hex(const Elem& a);
std::string to_hex(uint64_t mask);
std::ostream& operator<<(std::ostream&, const Elem&);

/// Interned ring construction; validates all RingSpec invariants.
Ring make_ring(const RingSpec& spec);
Ring gf2();
Ring gf2k_field(unsigned k, uint64_t modulus, bool conjugation = false);
Ring quotient_ring(unsigned k, uint64_t modulus);

/// Exhaustive divisor scan up to degree k/2; defined for degree >= 1.
bool is_irreducible(uint64_t modulus);

}  // namespace iipm
