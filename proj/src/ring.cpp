#include "iipm/ring.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace iipm {

std::optional<uint64_t> RingData::inv_mask(uint64_t a) const {
  if (a == 0) return std::nullopt;
  // Invariant: s0 * a == r0 and s1 * a == r1, modulo the ring modulus.
  uint64_t r0 = a, r1 = spec_.modulus;
  uint64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    uint64_t q;
    const uint64_t rem = poly::divmod(r0, r1, q);
    r0 = r1;
    r1 = rem;
    const uint64_t s2 = s0 ^ poly::clmul(q, s1);
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) return std::nullopt;  // gcd(a, modulus) != 1: zero divisor
  return reduce(s0);
}

bool is_irreducible(uint64_t modulus) {
  const int k = poly::degree(modulus);
  if (k < 1) return false;
  for (int d = 1; 2 * d <= k; ++d)
    for (uint64_t q = uint64_t(1) << d; q < (uint64_t(2) << d); ++q)
      if (poly::mod(modulus, q) == 0) return false;
  return true;
}

namespace {

using RegistryKey = std::tuple<int, unsigned, uint64_t, int, unsigned>;

RegistryKey key_of(const RingSpec& s) {
  return {int(s.kind), s.degree, s.modulus, int(s.star), s.frobenius_power};
}

void validate(const RingSpec& s) {
  if (s.degree < 1 || s.degree > 16) throw InvalidModulus("degree k must be in 1..16");
  if (poly::degree(s.modulus) != int(s.degree)) throw InvalidModulus();
  if (s.kind == RingKind::gf2k && !is_irreducible(s.modulus)) throw ReducibleModulus();
  if (s.star == StarKind::frobenius) {
    const bool ok = s.kind == RingKind::gf2k && s.degree % 2 == 0 &&
                    s.frobenius_power == s.degree / 2;
    if (!ok) throw InvalidStar();
  } else if (s.frobenius_power != 0) {
    throw InvalidStar("frobenius_power set on an identity involution");
  }
}

}  // namespace

Ring make_ring(const RingSpec& spec) {
  validate(spec);
  static std::mutex mu;
  static std::map<RegistryKey, std::unique_ptr<const RingData>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[key_of(spec)];
  if (!slot) slot = std::make_unique<const RingData>(spec);
  return Ring(slot.get());
}

Ring gf2() { return make_ring(RingSpec{}); }

Ring gf2k_field(unsigned k, uint64_t modulus, bool conjugation) {
  RingSpec s;
  s.kind = RingKind::gf2k;
  s.degree = k;
  s.modulus = modulus;
  if (conjugation) {
    s.star = StarKind::frobenius;
    s.frobenius_power = k / 2;
  }
  return make_ring(s);
}

Ring quotient_ring(unsigned k, uint64_t modulus) {
  RingSpec s;
  s.kind = RingKind::quotient;
  s.degree = k;
  s.modulus = modulus;
  return make_ring(s);
}

std::string to_hex(uint64_t mask) {
  if (mask == 0) return "0";
  static const char digits[] = "0123456789abcdef";
  std::string out;
  while (mask) {
    out.insert(out.begin(), digits[mask & 0xf]);
    mask >>= 4;
  }
  return out;
}

std::string to_hex(const Elem& a) { return to_hex(a.mask()); }

std::ostream& operator<<(std::ostream& os, const Elem& a) { return os << to_hex(a); }

}  // namespace iipm
