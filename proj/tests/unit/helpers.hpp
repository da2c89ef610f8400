#pragma once

#include <random>
#include <vector>

#include "iipm/io.hpp"
#include "iipm/matrix.hpp"
#include "iipm/space.hpp"

namespace iipm::testing {

// ---- fixture rings ---------------------------------------------------------

inline Ring gf4(bool conjugation = false) { return gf2k_field(2, 0b111, conjugation); }
inline Ring gf8() { return gf2k_field(3, 0b1011, false); }
inline Ring gf16(bool conjugation = false) { return gf2k_field(4, 0b10011, conjugation); }
inline Ring dual_numbers() { return quotient_ring(2, 0b100); }       // GF(2)[x]/(x^2)
inline Ring quotient_x1sq() { return quotient_ring(2, 0b101); }      // GF(2)[x]/((x+1)^2)

// ---- independent oracles ----------------------------------------------------

/// Schoolbook polynomial multiply (coefficient convolution) followed by long
/// division; independent of the carry-less path in the library.
inline uint64_t school_mul(uint64_t a, uint64_t b, uint64_t modulus) {
  uint64_t prod = 0;
  for (int i = 0; i <= poly::degree(a); ++i)
    for (int j = 0; j <= poly::degree(b); ++j)
      if ((a >> i & 1) && (b >> j & 1)) prod ^= uint64_t(1) << (i + j);
  const int dm = poly::degree(modulus);
  for (int dp = poly::degree(prod); dp >= dm; dp = poly::degree(prod))
    prod ^= modulus << (dp - dm);
  return prod;
}

/// Trial division by every polynomial of degree 1..k-1 (full range, unlike
/// the library's k/2 scan).
inline bool irreducible_oracle(uint64_t modulus) {
  const int k = poly::degree(modulus);
  if (k < 1) return false;
  for (uint64_t q = 2; poly::degree(q) < k; ++q)
    if (poly::degree(q) >= 1 && poly::mod(modulus, q) == 0) return false;
  return true;
}

/// Characteristic-2 determinant by subset dynamic programming (all signs are
/// +1, so this is the permanent formula). O(2^n n); fine for n <= 10.
inline Elem det_oracle(const MatE& a) {
  const Index n = a.rows();
  const Ring ring = ring_of(a);
  std::vector<Elem> dp(size_t(1) << n, ring.zero());
  dp[0] = ring.one();
  for (uint32_t mask = 1; mask < dp.size(); ++mask) {
    const Index row = Index(__builtin_popcount(mask)) - 1;
    Elem acc = ring.zero();
    for (Index j = 0; j < n; ++j)
      if (mask >> j & 1) acc += a(row, j) * dp[mask ^ (uint32_t(1) << j)];
    dp[mask] = acc;
  }
  return dp.back();
}

// ---- deterministic sampling --------------------------------------------------

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}

  uint64_t next() { return eng(); }
  int range(int lo, int hi) { return lo + int(eng() % uint64_t(hi - lo + 1)); }

  Elem elem(Ring r) { return Elem(r.data(), eng() & (r.order() - 1)); }

  VecE vec(const Space& s) {
    VecE v(s.dim());
    for (Index i = 0; i < s.dim(); ++i) v(i) = elem(s.ring());
    return v;
  }

  MatE mat(Ring r, Index rows, Index cols) {
    MatE m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = elem(r);
    return m;
  }
};

/// Random hermitian invertible gram: star-symmetric off-diagonal, trace-image
/// diagonal (a + star(a) is always star-fixed), rejection on invertibility.
inline MatE random_gram(Rng& rng, Ring r, Index d) {
  for (int attempt = 0; attempt < 400; ++attempt) {
    MatE g = zero_matrix(r, d, d);
    for (Index i = 0; i < d; ++i) {
      Elem diag = rng.elem(r);
      while (star(diag) != diag) diag = rng.elem(r);  // star-fixed diagonal
      g(i, i) = diag;
      for (Index j = i + 1; j < d; ++j) {
        g(i, j) = rng.elem(r);
        g(j, i) = star(g(i, j));
      }
    }
    if (try_inverse(g)) return g;
  }
  throw Error("no invertible hermitian gram found");
}

inline Ring random_ring(Rng& rng) {
  switch (rng.range(0, 5)) {
    case 0: return gf2();
    case 1: return gf4();
    case 2: return gf4(true);
    case 3: return gf8();
    case 4: return gf16(true);
    default: return quotient_x1sq();
  }
}

/// Random document: random ring, space with a random gram, 0..3 operators.
inline Document random_document(Rng& rng) {
  Document doc;
  doc.ring = random_ring(rng);
  const Index d = rng.range(1, 3);
  doc.space = make_space(doc.ring, d, random_gram(rng, doc.ring, d));
  const int n_ops = rng.range(0, 3);
  for (int i = 0; i < n_ops; ++i)
    doc.operators.emplace_back("op" + std::to_string(i),
                               make_operator(*doc.space, rng.mat(doc.ring, d, d)));
  return doc;
}

}  // namespace iipm::testing
