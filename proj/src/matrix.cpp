#include "iipm/matrix.hpp"

namespace iipm {

MatE zero_matrix(Ring r, Index rows, Index cols) {
  MatE m(rows, cols);
  m.setConstant(r.zero());
  return m;
}

MatE identity_matrix(Ring r, Index d) {
  MatE m = zero_matrix(r, d, d);
  for (Index i = 0; i < d; ++i) m(i, i) = r.one();
  return m;
}

VecE zero_vec(Ring r, Index d) {
  VecE v(d);
  v.setConstant(r.zero());
  return v;
}

VecE unit_vec(Ring r, Index d, Index i) {
  VecE v = zero_vec(r, d);
  v(i) = r.one();
  return v;
}

MatE star(const MatE& m) {
  return m.unaryExpr([](const Elem& e) { return star(e); });
}

VecE star(const VecE& v) {
  return v.unaryExpr([](const Elem& e) { return star(e); });
}

MatE star_transpose(const MatE& m) { return star(MatE(m.transpose())); }

bool exact_equal(const MatE& a, const MatE& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool exact_equal(const VecE& a, const VecE& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool is_zero(const MatE& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

bool is_zero(const VecE& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

Ring ring_of(const MatE& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j).attached()) return m(i, j).ring();
  throw Error("matrix has no ring-attached entries");
}

MatE normalized(Ring r, const MatE& m) {
  return m.unaryExpr([&](const Elem& e) { return r.zero() + e; });
}

VecE normalized(Ring r, const VecE& v) {
  return v.unaryExpr([&](const Elem& e) { return r.zero() + e; });
}

std::vector<Elem> char_poly(const MatE& a) {
  const Index n = a.rows();
  if (n == 0 || n != a.cols()) throw Error("char_poly needs a nonempty square matrix");
  const Ring ring = ring_of(a);

  // Samuelson-Berkowitz: grow one leading principal submatrix at a time,
  // multiplying the coefficient vector by a lower-triangular Toeplitz factor.
  // Characteristic 2 drops every sign.
  std::vector<Elem> coeffs = {ring.one()};
  for (Index r = 1; r <= n; ++r) {
    std::vector<Elem> toeplitz_col(size_t(r) + 1, ring.zero());
    toeplitz_col[0] = ring.one();
    toeplitz_col[1] = a(r - 1, r - 1);
    if (r >= 2) {
      const auto corner = a.topLeftCorner(r - 1, r - 1);
      const auto row = a.block(r - 1, 0, 1, r - 1);
      VecE v = a.block(0, r - 1, r - 1, 1);
      for (Index t = 2; t <= r; ++t) {
        toeplitz_col[size_t(t)] = (row * v)(0, 0);
        if (t < r) v = VecE(corner * v);
      }
    }
    std::vector<Elem> next(size_t(r) + 1, ring.zero());
    for (size_t i = 0; i < next.size(); ++i)
      for (size_t j = 0; j < coeffs.size() && j <= i; ++j)
        next[i] += toeplitz_col[i - j] * coeffs[j];
    coeffs = std::move(next);
  }
  return coeffs;
}

Elem det(const MatE& a) { return char_poly(a).back(); }

std::optional<MatE> try_inverse(const MatE& a) {
  const Index n = a.rows();
  const Ring ring = ring_of(a);
  const std::vector<Elem> coeffs = char_poly(a);
  const Elem determinant = coeffs.back();
  std::optional<uint64_t> dinv;
  if (determinant.attached()) dinv = determinant.ring_data()->inv_mask(determinant.mask());
  if (!dinv) return std::nullopt;

  // Cayley-Hamilton: A * (c0 A^{n-1} + ... + c_{n-1} I) = det(A) * I.
  MatE adjugate = zero_matrix(ring, n, n);
  for (Index i = 0; i < n; ++i) adjugate(i, i) = coeffs[0];
  for (size_t i = 1; i < size_t(n); ++i) {
    adjugate = MatE(a * adjugate);
    for (Index j = 0; j < n; ++j) adjugate(j, j) += coeffs[i];
  }
  const Elem scale = Elem(determinant.ring_data(), *dinv);
  return MatE(adjugate.unaryExpr([&](const Elem& e) { return scale * e; }));
}

MatE mat_pow(const MatE& a, unsigned n) {
  MatE acc = identity_matrix(ring_of(a), a.rows());
  for (unsigned i = 0; i < n; ++i) acc = MatE(acc * a);
  return acc;
}

}  // namespace iipm
