#include "iipm/operator.hpp"

#include <random>

namespace iipm {

Operator make_operator(const Space& s, MatE entries) {
  if (entries.rows() != s.dim() || entries.cols() != s.dim())
    throw Error("operator matrix does not match space dimension");
  return Operator{s, normalized(s.ring(), entries)};
}

Operator identity_op(const Space& s) { return Operator{s, identity_matrix(s.ring(), s.dim())}; }

Operator zero_op(const Space& s) { return Operator{s, zero_matrix(s.ring(), s.dim(), s.dim())}; }

Operator operator*(const Operator& a, const Operator& b) {
  if (!a.space.same_as(b.space)) throw SpaceMismatch();
  return Operator{a.space, MatE(a.mat * b.mat)};
}

Operator operator+(const Operator& a, const Operator& b) {
  if (!a.space.same_as(b.space)) throw SpaceMismatch();
  return Operator{a.space, MatE(a.mat + b.mat)};
}

bool operator==(const Operator& a, const Operator& b) {
  return a.space.same_as(b.space) && exact_equal(a.mat, b.mat);
}

bool operator!=(const Operator& a, const Operator& b) { return !(a == b); }

Vector operator*(const Operator& a, const Vector& x) {
  if (!a.space.same_as(x.space)) throw SpaceMismatch();
  return Vector{x.space, VecE(a.mat * x.coords)};
}

Operator adjoint(const Operator& a) {
  const Space& s = a.space;
  return Operator{s, star(MatE(s.gram_inverse() * a.mat.transpose() * s.gram()))};
}

OperatorClass classify(const Operator& a) {
  const Operator adj = adjoint(a);
  const Operator id = identity_op(a.space);
  OperatorClass c;
  c.self_adjoint = exact_equal(adj.mat, a.mat);
  c.isometry = adj * a == id;
  c.unitary = c.isometry && a * adj == id;
  c.projection = c.self_adjoint && a * a == a;
  return c;
}

bool is_self_adjoint(const Operator& a) { return exact_equal(adjoint(a).mat, a.mat); }

Operator op_pow(const Operator& a, unsigned n) {
  Operator acc = identity_op(a.space);
  for (unsigned i = 0; i < n; ++i) acc = acc * a;
  return acc;
}

Operator compress(const Operator& a, int block, Index block_dim) {
  const Index dim = a.space.dim();
  if (block_dim < 1 || dim % block_dim != 0) throw BadBlockIndex();
  if (block < 0 || Index(block) >= dim / block_dim) throw BadBlockIndex();

  Space target;
  const Space& comp = a.space.component();
  if (!comp.null() && comp.dim() == block_dim) {
    target = comp;
  } else {
    target = make_space(a.space.ring(), block_dim,
                        a.space.gram().block(block * block_dim, block * block_dim,
                                             block_dim, block_dim));
  }
  return Operator{target,
                  MatE(a.mat.block(block * block_dim, block * block_dim, block_dim, block_dim))};
}

Operator random_self_adjoint(const Space& s, uint64_t seed, bool require_nonzero) {
  std::mt19937_64 eng(seed);
  const Ring ring = s.ring();
  const uint64_t mask_range = ring.order() - 1;  // order is a power of two
  const Index d = s.dim();
  for (int attempt = 0; attempt < 4096; ++attempt) {
    MatE sample(d, d);
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) sample(i, j) = Elem(ring.data(), eng() & mask_range);
    const Operator raw{s, sample};
    const Operator sym = raw + adjoint(raw);
    if (!require_nonzero || !is_zero(sym.mat)) return sym;
  }
  // S + S* can vanish identically (d = 1 over GF(2) with the identity form).
  throw Error("no nonzero S + S* sample found");
}

}  // namespace iipm
