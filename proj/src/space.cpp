#include "iipm/space.hpp"

namespace iipm {

bool Space::same_as(const Space& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->ring == o.d_->ring && exact_equal(d_->gram, o.d_->gram);
}

Space make_space(Ring ring, Index dim, const MatE& gram) {
  if (dim < 1) throw Error("space dimension must be positive");
  if (gram.rows() != dim || gram.cols() != dim) throw Error("gram matrix has wrong shape");
  MatE g = normalized(ring, gram);
  if (!exact_equal(star_transpose(g), g)) throw GramNotHermitian();
  auto ginv = try_inverse(g);
  if (!ginv) throw GramSingular();

  auto data = std::make_shared<SpaceData>();
  data->ring = ring;
  data->gram = std::move(g);
  data->gram_inv = std::move(*ginv);
  Space s;
  s.d_ = std::move(data);
  return s;
}

Space standard_space(Ring ring, Index dim) {
  return make_space(ring, dim, identity_matrix(ring, dim));
}

Space direct_sum(const Space& s, int copies) {
  if (s.null()) throw Error("direct_sum of a null space");
  if (copies < 2) throw Error("direct_sum needs at least 2 copies");
  const Index d = s.dim();
  const Ring ring = s.ring();
  MatE gram = zero_matrix(ring, d * copies, d * copies);
  MatE gram_inv = zero_matrix(ring, d * copies, d * copies);
  for (int c = 0; c < copies; ++c) {
    gram.block(c * d, c * d, d, d) = s.gram();
    gram_inv.block(c * d, c * d, d, d) = s.gram_inverse();
  }
  auto data = std::make_shared<SpaceData>();
  data->ring = ring;
  data->gram = std::move(gram);
  data->gram_inv = std::move(gram_inv);
  data->component = s;
  data->copies = copies;
  Space out;
  out.d_ = std::move(data);
  return out;
}

Vector make_vector(const Space& s, VecE coords) {
  if (coords.size() != s.dim()) throw Error("vector length does not match space dimension");
  return Vector{s, normalized(s.ring(), coords)};
}

Vector zero_vector(const Space& s) { return Vector{s, zero_vec(s.ring(), s.dim())}; }

Vector basis_vector(const Space& s, Index i) {
  if (i < 0 || i >= s.dim()) throw Error("basis index out of range");
  return Vector{s, unit_vec(s.ring(), s.dim(), i)};
}

Elem inner(const Vector& x, const Vector& y) {
  if (!x.space.same_as(y.space)) throw SpaceMismatch();
  return (x.coords.transpose() * x.space.gram() * star(y.coords))(0, 0);
}

bool operator==(const Vector& x, const Vector& y) {
  return x.space.same_as(y.space) && exact_equal(x.coords, y.coords);
}

Vector operator+(const Vector& x, const Vector& y) {
  if (!x.space.same_as(y.space)) throw SpaceMismatch();
  return Vector{x.space, VecE(x.coords + y.coords)};
}

Vector operator*(const Elem& a, const Vector& x) {
  return Vector{x.space, VecE(x.coords.unaryExpr([&](const Elem& e) { return a * e; }))};
}

}  // namespace iipm
