#pragma once

#include <memory>

#include "iipm/matrix.hpp"

namespace iipm {

struct SpaceData;

/// Free module R^d carrying an invertible hermitian gram form. The inner
/// product is <x, y> = x^T G star(y): linear in the first slot,
/// star-hermitian in the second.
class Space {
 public:
  Space() = default;

  bool null() const { return !d_; }
  Ring ring() const;
  Index dim() const;
  const MatE& gram() const;
  const MatE& gram_inverse() const;

  /// Component space when this was built by direct_sum; null otherwise.
  const Space& component() const;
  int copies() const;

  bool same_as(const Space& o) const;
  friend bool operator==(const Space& a, const Space& b) { return a.same_as(b); }
  friend bool operator!=(const Space& a, const Space& b) { return !a.same_as(b); }

 private:
  std::shared_ptr<const SpaceData> d_;

  friend Space make_space(Ring, Index, const MatE&);
  friend Space direct_sum(const Space&, int);
};

struct SpaceData {
  Ring ring;
  MatE gram;
  MatE gram_inv;
  Space component;
  int copies = 1;
};

inline Ring Space::ring() const { return d_->ring; }
inline Index Space::dim() const { return d_->gram.rows(); }
inline const MatE& Space::gram() const { return d_->gram; }
inline const MatE& Space::gram_inverse() const { return d_->gram_inv; }
inline const Space& Space::component() const { return d_->component; }
inline int Space::copies() const { return d_->copies; }

/// Validates hermitianness and invertibility of the gram form.
Space make_space(Ring ring, Index dim, const MatE& gram);
/// R^d with the identity gram.
Space standard_space(Ring ring, Index dim);
/// copies >= 2 orthogonal copies; gram is block diagonal.
Space direct_sum(const Space& s, int copies);

struct Vector {
  Space space;
  VecE coords;
};

Vector make_vector(const Space& s, VecE coords);
Vector zero_vector(const Space& s);
Vector basis_vector(const Space& s, Index i);

Elem inner(const Vector& x, const Vector& y);

bool operator==(const Vector& x, const Vector& y);
Vector operator+(const Vector& x, const Vector& y);
Vector operator*(const Elem& a, const Vector& x);

}  // namespace iipm
