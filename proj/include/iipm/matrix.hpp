#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "iipm/ring.hpp"

namespace Eigen {

template <>
struct NumTraits<iipm::Elem> {
  typedef iipm::Elem Real;
  typedef iipm::Elem NonInteger;
  typedef iipm::Elem Literal;
  typedef iipm::Elem Nested;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 4
  };
  static inline Real epsilon() { return iipm::Elem(); }
  static inline Real dummy_precision() { return iipm::Elem(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace iipm {

using Index = Eigen::Index;
using MatE = Eigen::Matrix<Elem, Eigen::Dynamic, Eigen::Dynamic>;
using VecE = Eigen::Matrix<Elem, Eigen::Dynamic, 1>;

MatE zero_matrix(Ring r, Index rows, Index cols);
MatE identity_matrix(Ring r, Index d);
VecE zero_vec(Ring r, Index d);
VecE unit_vec(Ring r, Index d, Index i);

/// Entrywise involution.
MatE star(const MatE& m);
VecE star(const VecE& v);
/// star(m^T); a gram matrix G is hermitian when star_transpose(G) == G.
MatE star_transpose(const MatE& m);

bool exact_equal(const MatE& a, const MatE& b);
bool exact_equal(const VecE& a, const VecE& b);
bool is_zero(const MatE& m);
bool is_zero(const VecE& v);

/// Ring of the first attached entry; throws on fully unattached input.
Ring ring_of(const MatE& m);

/// Rebind every entry to r, reducing unattached constants; throws
/// RingMismatch when an entry belongs to a different ring.
MatE normalized(Ring r, const MatE& m);
VecE normalized(Ring r, const VecE& v);

/// Coefficients of det(lambda*I + A), leading first, length n+1.
/// Division-free (Samuelson-Berkowitz), valid over any commutative ring;
/// in characteristic 2 this is the characteristic polynomial.
std::vector<Elem> char_poly(const MatE& a);

/// det(A); equals the constant term of char_poly in characteristic 2.
Elem det(const MatE& a);

/// Inverse via Cayley-Hamilton; nullopt when det(A) is not a unit.
std::optional<MatE> try_inverse(const MatE& a);

MatE mat_pow(const MatE& a, unsigned n);

}  // namespace iipm
