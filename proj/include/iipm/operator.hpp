#pragma once

#include "iipm/space.hpp"

namespace iipm {

/// Adjointable morphism on a Space: a d x d matrix over the space's ring.
struct Operator {
  Space space;
  MatE mat;
};

Operator make_operator(const Space& s, MatE entries);
Operator identity_op(const Space& s);
Operator zero_op(const Space& s);

Operator operator*(const Operator& a, const Operator& b);
Operator operator+(const Operator& a, const Operator& b);
bool operator==(const Operator& a, const Operator& b);
bool operator!=(const Operator& a, const Operator& b);
Vector operator*(const Operator& a, const Vector& x);

/// The unique A* with <Ax, y> = <x, A*y>: star(G^-1 A^T G).
Operator adjoint(const Operator& a);

struct OperatorClass {
  bool self_adjoint = false;
  bool unitary = false;
  bool isometry = false;
  bool projection = false;
};

/// Exact matrix-identity tests for the four operator classes.
OperatorClass classify(const Operator& a);
bool is_self_adjoint(const Operator& a);

Operator op_pow(const Operator& a, unsigned n);

/// Diagonal sub-block (block, block) of an operator on a direct sum,
/// as an operator on the component space: realizes P_V U |_V.
Operator compress(const Operator& a, int block, Index block_dim);

/// Deterministic S + S* sample; with require_nonzero, redraws until nonzero.
Operator random_self_adjoint(const Space& s, uint64_t seed, bool require_nonzero = false);

}  // namespace iipm
