#pragma once

#include <map>
#include <utility>
#include <vector>

#include "iipm/operator.hpp"

namespace iipm {

enum class Laterality { bilateral, unilateral };

/// Finitely supported sequence of vectors in one component space: an element
/// of the direct sum over Z (bilateral) or over n >= 0 (unilateral).
/// Zero vectors are pruned, so support() holds exactly the nonzero positions.
class FinSuppSeq {
 public:
  FinSuppSeq() = default;
  FinSuppSeq(Space component, Laterality lat) : comp_(std::move(component)), lat_(lat) {}

  static FinSuppSeq make(const Space& component, Laterality lat,
                         const std::vector<std::pair<int, VecE>>& entries);

  const Space& component() const { return comp_; }
  Laterality laterality() const { return lat_; }
  const std::map<int, VecE>& support() const { return xs_; }
  bool empty() const { return xs_.empty(); }

  /// Entry at position n; the zero vector when unsupported.
  VecE at(int n) const;

  /// Accumulate v into position n, pruning the entry if it cancels.
  void add_at(int n, const VecE& v);

  friend bool operator==(const FinSuppSeq& a, const FinSuppSeq& b);
  friend bool operator!=(const FinSuppSeq& a, const FinSuppSeq& b) { return !(a == b); }

 private:
  Space comp_;
  Laterality lat_ = Laterality::bilateral;
  std::map<int, VecE> xs_;
};

FinSuppSeq delta_seq(const Space& s, int pos, const VecE& v,
                     Laterality lat = Laterality::bilateral);

/// Sum over the (finite) support of componentwise inner products.
Elem seq_inner(const FinSuppSeq& x, const FinSuppSeq& y);

FinSuppSeq operator+(const FinSuppSeq& x, const FinSuppSeq& y);
FinSuppSeq operator*(const Elem& a, const FinSuppSeq& x);

enum class LazyKind { sznagy, isometric };

/// Rule-based banded operator on sequences (band radius 1): the infinite
/// dilation matrices, stored as their generator T and an action rule.
struct LazyBandedOp {
  Operator generator;  ///< self-adjoint T on the component space
  LazyKind kind = LazyKind::sznagy;
};

FinSuppSeq lazy_apply(const LazyBandedOp& op, const FinSuppSeq& x);
FinSuppSeq lazy_apply_adjoint(const LazyBandedOp& op, const FinSuppSeq& x);

Laterality laterality_of(LazyKind kind);

/// P_V U^n |_V read off by applying the rule n times to delta_0(basis).
Operator lazy_compress_power(const LazyBandedOp& op, int n);
/// Same for the adjoint rule.
Operator lazy_compress_adjoint_power(const LazyBandedOp& op, int n);

}  // namespace iipm
