#include "iipm/seqspace.hpp"

namespace iipm {

FinSuppSeq FinSuppSeq::make(const Space& component, Laterality lat,
                            const std::vector<std::pair<int, VecE>>& entries) {
  FinSuppSeq seq(component, lat);
  for (const auto& [pos, v] : entries) {
    if (seq.xs_.count(pos)) throw DuplicatePosition();
    if (lat == Laterality::unilateral && pos < 0) throw NegativePosition();
    if (v.size() != component.dim()) throw Error("sequence entry has wrong dimension");
    seq.add_at(pos, normalized(component.ring(), v));
  }
  return seq;
}

VecE FinSuppSeq::at(int n) const {
  const auto it = xs_.find(n);
  return it != xs_.end() ? it->second : zero_vec(comp_.ring(), comp_.dim());
}

void FinSuppSeq::add_at(int n, const VecE& v) {
  if (lat_ == Laterality::unilateral && n < 0) throw NegativePosition();
  const auto it = xs_.find(n);
  if (it == xs_.end()) {
    if (!is_zero(v)) xs_.emplace(n, v);
    return;
  }
  it->second = VecE(it->second + v);
  if (is_zero(it->second)) xs_.erase(it);
}

bool operator==(const FinSuppSeq& a, const FinSuppSeq& b) {
  if (!a.comp_.same_as(b.comp_) || a.lat_ != b.lat_) return false;
  if (a.xs_.size() != b.xs_.size()) return false;
  auto ia = a.xs_.begin();
  auto ib = b.xs_.begin();
  for (; ia != a.xs_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !exact_equal(ia->second, ib->second)) return false;
  return true;
}

FinSuppSeq delta_seq(const Space& s, int pos, const VecE& v, Laterality lat) {
  return FinSuppSeq::make(s, lat, {{pos, v}});
}

Elem seq_inner(const FinSuppSeq& x, const FinSuppSeq& y) {
  if (!x.component().same_as(y.component())) throw SpaceMismatch();
  if (x.laterality() != y.laterality()) throw LateralityMismatch();
  Elem acc = x.component().ring().zero();
  for (const auto& [pos, xv] : x.support()) {
    const auto it = y.support().find(pos);
    if (it == y.support().end()) continue;
    acc += inner(Vector{x.component(), xv}, Vector{y.component(), it->second});
  }
  return acc;
}

FinSuppSeq operator+(const FinSuppSeq& x, const FinSuppSeq& y) {
  if (!x.component().same_as(y.component())) throw SpaceMismatch();
  if (x.laterality() != y.laterality()) throw LateralityMismatch();
  FinSuppSeq out = x;
  for (const auto& [pos, v] : y.support()) out.add_at(pos, v);
  return out;
}

FinSuppSeq operator*(const Elem& a, const FinSuppSeq& x) {
  FinSuppSeq out(x.component(), x.laterality());
  for (const auto& [pos, v] : x.support())
    out.add_at(pos, VecE(v.unaryExpr([&](const Elem& e) { return a * e; })));
  return out;
}

Laterality laterality_of(LazyKind kind) {
  return kind == LazyKind::sznagy ? Laterality::bilateral : Laterality::unilateral;
}

namespace {

void check_operand(const LazyBandedOp& op, const FinSuppSeq& x) {
  if (x.laterality() != laterality_of(op.kind)) throw LateralityMismatch();
  if (!x.component().same_as(op.generator.space)) throw SpaceMismatch();
}

}  // namespace

// Column view of the bilateral matrix: column 0 holds I+T at row -1 and T at
// row 0, column 1 holds T at row -1 and I+T at row 0, every other column p
// holds the identity at row p-1. The unilateral matrix puts T at (0,0), I+T
// at (1,0) and the identity at (p+1, p) for p >= 1.
FinSuppSeq lazy_apply(const LazyBandedOp& op, const FinSuppSeq& x) {
  check_operand(op, x);
  const MatE& t = op.generator.mat;
  const MatE mix = identity_matrix(op.generator.space.ring(), t.rows()) + t;  // I + T
  FinSuppSeq out(x.component(), x.laterality());
  for (const auto& [pos, v] : x.support()) {
    if (op.kind == LazyKind::sznagy) {
      if (pos == 0) {
        out.add_at(-1, VecE(mix * v));
        out.add_at(0, VecE(t * v));
      } else if (pos == 1) {
        out.add_at(-1, VecE(t * v));
        out.add_at(0, VecE(mix * v));
      } else {
        out.add_at(pos - 1, v);
      }
    } else {
      if (pos == 0) {
        out.add_at(0, VecE(t * v));
        out.add_at(1, VecE(mix * v));
      } else {
        out.add_at(pos + 1, v);
      }
    }
  }
  return out;
}

// Adjoint rules, transposed blockwise (T and I+T are self-adjoint): bilateral
// column -1 feeds I+T into row 0 and T into row 1, column 0 feeds T into row 0
// and I+T into row 1, other columns p feed the identity into row p+1. The
// unilateral adjoint reads (U*x)_0 = T x_0 + (I+T) x_1 and shifts the rest down.
FinSuppSeq lazy_apply_adjoint(const LazyBandedOp& op, const FinSuppSeq& x) {
  check_operand(op, x);
  const MatE& t = op.generator.mat;
  const MatE mix = identity_matrix(op.generator.space.ring(), t.rows()) + t;
  FinSuppSeq out(x.component(), x.laterality());
  for (const auto& [pos, v] : x.support()) {
    if (op.kind == LazyKind::sznagy) {
      if (pos == -1) {
        out.add_at(0, VecE(mix * v));
        out.add_at(1, VecE(t * v));
      } else if (pos == 0) {
        out.add_at(0, VecE(t * v));
        out.add_at(1, VecE(mix * v));
      } else {
        out.add_at(pos + 1, v);
      }
    } else {
      if (pos == 0) {
        out.add_at(0, VecE(t * v));
      } else if (pos == 1) {
        out.add_at(0, VecE(mix * v));
      } else {
        out.add_at(pos - 1, v);
      }
    }
  }
  return out;
}

namespace {

Operator compress_by_probes(const LazyBandedOp& op, int n, bool adjoint_rule) {
  if (n < 1) throw Error("compress power must be >= 1");
  const Space& s = op.generator.space;
  MatE cols = zero_matrix(s.ring(), s.dim(), s.dim());
  for (Index j = 0; j < s.dim(); ++j) {
    FinSuppSeq seq = delta_seq(s, 0, unit_vec(s.ring(), s.dim(), j), laterality_of(op.kind));
    for (int i = 0; i < n; ++i)
      seq = adjoint_rule ? lazy_apply_adjoint(op, seq) : lazy_apply(op, seq);
    cols.col(j) = seq.at(0);
  }
  return Operator{s, cols};
}

}  // namespace

Operator lazy_compress_power(const LazyBandedOp& op, int n) {
  return compress_by_probes(op, n, false);
}

Operator lazy_compress_adjoint_power(const LazyBandedOp& op, int n) {
  return compress_by_probes(op, n, true);
}

}  // namespace iipm
