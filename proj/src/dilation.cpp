#include "iipm/dilation.hpp"

namespace iipm {

const char* to_string(DilationKind kind) {
  switch (kind) {
    case DilationKind::halmos: return "halmos";
    case DilationKind::egervary: return "egervary";
    case DilationKind::sznagy: return "sznagy";
    case DilationKind::isometric: return "isometric";
  }
  return "?";
}

std::optional<DilationKind> dilation_kind_from_string(const std::string& name) {
  if (name == "halmos") return DilationKind::halmos;
  if (name == "egervary") return DilationKind::egervary;
  if (name == "sznagy") return DilationKind::sznagy;
  if (name == "isometric") return DilationKind::isometric;
  return std::nullopt;
}

namespace {

void require_self_adjoint(const Operator& t) {
  if (!is_self_adjoint(t)) throw NotSelfAdjoint();
}

}  // namespace

Operator halmos_dilate(const Operator& t) { return egervary_dilate(t, 1); }

Operator egervary_dilate(const Operator& t, int n) {
  require_self_adjoint(t);
  if (n < 1) throw Error("egervary dilation needs N >= 1");
  const Space& s = t.space;
  const Index d = s.dim();
  const Space big = direct_sum(s, n + 1);
  const MatE mix = identity_matrix(s.ring(), d) + t.mat;  // I + T

  MatE u = zero_matrix(s.ring(), d * (n + 1), d * (n + 1));
  u.block(0, 0, d, d) = t.mat;
  u.block(0, n * d, d, d) = mix;
  u.block(d, 0, d, d) = mix;
  u.block(d, n * d, d, d) = t.mat;
  for (int r = 2; r <= n; ++r) u.block(r * d, (r - 1) * d, d, d) = identity_matrix(s.ring(), d);
  return Operator{big, std::move(u)};
}

LazyBandedOp sznagy_dilate(const Operator& t) {
  require_self_adjoint(t);
  return LazyBandedOp{t, LazyKind::sznagy};
}

LazyBandedOp isometric_sznagy_dilate(const Operator& t) {
  require_self_adjoint(t);
  return LazyBandedOp{t, LazyKind::isometric};
}

bool DilationReport::ok() const {
  if (!(kind == DilationKind::isometric ? isometry_ok : unitary_ok)) return false;
  // Halmos guarantees the first power, Egervary the first N; the lazy kinds
  // guarantee every power.
  const int binding_limit = kind == DilationKind::halmos     ? 1
                            : kind == DilationKind::egervary ? egervary_n
                                                             : int(power_checks.size());
  for (const auto& pc : power_checks)
    if (pc.power <= binding_limit && !pc.holds) return false;
  for (const auto& pc : adjoint_power_checks)
    if (pc.power <= binding_limit && !pc.holds) return false;
  return true;
}

bool DilationReport::power_holds(int power) const {
  for (const auto& pc : power_checks)
    if (pc.power == power) return pc.holds;
  return false;
}

namespace {

void note_witness(DilationReport& report, const std::string& text) {
  if (!report.witness) report.witness = text;
}

/// Unitarity certificate for a lazy operator: U*U and UU* fix every
/// singly-supported basis sequence in the window. Linearity and band
/// radius 1 extend this to every sequence supported inside the window.
void verify_lazy(const Operator& t, DilationKind kind, const VerifyOptions& opt,
                 DilationReport& report) {
  const LazyBandedOp op =
      kind == DilationKind::sznagy ? sznagy_dilate(t) : isometric_sznagy_dilate(t);
  const Space& s = t.space;
  const int w = opt.window;
  const int lo = kind == DilationKind::sznagy ? -w : 0;

  bool isometry_ok = true;
  bool counitary_ok = true;  // U U* = I as well
  for (int pos = lo; pos <= w; ++pos) {
    for (Index j = 0; j < s.dim(); ++j) {
      const FinSuppSeq probe =
          delta_seq(s, pos, unit_vec(s.ring(), s.dim(), j), laterality_of(op.kind));
      if (lazy_apply_adjoint(op, lazy_apply(op, probe)) != probe) {
        isometry_ok = false;
        note_witness(report, "U*U probe failed at position " + std::to_string(pos));
      }
      if (lazy_apply(op, lazy_apply_adjoint(op, probe)) != probe) {
        counitary_ok = false;
        if (kind == DilationKind::sznagy)
          note_witness(report, "UU* probe failed at position " + std::to_string(pos));
      }
    }
  }
  report.isometry_ok = isometry_ok;
  report.unitary_ok = isometry_ok && counitary_ok;

  const int max_power = opt.max_power > 0 ? opt.max_power : 8;
  const Operator tadj = adjoint(t);
  for (int p = 1; p <= max_power; ++p) {
    const bool holds = lazy_compress_power(op, p) == op_pow(t, unsigned(p));
    report.power_checks.push_back({p, holds});
    if (!holds) note_witness(report, "compress power " + std::to_string(p) + " != T^" +
                                         std::to_string(p));
    const bool adj_holds =
        lazy_compress_adjoint_power(op, p) == op_pow(tadj, unsigned(p));
    report.adjoint_power_checks.push_back({p, adj_holds});
    if (!adj_holds)
      note_witness(report, "adjoint compress power " + std::to_string(p) + " != (T*)^" +
                               std::to_string(p));
  }
}

void verify_finite(const Operator& t, DilationKind kind, const VerifyOptions& opt,
                   DilationReport& report) {
  const int n = kind == DilationKind::halmos ? 1 : opt.egervary_n;
  const Operator u = egervary_dilate(t, n);
  const OperatorClass cls = classify(u);
  report.unitary_ok = cls.unitary;
  report.isometry_ok = cls.isometry;
  if (!cls.unitary) note_witness(report, "U is not unitary");

  int max_power = opt.max_power > 0 ? opt.max_power : (kind == DilationKind::halmos ? 1 : n + 1);
  if (kind == DilationKind::egervary) max_power = std::max(max_power, n + 1);
  const Operator uadj = adjoint(u);
  const Operator tadj = adjoint(t);
  const Index d = t.space.dim();
  for (int p = 1; p <= max_power; ++p) {
    const std::string beyond = p > n ? " (beyond the guaranteed range)" : "";
    const bool holds = compress(op_pow(u, unsigned(p)), 0, d) == op_pow(t, unsigned(p));
    report.power_checks.push_back({p, holds});
    if (!holds)
      note_witness(report,
                   "compress(U^" + std::to_string(p) + ") != T^" + std::to_string(p) + beyond);
    const bool adj_holds =
        compress(op_pow(uadj, unsigned(p)), 0, d) == op_pow(tadj, unsigned(p));
    report.adjoint_power_checks.push_back({p, adj_holds});
    if (!adj_holds)
      note_witness(report, "compress((U*)^" + std::to_string(p) + ") != (T*)^" +
                               std::to_string(p) + beyond);
  }
}

}  // namespace

DilationReport verify_dilation(const Operator& t, DilationKind kind,
                               const VerifyOptions& options) {
  DilationReport report;
  report.kind = kind;
  report.egervary_n = kind == DilationKind::egervary ? options.egervary_n
                      : kind == DilationKind::halmos ? 1
                                                     : 0;
  if (kind == DilationKind::halmos || kind == DilationKind::egervary)
    verify_finite(t, kind, options, report);
  else
    verify_lazy(t, kind, options, report);
  return report;
}

}  // namespace iipm
