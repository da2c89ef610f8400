#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iipm/seqspace.hpp"

namespace iipm {

enum class DilationKind { halmos, egervary, sznagy, isometric };

const char* to_string(DilationKind kind);
std::optional<DilationKind> dilation_kind_from_string(const std::string& name);

/// U = [[T, I+T], [I+T, T]] on V (+) V; unitary, self-inverse, compresses to T.
Operator halmos_dilate(const Operator& t);

/// The (N+1) x (N+1) block unitary whose k-th power compresses to T^k for
/// k = 1..N. Row 0 is [T, 0, .., 0, I+T], row 1 is [I+T, 0, .., 0, T], and
/// row r holds the identity at column r-1 for 2 <= r <= N.
Operator egervary_dilate(const Operator& t, int n);

/// Bilateral lazy unitary: compresses to T^n for every n >= 1.
LazyBandedOp sznagy_dilate(const Operator& t);

/// Unilateral lazy isometry: same compressions, not unitary in general.
LazyBandedOp isometric_sznagy_dilate(const Operator& t);

struct PowerCheck {
  int power = 0;
  bool holds = false;
};

struct DilationReport {
  DilationKind kind = DilationKind::halmos;
  int egervary_n = 0;  ///< the N parameter when kind == egervary
  bool unitary_ok = false;
  bool isometry_ok = false;
  /// For kind egervary these cover k = 1..N+1; the N+1 entry records whether
  /// the identity happens to extend past the guaranteed range.
  std::vector<PowerCheck> power_checks;
  std::vector<PowerCheck> adjoint_power_checks;
  std::optional<std::string> witness;  ///< first binding failure, if any

  /// True when every binding check holds. Power checks beyond N for the
  /// Egervary kind are informational and do not count against this.
  bool ok() const;
  /// True when the power check at the given exponent holds.
  bool power_holds(int power) const;
};

struct VerifyOptions {
  int egervary_n = 1;
  int max_power = 0;  ///< 0: kind default (1 for halmos, N+1 for egervary, 8 for lazy kinds)
  int window = 8;     ///< certification window for the lazy kinds
};

/// Builds the dilation and checks unitarity/isometry and all power
/// compressions as exact identities.
DilationReport verify_dilation(const Operator& t, DilationKind kind,
                               const VerifyOptions& options = {});

}  // namespace iipm
