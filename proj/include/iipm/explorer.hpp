#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iipm/dilation.hpp"

namespace iipm {

/// Visits every operator with adjoint(T) = T, each exactly once, in
/// lexicographic order on the row-major entry masks. Requires a field with at
/// most 16 elements and |ring|^(d^2) <= 2^24.
void for_each_self_adjoint(const Space& s, const std::function<void(const Operator&)>& fn);
std::vector<Operator> enumerate_self_adjoint(const Space& s);

struct CensusRow {
  std::string ring_id;
  int dim = 0;
  std::string gram_id;
  std::string operator_id;
  bool halmos_ok = false;
  bool egervary_ok = false;
  bool sznagy_ok = false;
  bool isometric_ok = false;
  /// Whether the Egervary identity at N = max_n accidentally extends to N+1.
  bool egervary_n1_holds = false;

  bool all_theorems_ok() const { return halmos_ok && egervary_ok && sznagy_ok && isometric_ok; }
};

/// Runs every dilation verification on every self-adjoint operator of the
/// space: Egervary at each N = 1..max_n, the lazy kinds up to max_power.
std::vector<CensusRow> exhaustive_verify(const Space& s, int max_n, int max_power);

/// CSV with header ring,dim,gram,operator,halmos,egervary,sznagy,isometric,egervary_n1;
/// rows sorted.
std::string census_csv(std::vector<CensusRow> rows);

struct AndoResult {
  Operator t1, t2;
  bool found = false;
  std::optional<std::pair<Operator, Operator>> witness;
  uint64_t search_space = 0;  ///< candidate dilations enumerated
};

/// Brute-force search for commuting unitaries on the Halmos-size space
/// (dimension 2d) with prescribed top-left corners T1 and T2. An existence
/// certificate only; exhausting the space proves nothing beyond this shape.
AndoResult ando_search(const Operator& t1, const Operator& t2,
                       uint64_t budget = uint64_t(1) << 22);

/// Re-checks a found witness through classify/compress, independently of the
/// search path.
bool ando_verify(const AndoResult& result);

}  // namespace iipm
