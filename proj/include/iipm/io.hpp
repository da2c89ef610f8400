#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iipm/operator.hpp"

namespace iipm {

/// Parsed form of the line-oriented document format:
///
///   %IIPM v1
///   ring gf2k k=<int> modulus=<hex> star=<identity|frobenius:<m>>
///   space dim=<d>
///   gram
///   <d lines of d hex elements>
///   operator name=<ident>
///   <d lines of d hex elements>
///
/// The space block is optional; without one, the first operator block fixes
/// the dimension and the gram defaults to the identity.
struct Document {
  Ring ring;
  std::optional<Space> space;
  std::vector<std::pair<std::string, Operator>> operators;

  const Operator* find(const std::string& name) const;
};

bool operator==(const Document& a, const Document& b);

Document parse_document(std::istream& in);
Document parse_document(const std::string& text);
std::string serialize_document(const Document& doc);

/// Payload of the ring directive, e.g. "gf2k k=2 modulus=7 star=frobenius:1".
std::string ring_directive(Ring r);
/// Compact comma-free id for CSV output, e.g. "gf2k_k2_m7_sf1".
std::string ring_csv_id(Ring r);
/// Row-major hex entries joined with '.', e.g. "1.0.0.1".
std::string mat_csv_id(const MatE& m);

}  // namespace iipm
