#pragma once

#include <stdexcept>
#include <string>

namespace iipm {

/// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidModulus : public Error {
 public:
  InvalidModulus() : Error("modulus does not have the declared degree") {}
  using Error::Error;
};

class ReducibleModulus : public Error {
 public:
  ReducibleModulus() : Error("modulus is reducible over GF(2)") {}
  using Error::Error;
};

class InvalidStar : public Error {
 public:
  InvalidStar() : Error("frobenius involution requires a field of even degree k with exponent k/2") {}
  using Error::Error;
};

class MaskOutOfRange : public Error {
 public:
  MaskOutOfRange() : Error("element mask has bits at positions >= k") {}
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  NotAUnit() : Error("element has no multiplicative inverse") {}
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("elements belong to different rings") {}
  using Error::Error;
};

class GramNotHermitian : public Error {
 public:
  GramNotHermitian() : Error("gram matrix is not equal to its star-transpose") {}
  using Error::Error;
};

class GramSingular : public Error {
 public:
  GramSingular() : Error("gram matrix is not invertible") {}
  using Error::Error;
};

class SpaceMismatch : public Error {
 public:
  SpaceMismatch() : Error("operands live in different spaces") {}
  using Error::Error;
};

class NotSelfAdjoint : public Error {
 public:
  NotSelfAdjoint() : Error("operator is not self-adjoint") {}
  using Error::Error;
};

class BadBlockIndex : public Error {
 public:
  BadBlockIndex() : Error("block index or block dimension out of range") {}
  using Error::Error;
};

class DuplicatePosition : public Error {
 public:
  DuplicatePosition() : Error("sequence has two entries at the same position") {}
  using Error::Error;
};

class NegativePosition : public Error {
 public:
  NegativePosition() : Error("unilateral sequence has an entry at a negative position") {}
  using Error::Error;
};

class LateralityMismatch : public Error {
 public:
  LateralityMismatch() : Error("sequence laterality does not match the operator") {}
  using Error::Error;
};

class SearchTooLarge : public Error {
 public:
  SearchTooLarge() : Error("search space exceeds the configured budget") {}
  using Error::Error;
};

/// Syntax error in the document format, with a 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace iipm
