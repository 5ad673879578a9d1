#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wwgm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binary operation on operator polynomials with different central commutators.
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class VarPairMismatch : public Error {
 public:
  using Error::Error;
};

// Complex conjugation requested on a Scalar that still carries a formal
// ordering parameter.
class ConjugationUndefined : public Error {
 public:
  using Error::Error;
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class SymbolicScalar : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace wwgm
