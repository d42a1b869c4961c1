#pragma once

#include <stdexcept>
#include <string>

namespace cdgmf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad shapes or mismatched operands: the caller handed us malformed data.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

// A map on generators that does not send relations into relations.
class IllDefinedMap : public Error {
 public:
  using Error::Error;
};

// d^2 differs from the curvature; `composite` names the failing product.
class CurvatureMismatch : public Error {
 public:
  CurvatureMismatch(const std::string& composite, const std::string& detail)
      : Error("curvature mismatch in " + composite + ": " + detail), composite_(composite) {}
  const std::string& composite() const { return composite_; }

 private:
  std::string composite_;
};

class NonClosedMorphism : public Error {
 public:
  using Error::Error;
};

// Something that is a theorem over k[x] failed to hold. Never expected to fire.
class InternalAssertionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace cdgmf
