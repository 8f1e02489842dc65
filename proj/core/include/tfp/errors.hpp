#pragma once

#include <stdexcept>
#include <string>

namespace tfp {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class RingMismatch : public Error {
 public:
  explicit RingMismatch(const std::string& what) : Error("ring mismatch: " + what) {}
};

class Inhomogeneous : public Error {
 public:
  explicit Inhomogeneous(const std::string& what) : Error("inhomogeneous: " + what) {}
};

class ZeroPolynomial : public Error {
 public:
  explicit ZeroPolynomial(const std::string& what) : Error("zero polynomial: " + what) {}
};

class MissingCertificate : public Error {
 public:
  explicit MissingCertificate(const std::string& what)
      : Error("missing positivity certificate: " + what) {}
};

class NoPositivityCertificate : public Error {
 public:
  explicit NoPositivityCertificate(const std::string& what)
      : Error("no positivity certificate: " + what) {}
};

class DependentGrading : public Error {
 public:
  explicit DependentGrading(const std::string& what)
      : Error("dependent grading: " + what) {}
};

class MixedMonomial : public Error {
 public:
  explicit MixedMonomial(const std::string& what) : Error("mixed monomial: " + what) {}
};

class NotMonomialMap : public Error {
 public:
  explicit NotMonomialMap(const std::string& what)
      : Error("not a monomial map: " + what) {}
};

class InvalidSplit : public Error {
 public:
  explicit InvalidSplit(const std::string& what) : Error("invalid split: " + what) {}
};

class NoInteriorEdge : public Error {
 public:
  explicit NoInteriorEdge(const std::string& what) : Error("no interior edge: " + what) {}
};

class NonIntervalDescendants : public Error {
 public:
  explicit NonIntervalDescendants(const std::string& what)
      : Error("descendant set is not an interval: " + what) {}
};

class BadSize : public Error {
 public:
  explicit BadSize(const std::string& what) : Error("bad size: " + what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("config error: " + what) {}
};

}  // namespace tfp
