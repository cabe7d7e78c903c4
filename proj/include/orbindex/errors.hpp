#pragma once

#include <stdexcept>
#include <string>

namespace orbindex {

// Base class for all failure conditions with a contract name.
// The CLI maps these onto exit codes (verification alarms -> 2, bad input -> 3).
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("DivisionByZero") {}
};

struct NotRational : Error {
  explicit NotRational(const std::string& detail)
      : Error("NotRational: " + detail) {}
};

struct NonIntegral : Error {
  explicit NonIntegral(const std::string& detail)
      : Error("NonIntegral: " + detail) {}
};

struct SingularSeries : Error {
  explicit SingularSeries(const std::string& detail)
      : Error("SingularSeries: " + detail) {}
};

struct UnsupportedTwist : Error {
  explicit UnsupportedTwist(const std::string& detail)
      : Error("UnsupportedTwist: " + detail) {}
};

struct UnsupportedParams : Error {
  explicit UnsupportedParams(const std::string& detail)
      : Error("UnsupportedParams: " + detail) {}
};

struct UnsupportedModel : Error {
  explicit UnsupportedModel(const std::string& detail)
      : Error("UnsupportedModel: " + detail) {}
};

struct ValidationFailure : Error {
  explicit ValidationFailure(const std::string& detail)
      : Error("ValidationFailure: " + detail) {}
};

struct InvalidRepresentation : Error {
  explicit InvalidRepresentation(const std::string& detail)
      : Error("InvalidRepresentation: " + detail) {}
};

struct GroupingMismatch : Error {
  explicit GroupingMismatch(const std::string& detail)
      : Error("GroupingMismatch: " + detail) {}
};

struct TwistMismatch : Error {
  explicit TwistMismatch(const std::string& detail)
      : Error("TwistMismatch: " + detail) {}
};

struct ReconstructionFailure : Error {
  explicit ReconstructionFailure(const std::string& detail)
      : Error("ReconstructionFailure: " + detail) {}
};

struct BasisMismatch : Error {
  explicit BasisMismatch(const std::string& detail)
      : Error("BasisMismatch: " + detail) {}
};

struct OracleMismatch : Error {
  explicit OracleMismatch(const std::string& detail)
      : Error("OracleMismatch: " + detail) {}
};

struct OrderLimitExceeded : Error {
  explicit OrderLimitExceeded(const std::string& detail)
      : Error("OrderLimitExceeded: " + detail) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& detail)
      : Error("ParseError: " + detail) {}
};

}  // namespace orbindex
