#pragma once

#include <stdexcept>
#include <string>

namespace h8mp {

struct ZeroInverse : std::domain_error {
  ZeroInverse() : std::domain_error("inverse of zero field element") {}
};

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what)
      : std::invalid_argument("dimension mismatch: " + what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what)
      : std::runtime_error("parse error: " + what) {}
};

struct RewriteNonConfluent : std::logic_error {
  explicit RewriteNonConfluent(const std::string& what)
      : std::logic_error("rewrite inconsistency: " + what) {}
};

struct IsoVerificationFailed : std::logic_error {
  explicit IsoVerificationFailed(const std::string& what)
      : std::logic_error("iso verification failed: " + what) {}
};

struct NoSolution : std::runtime_error {
  explicit NoSolution(const std::string& what)
      : std::runtime_error("no solution: " + what) {}
};

struct BadParams : std::invalid_argument {
  explicit BadParams(const std::string& what)
      : std::invalid_argument("bad parameters: " + what) {}
};

struct IllDefined : std::logic_error {
  explicit IllDefined(const std::string& what)
      : std::logic_error("bilinear form extension ill-defined: " + what) {}
};

struct InconsistentSituation : std::logic_error {
  explicit InconsistentSituation(const std::string& what)
      : std::logic_error("situation propagation inconsistent: " + what) {}
};

struct NotRefuted : std::logic_error {
  explicit NotRefuted(const std::string& what)
      : std::logic_error("refutation did not close: " + what) {}
};

struct IncompleteClassification : std::runtime_error {
  explicit IncompleteClassification(const std::string& what)
      : std::runtime_error("classification incomplete: " + what) {}
};

struct SingularMatrix : std::domain_error {
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

}  // namespace h8mp
