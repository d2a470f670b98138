#pragma once

#include <stdexcept>
#include <string>

namespace lslab {

// Typed errors named after the conditions they report. All carry a message
// with the offending data so CLI diagnostics stay useful.
struct SingularForm : std::runtime_error {
  explicit SingularForm(const std::string& m) : std::runtime_error(m) {}
};
struct NotNegativeDefinite : std::runtime_error {
  explicit NotNegativeDefinite(const std::string& m) : std::runtime_error(m) {}
};
struct UnknownVertex : std::runtime_error {
  explicit UnknownVertex(const std::string& m) : std::runtime_error(m) {}
};
struct BadDecomposition : std::runtime_error {
  explicit BadDecomposition(const std::string& m) : std::runtime_error(m) {}
};
struct NotRational : std::runtime_error {
  explicit NotRational(const std::string& m) : std::runtime_error(m) {}
};
struct InvalidNewtonPairs : std::runtime_error {
  explicit InvalidNewtonPairs(const std::string& m) : std::runtime_error(m) {}
};
struct NonAlgebraicConfiguration : std::runtime_error {
  explicit NonAlgebraicConfiguration(const std::string& m) : std::runtime_error(m) {}
};
struct InexactDivision : std::runtime_error {
  explicit InexactDivision(const std::string& m) : std::runtime_error(m) {}
};
struct NormalizationMismatch : std::runtime_error {
  explicit NormalizationMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& m) : std::runtime_error(m) {}
};
struct InconsistentSemigroup : std::runtime_error {
  explicit InconsistentSemigroup(const std::string& m) : std::runtime_error(m) {}
};
struct StabilizationMissing : std::runtime_error {
  explicit StabilizationMissing(const std::string& m) : std::runtime_error(m) {}
};
struct TesterDisagreement : std::runtime_error {
  explicit TesterDisagreement(const std::string& m) : std::runtime_error(m) {}
};
struct EquivalenceViolation : std::runtime_error {
  explicit EquivalenceViolation(const std::string& m) : std::runtime_error(m) {}
};
struct BoundViolated : std::runtime_error {
  explicit BoundViolated(const std::string& m) : std::runtime_error(m) {}
};
struct NotParallel : std::runtime_error {
  explicit NotParallel(const std::string& m) : std::runtime_error(m) {}
};
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace lslab
