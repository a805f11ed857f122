#pragma once

#include <stdexcept>
#include <string>

namespace slicecalc {

// Error categories, used by the CLI to map failures onto exit codes:
// input errors -> 2, numeric failures -> 3, calculus preconditions -> 4.
enum class ErrorKind {
  Input,
  Numeric,
  Precondition,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), kind_(kind), name_(std::move(name)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

private:
  ErrorKind kind_;
  std::string name_;
};

#define SLICECALC_ERROR(NAME, KIND)                                       \
  class NAME : public Error {                                             \
  public:                                                                 \
    explicit NAME(const std::string& what) : Error(KIND, #NAME, what) {}  \
  }

SLICECALC_ERROR(ParseError, ErrorKind::Input);
SLICECALC_ERROR(DimensionMismatch, ErrorKind::Input);

SLICECALC_ERROR(Singular, ErrorKind::Numeric);
SLICECALC_ERROR(EigenFailure, ErrorKind::Numeric);
SLICECALC_ERROR(ConvergenceFailure, ErrorKind::Numeric);
SLICECALC_ERROR(ZeroInput, ErrorKind::Numeric);

SLICECALC_ERROR(OutOfDomain, ErrorKind::Precondition);
SLICECALC_ERROR(SideMismatch, ErrorKind::Precondition);
SLICECALC_ERROR(ZeroDivisor, ErrorKind::Precondition);
SLICECALC_ERROR(ConditionViolated, ErrorKind::Precondition);
SLICECALC_ERROR(OnSpectrum, ErrorKind::Precondition);
SLICECALC_ERROR(OnSpectrumSphere, ErrorKind::Precondition);
SLICECALC_ERROR(SphereCollision, ErrorKind::Precondition);
SLICECALC_ERROR(PathHitsSpectrum, ErrorKind::Precondition);
SLICECALC_ERROR(DomainTooSmall, ErrorKind::Precondition);
SLICECALC_ERROR(NotTypeOmega, ErrorKind::Precondition);
SLICECALC_ERROR(NotInPsiClass, ErrorKind::Precondition);
SLICECALC_ERROR(NotInFClass, ErrorKind::Precondition);
SLICECALC_ERROR(NotPsiPlus, ErrorKind::Precondition);
SLICECALC_ERROR(PoleOnSpectrum, ErrorKind::Precondition);
SLICECALC_ERROR(RegularizerSingular, ErrorKind::Precondition);
SLICECALC_ERROR(DefectiveMatrix, ErrorKind::Precondition);
SLICECALC_ERROR(HypothesisFailed, ErrorKind::Precondition);

#undef SLICECALC_ERROR

}  // namespace slicecalc
