#pragma once

#include <stdexcept>
#include <string>

namespace oscwhit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define OSCWHIT_ERROR(name)                  \
  struct name : Error {                      \
    explicit name(const std::string& what)   \
        : Error(#name ": " + what) {}        \
  };

OSCWHIT_ERROR(PoleError)
OSCWHIT_ERROR(NotConverged)
OSCWHIT_ERROR(DomainError)
OSCWHIT_ERROR(NonStationaryPhase)
OSCWHIT_ERROR(DerivativeUnavailable)
OSCWHIT_ERROR(EndpointMismatch)
OSCWHIT_ERROR(DegenerateHessian)
OSCWHIT_ERROR(MultipleCriticalPoints)
OSCWHIT_ERROR(SpecFunOverflow)
OSCWHIT_ERROR(BranchDisagreement)
OSCWHIT_ERROR(UnsupportedIndex)
OSCWHIT_ERROR(UnsupportedCase)
OSCWHIT_ERROR(NonUnitary)
OSCWHIT_ERROR(NotPrimitive)
OSCWHIT_ERROR(UnknownType)
OSCWHIT_ERROR(DegenerateX)
OSCWHIT_ERROR(KappaRange)
OSCWHIT_ERROR(CalibrationError)
OSCWHIT_ERROR(UsageError)

#undef OSCWHIT_ERROR

}  // namespace oscwhit
