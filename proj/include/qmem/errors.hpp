#pragma once

#include <stdexcept>
#include <string>

namespace qmem {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid physical parameter (nonpositive wavenumber, x <= 0, zero coupling, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Zero-vector passed where a normalizable state was required.
class NormalizationError : public Error {
  public:
    using Error::Error;
};

/// Matrix fails the unitarity check.
class UnitaryError : public Error {
  public:
    using Error::Error;
};

/// A rotation angle cannot be realized under the configured wavenumber bounds.
class SchedulingError : public Error {
  public:
    using Error::Error;
};

/// Interference readout is ill-conditioned or lacks data.
class ReadoutError : public Error {
  public:
    using Error::Error;
};

/// Observables are inconsistent with any quantum state.
class ObservablesError : public Error {
  public:
    using Error::Error;
};

/// Protocol precondition violated (e.g. writing onto a non-reset memory).
class ProtocolError : public Error {
  public:
    using Error::Error;
};

/// Numerical verification could not be carried out.
class SolverError : public Error {
  public:
    using Error::Error;
};

/// Malformed or out-of-contract document (state file, schedule, report).
class FormatError : public Error {
  public:
    using Error::Error;
};

} // namespace qmem
