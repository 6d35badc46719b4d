#pragma once

#include <stdexcept>
#include <string>

namespace reginv {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Caller violated an API precondition (bad indices, mismatched fits, ...).
struct ContractError : Error {
  using Error::Error;
};

/// User-supplied data is unusable (CSV parse failure, header mismatch,
/// too few samples).
struct DataError : Error {
  using Error::Error;
};

/// Numerical degeneracy: singular design, non-invertible model, noiseless
/// residuals where a variance ratio is required.
struct NumericalError : Error {
  using Error::Error;
};

/// A combinatorial enumeration would exceed the configured cap.
struct EnumerationLimitError : Error {
  using Error::Error;
};

}  // namespace reginv
