#pragma once

#include <stdexcept>
#include <string>

namespace wqe {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input failed the Hermiticity check; message carries the measured asymmetry.
struct NotHermitianError : Error {
  using Error::Error;
};

// Input has a negative eigenvalue beyond tolerance.
struct NotPsdError : Error {
  using Error::Error;
};

// A scalar function was evaluated outside its domain (names the eigenvalue).
struct DomainError : Error {
  using Error::Error;
};

// Matrix dimension does not match the declared subsystem shape.
struct ShapeError : Error {
  using Error::Error;
};

// Two spectra that must agree (purification partners) do not.
struct SpectraMismatchError : Error {
  using Error::Error;
};

// Eigenvalue pairing would be ambiguous because of a degenerate spectrum.
struct PairingAmbiguousError : Error {
  using Error::Error;
};

// A numerical oracle failed to converge; never silently degraded.
struct OracleFailureError : Error {
  using Error::Error;
};

// Invalid campaign / CLI configuration.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace wqe
