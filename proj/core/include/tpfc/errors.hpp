#pragma once

#include <stdexcept>
#include <string>

namespace tpfc {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid algorithm configuration, including algorithm/knowledge kind mismatches.
class InvalidConfigError : public Error {
 public:
  using Error::Error;
};

/// Shape or length mismatch between operands.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Data unfit for the requested operation (too few distinct points,
/// all-zero membership rows, coincident prototypes).
class DegenerateDataError : public Error {
 public:
  using Error::Error;
};

/// Numeric failure: non-finite inputs, matrices that are not PSD, etc.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// File system or file content failure; message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed experiment configuration; message lists the offending fields.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace tpfc
