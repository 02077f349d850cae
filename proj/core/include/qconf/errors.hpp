// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCONF_ERRORS_HPP_
#define QCONF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qconf {

// Root of the library's exception hierarchy.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed arguments: length mismatches, empty sets, out-of-domain values.
struct InvalidOperandError : Error {
  using Error::Error;
};

// A requested basis contains a non-orthogonal (colliding) pair.
struct DegeneracyError : Error {
  using Error::Error;
};

// State lies outside the span of the measurement basis.
struct SpanError : Error {
  using Error::Error;
};

// Codebook structural validation failed; the codebook is unusable.
struct ValidationError : Error {
  using Error::Error;
};

// Decode inconsistency: announcements incompatible with any message tuple.
struct IntegrityError : Error {
  using Error::Error;
};

// Unreadable or ill-formed configuration input.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace qconf

#endif  // QCONF_ERRORS_HPP_
