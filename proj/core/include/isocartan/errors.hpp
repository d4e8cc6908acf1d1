// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISOCARTAN_ERRORS_HPP
#define ISOCARTAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isocartan {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A scalar kernel was evaluated at one of its poles.
struct PoleError : Error {
  using Error::Error;
};

/// A projection direction was the zero vector.
struct ZeroVectorError : Error {
  using Error::Error;
};

/// A solver window contained no focal radius.
struct EmptyWindowError : Error {
  using Error::Error;
};

/// An operation was applied to a model of the wrong ambient kind.
struct WrongAmbientError : Error {
  using Error::Error;
};

/// A requested shape-operator eigenvalue is not present in the model.
struct UnknownEigenvalueError : Error {
  using Error::Error;
};

/// The eigenvalue map was evaluated on a focal block, where it is undefined.
struct FocalBlockError : Error {
  using Error::Error;
};

/// The closed form is undefined at the boundary case |lambda| = sqrt(-mu).
struct CaseUndefinedError : Error {
  using Error::Error;
};

/// The focal lattice degenerates when its two generators coincide.
struct DegenerateLatticeError : Error {
  using Error::Error;
};

/// Fixture parameters sit on a pole of the curvature spectrum.
struct PoleParamsError : Error {
  using Error::Error;
};

/// An input file or string could not be parsed.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace isocartan

#endif  // ISOCARTAN_ERRORS_HPP
