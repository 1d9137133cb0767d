/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CSCC_ERRORS_HPP_
#define CSCC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cscc {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// A generator produced a complex that fails its own validators.
struct ConstructionError : Error {
  using Error::Error;
};

/// A caller violated an operation precondition (bad extent, empty region, ...).
struct PreconditionError : Error {
  using Error::Error;
};

/// Operand sizes do not match.
struct DimensionError : Error {
  using Error::Error;
};

/// The qubit adjacency graph admits no two-coloring.
struct NotBipartiteError : Error {
  using Error::Error;
};

/// An enumeration bound (statevector size, ...) was exceeded.
struct BoundError : Error {
  using Error::Error;
};

/// A diagonal layer does not preserve the codespace where it must.
struct CodespaceError : Error {
  using Error::Error;
};

/// A commutator-derived operator is not in its asserted coset.
struct MembershipError : Error {
  using Error::Error;
};

/// Malformed serialized input.
struct ParseError : Error {
  using Error::Error;
};

/// Unknown fixture name.
struct UnknownFixtureError : Error {
  using Error::Error;
};

}  // namespace cscc

#endif  // CSCC_ERRORS_HPP_
