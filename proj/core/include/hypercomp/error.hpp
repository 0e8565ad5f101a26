#pragma once

#include <stdexcept>
#include <string>

namespace hypercomp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands over different coefficient domains or variable counts.
struct DomainMismatch : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// A coefficient has no image in the requested finite field.
struct NotEmbeddable : Error {
  using Error::Error;
};

// Term ceiling, enumeration bound or exponent range exceeded. Distinct from a
// failed check: the computation was abandoned, not refuted.
struct ResourceLimit : Error {
  using Error::Error;
};

}  // namespace hypercomp
