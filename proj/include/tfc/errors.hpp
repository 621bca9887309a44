#pragma once

#include <stdexcept>
#include <string>

namespace tfc {

// Every error raised by the library derives from tfc::Error so callers (the
// CLI in particular) can map failures onto exit codes in one place.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: wrong curve family, non-prime modulus, empty history...
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// m fails the cube-free / {0,+-1,+-2} gate.
class InadmissibleError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// ord_p(0).
class UndefinedValuationError : public Error {
 public:
  using Error::Error;
};

// A rational map evaluated on its exceptional locus (x = 0 for the cubic
// transform, kernel of the isogeny, vanishing triplication denominator).
class SingularMapError : public Error {
 public:
  using Error::Error;
};

// nP hit the identity where an affine point was required.
class TorsionError : public Error {
 public:
  using Error::Error;
};

class PrecisionError : public Error {
 public:
  using Error::Error;
};

// A bound whose hypotheses do not hold for the given input.
class BoundUnavailableError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A required data file is absent or unreadable.
class DataMissingError : public Error {
 public:
  using Error::Error;
};

}  // namespace tfc
