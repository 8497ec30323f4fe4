#pragma once

#include <stdexcept>
#include <string>

namespace evosieve {

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- basis validation ---

class NotSquareError : public Error {
 public:
  using Error::Error;
};

class DimensionTooSmallError : public Error {
 public:
  using Error::Error;
};

// Some Gram-Schmidt norm vanished: the rows do not span a d-dimensional lattice.
class DependentRowsError : public Error {
 public:
  using Error::Error;
};

// --- point operations ---

class ZeroInputError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

// --- reduction ---

class InvalidDeltaError : public Error {
 public:
  using Error::Error;
};

// --- sampling / sieving ---

class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

// Too many rejected draws while filling a population: the sampler width is
// too small, or the population cap too large for the reachable region.
class SamplerStarvationError : public Error {
 public:
  using Error::Error;
};

// Internal: the fixed-width sieve engine saw a value outside its safe range.
// run_sieve catches this and replays the run with arbitrary-precision points.
class EngineRangeError : public Error {
 public:
  using Error::Error;
};

// --- analysis ---

class DimensionTooLargeError : public Error {
 public:
  using Error::Error;
};

// --- io ---

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace evosieve
