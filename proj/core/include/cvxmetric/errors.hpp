#pragma once

#include <stdexcept>
#include <string>

namespace cvxmetric {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/* Input shapes disagree (point vs body dimension, matrix vs vector, ...). */
class DimensionError : public Error {
 public:
  using Error::Error;
};

/* A point required to be strictly interior is not. */
class NotInteriorError : public Error {
 public:
  using Error::Error;
};

/* A finite ray-exit value landed within the guard band above 1. */
class NearBoundaryError : public Error {
 public:
  using Error::Error;
};

/* A boundary point was requested along a recession direction. */
class UnboundedDirectionError : public Error {
 public:
  using Error::Error;
};

/* The chord through a pair never leaves the body. */
class UnboundedChordError : public Error {
 public:
  using Error::Error;
};

class PivotLimitError : public Error {
 public:
  using Error::Error;
};

class SamplingError : public Error {
 public:
  using Error::Error;
};

class GeneratorError : public Error {
 public:
  using Error::Error;
};

/* A function evaluation fell outside its declared range. */
class RangeViolation : public Error {
 public:
  using Error::Error;
};

/* Subgradient requested where the floor clamp is active. */
class ClampedPointError : public Error {
 public:
  using Error::Error;
};

}  // namespace cvxmetric
