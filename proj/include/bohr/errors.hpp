#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain (x >= 1, p out of range, bad family).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Geometric kernel x/(1-x^m) reached 1; the series defining F diverges.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// The defining function never changed sign on the scanned interval.
class NoSignChangeError : public Error {
 public:
  using Error::Error;
};

// F's domain ended before any sign change was found.
class UndefinedRegionError : public Error {
 public:
  using Error::Error;
};

// A coefficient series could not be truncated to the requested tail bound.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature did not stabilise.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Sharpness probe requested outside the admissible radius range.
class ProbeDomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace bohr
