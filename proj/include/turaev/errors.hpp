#pragma once

#include <stdexcept>
#include <string>

namespace turaev {

// Base of every exception thrown by the library. Input problems (bad text,
// bad files) derive from InputError; everything else is a mathematical
// precondition that did not hold for the supplied values.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NotProportional : public Error {
 public:
  using Error::Error;
};

class ZeroMu : public Error {
 public:
  using Error::Error;
};

class NotAKnot : public Error {
 public:
  using Error::Error;
};

class DimensionCapExceeded : public Error {
 public:
  using Error::Error;
};

// Raised when an evaluator is forced onto an operator of the wrong shape
// (product formula on a non-scalar R, wire formula on a non-swap R, ...).
class FormMismatch : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public FormMismatch {
 public:
  using FormMismatch::FormMismatch;
};

}  // namespace turaev
