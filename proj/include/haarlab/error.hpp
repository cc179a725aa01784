#pragma once

#include <stdexcept>
#include <string>

namespace haarlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class ScaleExceeded : public Error {
 public:
  using Error::Error;
};

class OrderExceedsCap : public Error {
 public:
  using Error::Error;
};

class NodeBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidConnectionSet : public Error {
 public:
  using Error::Error;
};

class ActionNotWellDefined : public Error {
 public:
  using Error::Error;
};

class NotAnEdge : public Error {
 public:
  using Error::Error;
};

}  // namespace haarlab
