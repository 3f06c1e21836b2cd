#pragma once

#include <stdexcept>
#include <string>

namespace supraclust {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A node, layer, or flat index outside its valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Input for which the requested quantity is undefined (all-zero network
// under normalization, fewer than two entities, ...).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// A network that violates the model invariants (negative weights, intra-layer
// self-loops, duplicate labels, wrong order).
class InvalidNetworkError : public Error {
 public:
  using Error::Error;
};

// Brute-force routines refuse inputs beyond their size guard.
class OversizeError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class DuplicateError : public Error {
 public:
  using Error::Error;
};

class EmptyNetworkError : public Error {
 public:
  using Error::Error;
};

}  // namespace supraclust
