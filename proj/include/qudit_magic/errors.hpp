#ifndef QUDIT_MAGIC_ERRORS_HPP_
#define QUDIT_MAGIC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qudit_magic {

class CutoffExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonIntegerResult : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No non-Clifford member of the gate family exists for the requested (d, m).
class EmptyGateSet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoRoot : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qudit_magic

#endif  // QUDIT_MAGIC_ERRORS_HPP_
