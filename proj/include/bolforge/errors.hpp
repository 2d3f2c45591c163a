#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bolforge {

class LoopError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text that does not have the shape of a Cayley table. `line()` is 1-based,
/// 0 when the problem is not tied to a single line.
class MalformedInput : public LoopError {
 public:
  MalformedInput(const std::string& what, std::size_t line)
      : LoopError(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NotLatinSquare : public LoopError {
 public:
  enum class Axis { Row, Column };
  NotLatinSquare(Axis axis, std::size_t index)
      : LoopError(std::string("not a Latin square: repeated symbol in ") +
                  (axis == Axis::Row ? "row " : "column ") +
                  std::to_string(index)),
        axis_(axis),
        index_(index) {}
  Axis axis() const { return axis_; }
  std::size_t index() const { return index_; }

 private:
  Axis axis_;
  std::size_t index_;
};

class NoIdentity : public LoopError {
 public:
  using LoopError::LoopError;
};

class IndexOutOfRange : public LoopError {
 public:
  IndexOutOfRange(std::size_t index, std::size_t order)
      : LoopError("element " + std::to_string(index) +
                  " out of range for loop of order " + std::to_string(order)) {}
};

/// x has distinct one-sided inverses: x * right = e and left * x = e.
class NoTwoSidedInverse : public LoopError {
 public:
  NoTwoSidedInverse(std::size_t element, std::size_t left, std::size_t right)
      : LoopError("element " + std::to_string(element) +
                  " has no two-sided inverse (left " + std::to_string(left) +
                  ", right " + std::to_string(right) + ")"),
        element_(element),
        left_(left),
        right_(right) {}
  std::size_t element() const { return element_; }
  std::size_t left_inverse() const { return left_; }
  std::size_t right_inverse() const { return right_; }

 private:
  std::size_t element_, left_, right_;
};

class NotASubloop : public LoopError {
 public:
  using LoopError::LoopError;
};

class NotAGroup : public LoopError {
 public:
  using LoopError::LoopError;
};

class EvenOrder : public LoopError {
 public:
  using LoopError::LoopError;
};

/// A constructed loop failed its own post-construction check. Always a bug.
class PostConstructionCheckFailed : public LoopError {
 public:
  using LoopError::LoopError;
};

class InvalidSearchSpec : public LoopError {
 public:
  using LoopError::LoopError;
};

class ManifestNotFound : public LoopError {
 public:
  using LoopError::LoopError;
};

}  // namespace bolforge
