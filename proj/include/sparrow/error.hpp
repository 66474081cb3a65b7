#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sparrow {

// Argument outside the mathematical domain of an operation (pixel out of
// range, negative sigma, even kernel, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Structurally invalid input: non-permutation plans, mismatched masks,
// incompatible plan conventions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Problem too large for an exact method.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Scenario document could not be parsed. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A parsed value violates a Scenario invariant. field() is the dotted path,
// e.g. "weeds[0].radius".
class InvariantError : public std::runtime_error {
 public:
  InvariantError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// The row segmentation produced no foreground to fit a row to.
class NoRowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sparrow
