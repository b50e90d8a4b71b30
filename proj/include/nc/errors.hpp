#pragma once

#include <stdexcept>
#include <string>

namespace nc {

// Base class for all toolkit errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched generator sets, basis shapes or block dimensions.
class dimension_error : public error {
 public:
  using error::error;
};

// An operation explicitly required an invertible matrix and did not get one.
class singular_error : public error {
 public:
  using error::error;
};

// Domain violations: non-hermitian input, non-unitary conjugation,
// non-positive-definite quadratic form, parameters out of range.
class domain_error : public error {
 public:
  using error::error;
};

// The requested Fock truncation cannot carry the object. Carries the largest
// cutoff that would have been admissible.
class truncation_error : public error {
 public:
  truncation_error(const std::string& what, int max_cutoff)
      : error(what), max_cutoff_(max_cutoff) {}
  int max_cutoff() const noexcept { return max_cutoff_; }

 private:
  int max_cutoff_;
};

// Malformed symbol text or input file. `position` is a byte offset into the
// offending text (0-based), or npos when unknown.
class parse_error : public error {
 public:
  explicit parse_error(const std::string& what,
                       std::size_t position = std::string::npos)
      : error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace nc
