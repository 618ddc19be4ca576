#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phinil {

// Base of every error raised by the library.
class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed group specification or unreadable input.
class InvalidSpec : public GroupError {
 public:
  using GroupError::GroupError;
};

class InvalidAction : public GroupError {
 public:
  using GroupError::GroupError;
};

// A Cayley table (or other ingested structure) fails a group axiom.
class AxiomViolation : public GroupError {
 public:
  using GroupError::GroupError;
};

// Element enumeration grew past the configured cap.
class CapExceeded : public GroupError {
 public:
  using GroupError::GroupError;
};

class LatticeCapExceeded : public GroupError {
 public:
  using GroupError::GroupError;
};

class NotNormal : public GroupError {
 public:
  using GroupError::GroupError;
};

class NotSchmidt : public GroupError {
 public:
  using GroupError::GroupError;
};

// A detected Schmidt group failed one of the structure checks (a)..(m).
class CertificateFailure : public GroupError {
 public:
  CertificateFailure(std::string entry, const std::string& what)
      : GroupError("certificate check (" + entry + ") failed: " + what),
        entry_(std::move(entry)) {}
  const std::string& entry() const noexcept { return entry_; }

 private:
  std::string entry_;
};

// The two nilpotency tests returned different answers. Always a bug.
class NilpotencyTestDisagreement : public GroupError {
 public:
  using GroupError::GroupError;
};

class ParseError : public InvalidSpec {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidSpec(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace phinil
