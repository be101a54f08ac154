#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "pcx/elem.hpp"

namespace pcx {

/// Base class of everything this library throws on purpose.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element was handed to a structure that does not own it.
class ownership_error : public error {
 public:
  using error::error;
};

/// A payload that cannot become an element of the target structure
/// (non-finite real, nonpositive value for the multiplicative reals,
/// unknown label of a finite group, ...).
class invalid_element : public error {
 public:
  using error::error;
};

/// Two structures that were required to coincide (equal domains, equal
/// codomains, matching matrix sizes) do not.
class structure_mismatch : public error {
 public:
  using error::error;
};

/// A documented precondition of an operation was not met.
class precondition_error : public error {
 public:
  using error::error;
};

/// A sampled or exhaustive law check failed while constructing a checked
/// structure (or while gating a derived construction).
class law_violation : public error {
 public:
  law_violation(const std::string& what, std::string law, std::string witness)
      : error(what), law_(std::move(law)), witness_(std::move(witness)) {}

  const std::string& law() const { return law_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string law_;
  std::string witness_;
};

/// An operation that only makes sense over a commutative group was asked
/// to run over a noncommutative one.  Carries a noncommuting pair.
class abelian_required : public error {
 public:
  abelian_required(const std::string& what, Elem left, Elem right)
      : error(what), left_(std::move(left)), right_(std::move(right)) {}

  const Elem& left() const { return left_; }
  const Elem& right() const { return right_; }

 private:
  Elem left_;
  Elem right_;
};

/// Malformed input file or selector string.
class parse_error : public error {
 public:
  using error::error;
};

}  // namespace pcx
