#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cpgset {

enum class ErrorKind {
  NotSquare,
  NotClosed,
  NotAssociative,
  NoIdentity,
  NoInverse,
  OutOfRange,
  IdentityAxiomFails,
  CompatibilityFails,
  H0NotSubgroup,
  DifferentParents,
  CarrierMismatch,
  CarrierTooLarge,
  TooLarge,
  NotAGSetCongruence,
  NotACongruence,
  NotTransitive,
  RoleMismatch,
  BoundsExceeded,
  FormatError,
  FileNotFound,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library. `witness` carries the indices that
// exhibit the failure (a triple for associativity, the element without an
// inverse, the 1-based line number for FormatError, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::vector<std::size_t> witness, std::string const& detail);

  ErrorKind kind() const noexcept { return kind_; }
  std::vector<std::size_t> const& witness() const noexcept { return witness_; }

  // "NoInverse(1)" style summary.
  std::string summary() const;

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace cpgset
