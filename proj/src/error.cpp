#include "cpgset/error.hpp"

namespace cpgset {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::IdentityAxiomFails: return "IdentityAxiomFails";
    case ErrorKind::CompatibilityFails: return "CompatibilityFails";
    case ErrorKind::H0NotSubgroup: return "H0NotSubgroup";
    case ErrorKind::DifferentParents: return "DifferentParents";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAGSetCongruence: return "NotAGSetCongruence";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::RoleMismatch: return "RoleMismatch";
    case ErrorKind::BoundsExceeded: return "BoundsExceeded";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::FileNotFound: return "FileNotFound";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::vector<std::size_t> witness, std::string const& detail)
    : std::runtime_error(detail), kind_(kind), witness_(std::move(witness)) {}

std::string Error::summary() const {
  std::string out(to_string(kind_));
  if (!witness_.empty()) {
    out += '(';
    for (std::size_t i = 0; i < witness_.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(witness_[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace cpgset
