#pragma once

#include <stdexcept>
#include <string>

namespace enumgeo {

// Input outside an operation's mathematical domain (d < k, odd k for the
// real formula, unknown surface identifiers, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Class outside the chopped-rectangle range where floor diagrams apply.
class PolygonDegenerateError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed cache/ingestion files and table conflicts.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace enumgeo
