#pragma once

#include <stdexcept>
#include <string>

namespace lozenge {

// Parameters outside the domain of a constructor, formula or checker.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An engine refused to run because a configured resource limit was hit.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (alpha)_k with k < 0 hit a zero factor.
class PochhammerPole : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed region file or rational literal.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lozenge
