#pragma once

#include <stdexcept>
#include <string>

namespace burnside {

// Malformed or inconsistent input (bad permutation, non-subgroup, mismatched objects).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size bound was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation called outside its contract (e.g. decomposing a horn that is not inner anodyne).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Input is well formed but lies outside what the operation supports (e.g. torsion in a dual).
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace burnside
