#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gcg {

/// Base class for every error raised by the library.
class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public GroupError {
 public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs)
      : GroupError("degree mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// Malformed input: non-bijective image arrays, bad parameters, singular matrices.
class ValidationError : public GroupError {
 public:
  using GroupError::GroupError;
};

/// An element was required to lie in a group and does not.
class NotAMember : public GroupError {
 public:
  using GroupError::GroupError;
};

/// A subgroup expected to be normal is not. The message names a generator g and an
/// element x with x^g outside the subgroup.
class NotNormal : public GroupError {
 public:
  NotNormal(const std::string& subgroup, const std::string& g, const std::string& x)
      : GroupError("subgroup " + subgroup + " is not normal: conjugating " + x + " by " + g +
                   " leaves the subgroup"),
        conjugator(g),
        element(x) {}

  std::string conjugator;
  std::string element;
};

class TooLargeToEnumerate : public GroupError {
 public:
  TooLargeToEnumerate(std::uint64_t order, std::uint64_t cap)
      : GroupError("group of order " + std::to_string(order) +
                   " is too large to enumerate (enumeration cap " + std::to_string(cap) + ")") {}
};

}  // namespace gcg
