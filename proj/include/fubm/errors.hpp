#pragma once

#include <stdexcept>
#include <string>

namespace fubm {

/// Input outside the supported size range (n = 0, n above an enumeration
/// limit, mismatched ground sets).
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input that does not satisfy a structural invariant (not a partition,
/// crossing blocks, malformed word).
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation needs a cumulant order beyond what the distribution carries.
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fubm
