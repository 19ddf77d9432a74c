#pragma once

#include <stdexcept>
#include <utility>
#include <string>
#include <vector>

namespace bcay {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation does not hold (wrong validity stage,
/// group too large, malformed parameters).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input rejected because the constructed graph has a short cycle; the
/// cycle is carried as a vertex list.
class ShortCycle : public InvalidArgument {
 public:
  ShortCycle(const std::string& what, std::vector<int> cycle) : InvalidArgument(what), cycle(std::move(cycle)) {}
  std::vector<int> cycle;
};

/// A group descriptor could not be resolved.
class UnknownGroup : public Error {
 public:
  using Error::Error;
};

/// A family document (JSON) is malformed.
class FamilyFormatError : public Error {
 public:
  using Error::Error;
};

/// A search ran out of its time budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace bcay
