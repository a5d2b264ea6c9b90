#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topobound {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or an argument outside the documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Text input that does not follow the expected grammar.
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A mathematical precondition of a construction does not hold
/// (isolated vertex, 4-cycle present, mismatched inputs, ...).
class PreconditionError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// The instance is too large for the configured limits. Callers treat
/// this as "incomplete", never as a mathematical failure.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class FaceCapExceeded : public ResourceLimit {
 public:
  explicit FaceCapExceeded(std::size_t cap)
      : ResourceLimit("face cap of " + std::to_string(cap) + " exceeded"), cap_(cap) {}
  FaceCapExceeded(std::size_t cap, const std::string& what)
      : ResourceLimit(what + ": face cap of " + std::to_string(cap) + " exceeded"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class BudgetExhausted : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

/// Default bound on the number of faces any single complex may have.
inline constexpr std::size_t kDefaultFaceCap = std::size_t{1} << 20;

/// Default node budget for exhaustive searches (exact coloring, brute cd2).
inline constexpr std::size_t kDefaultSearchBudget = std::size_t{200'000'000};

}  // namespace topobound
