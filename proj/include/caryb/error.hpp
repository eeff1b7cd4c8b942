#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace caryb {

// Base class for all engine errors. Mathematical check failures are *not*
// errors; they are reported as data (see report.hpp).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad JSON, invalid group table, unknown flag value.
class InputError : public Error {
 public:
  explicit InputError(const std::string& msg) : Error(msg) {}
};

// A mathematical check that was required to hold did not (e.g. a loaded
// artifact failing re-certification).
class CheckFailedError : public Error {
 public:
  explicit CheckFailedError(const std::string& msg) : Error(msg) {}
};

// Incompatible shapes, e.g. composing maps whose dimensions disagree.
class DimensionError : public Error {
 public:
  DimensionError(const std::string& what, std::int64_t got, std::int64_t want)
      : Error(what + ": dimension " + std::to_string(got) + " does not match " +
              std::to_string(want)),
        got(got),
        want(want) {}
  std::int64_t got;
  std::int64_t want;
};

// Arithmetic between scalars from different coefficient fields.
class FieldMismatchError : public Error {
 public:
  explicit FieldMismatchError(const std::string& msg) : Error(msg) {}
};

// A construction would exceed the configured dimension cap.
class CapError : public Error {
 public:
  CapError(std::int64_t dim, std::int64_t cap)
      : Error("dimension " + std::to_string(dim) +
              " exceeds the configured cap " + std::to_string(cap)),
        dim(dim),
        cap(cap) {}
  std::int64_t dim;
  std::int64_t cap;
};

}  // namespace caryb
