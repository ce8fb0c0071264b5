#pragma once

#include <stdexcept>
#include <string>

namespace frob {

/// Bad input: malformed vectors, out-of-range flags, violated preconditions.
/// The CLI maps this to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A 64-bit intermediate would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

/// The rejection sampler gave up before finding an admissible vector.
class SamplingError : public std::runtime_error {
 public:
  explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace frob
