#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metcomp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed descriptors, bad encodings, out-of-range parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

// A sampled modulus check found a pair whose measured distance exceeds
// the regularity bound by more than the approximation slack.
class RegularityError : public Error {
 public:
  RegularityError(std::size_t i, std::size_t j, const std::string& detail)
      : Error("regularity violation at pair (" + std::to_string(i) + ", " +
              std::to_string(j) + "): " + detail),
        index_i(i),
        index_j(j) {}

  std::size_t index_i;
  std::size_t index_j;
};

// An object of the property class has a non-identity mono endomorphism.
class RigidityError : public Error {
 public:
  explicit RigidityError(const std::string& object)
      : Error("rigidity precondition violated at object '" + object + "'"),
        object_label(object) {}

  std::string object_label;
};

}  // namespace metcomp
