#pragma once

#include <stdexcept>
#include <string>

namespace qmm {

// Bad user input: inconsistent dimensions, out-of-range indices, malformed
// spectra. CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested a sum over a symmetric group past the configured cap. CLI maps
// these to exit code 2.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(int degree, int cap);
  int degree() const { return degree_; }
  int cap() const { return cap_; }

 private:
  int degree_;
  int cap_;
};

}  // namespace qmm
