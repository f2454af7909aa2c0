#pragma once

#include <stdexcept>
#include <string>

namespace cvtri {

/// A criterion needs to divide by a variance that is zero.
class DegenerateInput : public std::domain_error {
 public:
  explicit DegenerateInput(const std::string& what) : std::domain_error(what) {}
};

/// The requested operating point lies outside the below-threshold regime.
class PhysicalRegimeError : public std::domain_error {
 public:
  explicit PhysicalRegimeError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace cvtri
