#pragma once

#include <stdexcept>
#include <string>

namespace statgeo {

// Raised when an argument lies outside the domain of a model or function,
// or when a computed metric fails to be symmetric positive-definite.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised by the transport integrator when a dually transported pair drifts
// past the consistency threshold.
class TransportError : public std::runtime_error {
 public:
  explicit TransportError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace statgeo
