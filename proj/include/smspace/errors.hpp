#pragma once

#include <stdexcept>
#include <string>

namespace smspace {

/// The Jacobian kernel is not one-dimensional at the requested
/// configuration (arm folded onto the base or fully extended).
class SingularityError : public std::runtime_error {
 public:
  explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

/// Continuation exhausted its step budget without returning to the seed.
/// Diagnostic for split manifolds (retina closer than one segment length
/// to the base).
class NonClosureError : public std::runtime_error {
 public:
  explicit NonClosureError(const std::string& what) : std::runtime_error(what) {}
};

/// A light source coincides with the lens or a sensor.
class DegenerateGeometryError : public std::runtime_error {
 public:
  explicit DegenerateGeometryError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace smspace
