#pragma once

#include <stdexcept>
#include <string>

namespace goeritz {

/// Malformed diagram text, or a diagram whose labels do not pair up.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Rotation data that does not describe a planar 4-valent graph.
class NonPlanarError : public std::runtime_error {
 public:
  explicit NonPlanarError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration (brute-force counting, minor enumeration) would exceed its work cap.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency failure, e.g. a face tracing result that cannot be checkerboard shaded.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace goeritz
