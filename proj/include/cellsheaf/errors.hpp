#pragma once

#include <stdexcept>
#include <string>

namespace cellsheaf {

/// A target vector was not in the column span of the given basis.
struct NotInSpan : std::runtime_error {
  explicit NotInSpan(const std::string& what) : std::runtime_error(what) {}
};

/// The given cells do not form a polyhedral complex.
struct NotAComplex : std::runtime_error {
  explicit NotAComplex(const std::string& what) : std::runtime_error(what) {}
};

/// Operation requires a non-far face.
struct FarFace : std::runtime_error {
  explicit FarFace(const std::string& what) : std::runtime_error(what) {}
};

/// A codimension-one pair failed to produce a basis; the complex is malformed.
struct DegeneratePair : std::runtime_error {
  explicit DegeneratePair(const std::string& what) : std::runtime_error(what) {}
};

/// Sheaf passed where a cosheaf was expected, or vice versa.
struct WrongDirection : std::runtime_error {
  explicit WrongDirection(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidRank : std::runtime_error {
  explicit InvalidRank(const std::string& what) : std::runtime_error(what) {}
};

struct DisconnectedMatroid : std::runtime_error {
  explicit DisconnectedMatroid(const std::string& what) : std::runtime_error(what) {}
};

/// Tropical polynomial has no usable terms.
struct DegenerateInput : std::runtime_error {
  explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  ParseError(size_t position, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
        position(position) {}
  size_t position;
};

}  // namespace cellsheaf
