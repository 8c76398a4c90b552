#pragma once

#include <stdexcept>
#include <string>

namespace vertexkz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coefficient formula hit one of its poles.
class NonGenericPoint : public Error {
 public:
  NonGenericPoint() : Error("non-generic point") {}
  explicit NonGenericPoint(const std::string& detail) : Error("non-generic point: " + detail) {}
};

class DegenerateGrid : public Error {
 public:
  DegenerateGrid() : Error("degenerate interpolation grid") {}
};

/// det(W_i) or det(Y_i) vanished; callers exclude the point and report it.
class DegenerateCramer : public Error {
 public:
  explicit DegenerateCramer(const std::string& what = "degenerate Cramer system at this point")
      : Error(what) {}
};

class RepresentationMismatch : public Error {
 public:
  explicit RepresentationMismatch(const std::string& detail)
      : Error("representation mismatch: " + detail) {}
};

class NoOrientation : public Error {
 public:
  explicit NoOrientation(const std::string& what = "no orientation satisfies the functional equation")
      : Error(what) {}
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace vertexkz
