#pragma once

#include <stdexcept>
#include <string>

namespace latcol {

// Input documents or arguments that fail validation before any solving starts.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An instance whose list/demand ratio is below the supported a/b >= 5/2 gate.
class GateError : public std::invalid_argument {
 public:
  explicit GateError(const std::string& what) : std::invalid_argument(what) {}
};

// A structural fact the lattice geometry guarantees failed to hold.
// Raised loudly instead of being patched over; seeing one means either the
// input is not a triangle-free induced lattice subgraph or there is a bug.
class StructuralViolation : public std::runtime_error {
 public:
  explicit StructuralViolation(const std::string& what) : std::runtime_error(what) {}
};

// The exact solvers ran out of their configured work budget.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace latcol
