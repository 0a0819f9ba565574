#pragma once

#include <stdexcept>
#include <string>

namespace puinorm {

// Rejected input or violated precondition. Messages are prefixed with the
// subsystem that raised them ("lattice: not full rank"). CLI exit code 1.
class UserError : public std::runtime_error {
public:
  explicit UserError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal certificate. Seeing this means a bug in the library,
// never bad input. CLI exit code 2.
class InternalError : public std::runtime_error {
public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace puinorm
