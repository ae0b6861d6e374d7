#pragma once

#include <stdexcept>
#include <string>

namespace l2inv {

/// Malformed or inconsistent input: bad tables, shape mismatches, unparsable
/// files, out-of-range parameters.  The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A structurally valid request routed at an operation whose precondition the
/// input cannot satisfy (e.g. the generic-rank backend on a finite group).
/// The CLI maps this to exit code 3.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace l2inv
