// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace bistoch {

/// Invalid caller-supplied data: bad dimensions, malformed files, broken
/// input invariants. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap was hit: dimension limits, iteration limits.
/// Distinct from a negative mathematical answer. Maps to CLI exit code 3.
class CapError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace bistoch
