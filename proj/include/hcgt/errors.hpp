// Copyright 2026 The hcgt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcgt {

/// Raised when a computation would exceed a configured limit. Carries enough
/// state for a caller to report how far it got.
class ResourceLimitError : public std::runtime_error {
public:
  ResourceLimitError(const std::string &what, int last_completed_class,
                     std::size_t hirsch_length)
      : std::runtime_error(what), last_completed_class_(last_completed_class),
        hirsch_length_(hirsch_length) {}

  int last_completed_class() const { return last_completed_class_; }
  std::size_t hirsch_length() const { return hirsch_length_; }

private:
  int last_completed_class_;
  std::size_t hirsch_length_;
};

/// An internal invariant failed (inconsistent presentation, non-normal
/// subgroup handed to a quotient, ...).
class AlgebraError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace hcgt
