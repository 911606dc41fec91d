// Copyright 2026 The hiddencorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace hiddencorr {

/// Argument outside an operation's domain (bad shape, index, axis, length).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A matrix or vector that violates a state invariant (trace, hermiticity,
/// positivity, normalization). Carries the offending field and its defect.
class InvalidStateError : public std::runtime_error {
 public:
  InvalidStateError(std::string field, double defect, const std::string& what)
      : std::runtime_error(what), field_(std::move(field)), defect_(defect) {}

  const std::string& field() const noexcept { return field_; }
  double defect() const noexcept { return defect_; }

 private:
  std::string field_;
  double defect_;
};

}  // namespace hiddencorr
