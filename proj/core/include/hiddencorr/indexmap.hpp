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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hiddencorr {

/**
 * Factorization N = X1 * X2 * ... * Xn of a system dimension into virtual
 * subsystem dimensions. Axis 1 varies fastest in the linear index.
 *
 * Factors of 1 are allowed and act as degenerate axes.
 */
class FactorShape {
 public:
  explicit FactorShape(std::vector<std::size_t> factors);
  FactorShape(std::initializer_list<std::size_t> factors)
      : FactorShape(std::vector<std::size_t>(factors)) {}

  /// Parses "X1,X2,..." (whitespace tolerated around entries).
  static FactorShape parse(const std::string& text);

  std::size_t rank() const noexcept { return factors_.size(); }
  std::size_t dimension() const noexcept { return dimension_; }
  /// 1-based axis.
  std::size_t factor(std::size_t axis) const;
  std::span<const std::size_t> factors() const noexcept { return factors_; }

  /// Sub-shape made of the given 1-based axes, in the given order.
  FactorShape select(std::span<const std::size_t> axes) const;

  std::string to_string() const;

  friend bool operator==(const FactorShape&, const FactorShape&) = default;

 private:
  std::vector<std::size_t> factors_;
  std::size_t dimension_ = 1;
};

/// 1-based virtual-subsystem coordinates (x1, ..., xn).
struct MultiIndex {
  std::vector<std::size_t> coords;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::size_t> c) : coords(std::move(c)) {}
  MultiIndex(std::initializer_list<std::size_t> c) : coords(c) {}

  std::size_t size() const noexcept { return coords.size(); }
  std::size_t operator[](std::size_t i) const { return coords[i]; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// y = x1 + (x2-1) X1 + (x3-1) X1 X2 + ...  (1-based in and out).
std::size_t compose(const MultiIndex& coords, const FactorShape& shape);

/// Inverse of compose: x1 = ((y-1) mod X1) + 1, higher axes by successive
/// integer division of (y-1).
MultiIndex decompose(std::size_t y, const FactorShape& shape);

/// All (y, coords) pairs in ascending y.
std::vector<std::pair<std::size_t, MultiIndex>> enumerate_cells(
    const FactorShape& shape);

/**
 * Axes kept by a marginalization or partial trace. Axes are 1-based,
 * nonempty and strictly increasing.
 */
class MarginalSpec {
 public:
  MarginalSpec(FactorShape shape, std::vector<std::size_t> keep_axes);

  const FactorShape& shape() const noexcept { return shape_; }
  std::span<const std::size_t> keep_axes() const noexcept { return keep_; }
  /// Shape of the kept subsystem.
  FactorShape kept_shape() const { return shape_.select(keep_); }
  bool keeps(std::size_t axis) const noexcept;

 private:
  FactorShape shape_;
  std::vector<std::size_t> keep_;
};

}  // namespace hiddencorr
