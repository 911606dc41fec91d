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

#include <Eigen/Core>
#include <cstddef>
#include <span>
#include <vector>

#include "hiddencorr/indexmap.hpp"

namespace hiddencorr {

inline constexpr double kNormalizationTolerance = 1e-9;
/// Probabilities below this are treated as exact zeros inside entropy sums.
inline constexpr double kZeroProbability = 1e-15;

/**
 * Normalized nonnegative distribution over N outcomes. Entry i (0-based
 * storage) is the probability of outcome y = i + 1.
 */
class ProbVector {
 public:
  /// Rejects negative entries and |sum - 1| > kNormalizationTolerance.
  explicit ProbVector(std::vector<double> probs);

  /// Rescales nonnegative weights to unit sum.
  static ProbVector normalize(std::vector<double> weights);

  std::size_t dimension() const noexcept { return probs_.size(); }
  /// 1-based outcome.
  double at(std::size_t y) const;
  double operator[](std::size_t i) const noexcept { return probs_[i]; }
  std::span<const double> values() const noexcept { return probs_; }

 private:
  std::vector<double> probs_;
};

/// Sums out the dropped axes; result is ordered by compose over the kept axes.
ProbVector marginal(const ProbVector& p, const MarginalSpec& spec);

/// -sum p ln p, nats.
double shannon_entropy(const ProbVector& p);
double shannon_entropy(std::span<const double> p);

/// H(1) + H(2) - H(12) over a two-factor shape.
double mutual_information(const ProbVector& p, const FactorShape& shape);

/// H(12) + H(23) - H(2) - H(123) over a three-factor shape.
double conditional_information(const ProbVector& p, const FactorShape& shape);

/// X1 x X2 matrix with entry (x1-1, x2-1) = P1(x1) P2(x2) - P(y(x1, x2)).
Eigen::MatrixXd correlation_defect(const ProbVector& p, const FactorShape& shape);

/// P(y(x1..xn)) = prod_i P_i(x_i).
ProbVector product_distribution(std::span<const ProbVector> parts);

}  // namespace hiddencorr
