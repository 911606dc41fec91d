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

#include "hiddencorr/classical.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "hiddencorr/errors.hpp"
#include "radix.hpp"

namespace hiddencorr {

namespace {

void require_dimension(const ProbVector& p, const FactorShape& shape,
                       const char* op) {
  if (p.dimension() != shape.dimension()) {
    throw DomainError(std::string(op) + ": distribution has " +
                      std::to_string(p.dimension()) + " outcomes but shape " +
                      shape.to_string() + " has dimension " +
                      std::to_string(shape.dimension()));
  }
}

void require_rank(const FactorShape& shape, std::size_t rank, const char* op) {
  if (shape.rank() != rank) {
    throw DomainError(std::string(op) + ": shape must have exactly " +
                      std::to_string(rank) + " factors, got " +
                      shape.to_string());
  }
}

double marginal_entropy(const ProbVector& p, const FactorShape& shape,
                        std::vector<std::size_t> keep) {
  return shannon_entropy(marginal(p, MarginalSpec(shape, std::move(keep))));
}

}  // namespace

ProbVector::ProbVector(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw DomainError("distribution: no outcomes");
  double sum = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const double v = probs_[i];
    if (!std::isfinite(v)) {
      throw InvalidStateError("entry", v,
                              "distribution: entry " + std::to_string(i + 1) +
                                  " is not finite");
    }
    if (v < 0.0) {
      throw InvalidStateError("nonnegativity", -v,
                              "distribution: entry " + std::to_string(i + 1) +
                                  " is negative");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kNormalizationTolerance) {
    throw InvalidStateError("normalization", std::abs(sum - 1.0),
                            "distribution: entries sum to " +
                                std::to_string(sum) + ", not 1");
  }
}

ProbVector ProbVector::normalize(std::vector<double> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw DomainError("normalize: weights must be finite and nonnegative");
    }
    sum += w;
  }
  if (sum <= 0.0) throw DomainError("normalize: weights sum to zero");
  for (double& w : weights) w /= sum;
  return ProbVector(std::move(weights));
}

double ProbVector::at(std::size_t y) const {
  if (y < 1 || y > probs_.size()) {
    throw DomainError("distribution: outcome " + std::to_string(y) +
                      " outside 1.." + std::to_string(probs_.size()));
  }
  return probs_[y - 1];
}

ProbVector marginal(const ProbVector& p, const MarginalSpec& spec) {
  require_dimension(p, spec.shape(), "marginal");
  const detail::SplitOffsets split = detail::split_offsets(spec);
  std::vector<double> out(split.kept_dim, 0.0);
  for (std::size_t y = 0; y < p.dimension(); ++y) out[split.kept[y]] += p[y];
  return ProbVector(std::move(out));
}

double shannon_entropy(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) {
    if (v > kZeroProbability) h -= v * std::log(v);
  }
  return h;
}

double shannon_entropy(const ProbVector& p) { return shannon_entropy(p.values()); }

double mutual_information(const ProbVector& p, const FactorShape& shape) {
  require_rank(shape, 2, "mutual_information");
  require_dimension(p, shape, "mutual_information");
  return marginal_entropy(p, shape, {1}) + marginal_entropy(p, shape, {2}) -
         shannon_entropy(p);
}

double conditional_information(const ProbVector& p, const FactorShape& shape) {
  require_rank(shape, 3, "conditional_information");
  require_dimension(p, shape, "conditional_information");
  return marginal_entropy(p, shape, {1, 2}) + marginal_entropy(p, shape, {2, 3}) -
         marginal_entropy(p, shape, {2}) - shannon_entropy(p);
}

Eigen::MatrixXd correlation_defect(const ProbVector& p, const FactorShape& shape) {
  require_rank(shape, 2, "correlation_defect");
  require_dimension(p, shape, "correlation_defect");
  const ProbVector p1 = marginal(p, MarginalSpec(shape, {1}));
  const ProbVector p2 = marginal(p, MarginalSpec(shape, {2}));
  const std::size_t x1_dim = shape.factor(1);
  const std::size_t x2_dim = shape.factor(2);
  Eigen::MatrixXd delta(x1_dim, x2_dim);
  for (std::size_t b = 0; b < x2_dim; ++b) {
    for (std::size_t a = 0; a < x1_dim; ++a) {
      delta(a, b) = p1[a] * p2[b] - p[a + b * x1_dim];
    }
  }
  return delta;
}

ProbVector product_distribution(std::span<const ProbVector> parts) {
  if (parts.empty()) throw DomainError("product_distribution: no parts");
  // axis 1 fastest: each new part multiplies in as the slowest axis
  std::vector<double> out = {1.0};
  for (const ProbVector& part : parts) {
    std::vector<double> next;
    next.reserve(out.size() * part.dimension());
    for (std::size_t j = 0; j < part.dimension(); ++j) {
      for (double v : out) next.push_back(v * part[j]);
    }
    out = std::move(next);
  }
  return ProbVector(std::move(out));
}

}  // namespace hiddencorr
