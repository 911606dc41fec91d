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

#include "hiddencorr/indexmap.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "hiddencorr/errors.hpp"

namespace hiddencorr {

FactorShape::FactorShape(std::vector<std::size_t> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw DomainError("shape: at least one factor required");
  dimension_ = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::size_t f = factors_[i];
    if (f == 0) {
      throw DomainError("shape: factor on axis " + std::to_string(i + 1) +
                        " must be >= 1");
    }
    if (dimension_ > std::numeric_limits<std::size_t>::max() / f) {
      throw DomainError("shape: dimension overflows");
    }
    dimension_ *= f;
  }
}

FactorShape FactorShape::parse(const std::string& text) {
  std::vector<std::size_t> factors;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string_view item(text.data() + start, end - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
      item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
      item.remove_suffix(1);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw DomainError("shape: cannot parse factor '" + std::string(item) +
                        "' in '" + text + "'");
    }
    factors.push_back(value);
    start = end + 1;
  }
  return FactorShape(std::move(factors));
}

std::size_t FactorShape::factor(std::size_t axis) const {
  if (axis < 1 || axis > factors_.size()) {
    throw DomainError("shape: axis " + std::to_string(axis) + " outside 1.." +
                      std::to_string(factors_.size()));
  }
  return factors_[axis - 1];
}

FactorShape FactorShape::select(std::span<const std::size_t> axes) const {
  std::vector<std::size_t> out;
  out.reserve(axes.size());
  for (std::size_t axis : axes) out.push_back(factor(axis));
  return FactorShape(std::move(out));
}

std::string FactorShape::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ',';
    os << factors_[i];
  }
  return os.str();
}

std::size_t compose(const MultiIndex& coords, const FactorShape& shape) {
  if (coords.size() != shape.rank()) {
    throw DomainError("compose: expected " + std::to_string(shape.rank()) +
                      " coordinates, got " + std::to_string(coords.size()));
  }
  std::size_t y = 1;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::size_t x = coords[i];
    const std::size_t f = shape.factors()[i];
    if (x < 1 || x > f) {
      throw DomainError("compose: coordinate x" + std::to_string(i + 1) + "=" +
                        std::to_string(x) + " outside 1.." + std::to_string(f));
    }
    y += (x - 1) * stride;
    stride *= f;
  }
  return y;
}

MultiIndex decompose(std::size_t y, const FactorShape& shape) {
  if (y < 1 || y > shape.dimension()) {
    throw DomainError("decompose: y=" + std::to_string(y) + " outside 1.." +
                      std::to_string(shape.dimension()));
  }
  std::vector<std::size_t> coords(shape.rank());
  std::size_t rest = y - 1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::size_t f = shape.factors()[i];
    coords[i] = rest % f + 1;
    rest /= f;
  }
  return MultiIndex(std::move(coords));
}

std::vector<std::pair<std::size_t, MultiIndex>> enumerate_cells(
    const FactorShape& shape) {
  std::vector<std::pair<std::size_t, MultiIndex>> cells;
  cells.reserve(shape.dimension());
  std::vector<std::size_t> coords(shape.rank(), 1);
  for (std::size_t y = 1; y <= shape.dimension(); ++y) {
    cells.emplace_back(y, MultiIndex(coords));
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (++coords[i] <= shape.factors()[i]) break;
      coords[i] = 1;
    }
  }
  return cells;
}

MarginalSpec::MarginalSpec(FactorShape shape, std::vector<std::size_t> keep_axes)
    : shape_(std::move(shape)), keep_(std::move(keep_axes)) {
  if (keep_.empty()) throw DomainError("marginal: keep_axes must be nonempty");
  for (std::size_t i = 0; i < keep_.size(); ++i) {
    if (keep_[i] < 1 || keep_[i] > shape_.rank()) {
      throw DomainError("marginal: axis " + std::to_string(keep_[i]) +
                        " outside 1.." + std::to_string(shape_.rank()));
    }
    if (i > 0 && keep_[i] <= keep_[i - 1]) {
      throw DomainError("marginal: keep_axes must be strictly increasing");
    }
  }
}

bool MarginalSpec::keeps(std::size_t axis) const noexcept {
  return std::binary_search(keep_.begin(), keep_.end(), axis);
}

}  // namespace hiddencorr
