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

// 0-based mixed-radix helpers shared by the marginal and partial-trace
// kernels. Never exposed through the public headers.

#pragma once

#include <cstddef>
#include <vector>

#include "hiddencorr/indexmap.hpp"

namespace hiddencorr::detail {

/// For every 0-based linear offset of `spec.shape()`, the offset inside the
/// kept subsystem and the offset inside the traced-out complement. Both use
/// the same axis-1-fastest ordering as compose().
struct SplitOffsets {
  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
  std::vector<std::size_t> kept;
  std::vector<std::size_t> traced;
};

inline SplitOffsets split_offsets(const MarginalSpec& spec) {
  const FactorShape& shape = spec.shape();
  const std::size_t n = shape.rank();
  std::vector<std::size_t> kept_stride(n, 0), traced_stride(n, 0);
  SplitOffsets out;
  for (std::size_t axis = 1; axis <= n; ++axis) {
    const std::size_t f = shape.factor(axis);
    if (spec.keeps(axis)) {
      kept_stride[axis - 1] = out.kept_dim;
      out.kept_dim *= f;
    } else {
      traced_stride[axis - 1] = out.traced_dim;
      out.traced_dim *= f;
    }
  }

  const std::size_t dim = shape.dimension();
  out.kept.resize(dim);
  out.traced.resize(dim);
  std::vector<std::size_t> digit(n, 0);
  std::size_t k = 0, t = 0;
  for (std::size_t y = 0; y < dim; ++y) {
    out.kept[y] = k;
    out.traced[y] = t;
    // odometer increment, axis 1 fastest
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t f = shape.factor(a + 1);
      if (++digit[a] < f) {
        k += kept_stride[a];
        t += traced_stride[a];
        break;
      }
      digit[a] = 0;
      k -= kept_stride[a] * (f - 1);
      t -= traced_stride[a] * (f - 1);
    }
  }
  return out;
}

}  // namespace hiddencorr::detail
