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
#include <span>
#include <utility>

#include "hiddencorr/classical.hpp"
#include "hiddencorr/indexmap.hpp"
#include "hiddencorr/spectral.hpp"

namespace hiddencorr {

/// Hermiticity, trace and positivity tolerance for density matrices.
inline constexpr double kStateTolerance = 1e-9;

struct StateDiagnostics {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;     // |Tr - 1|
  double min_eigenvalue = 0.0;   // of the Hermitian part
  double tolerance = kStateTolerance;

  bool hermitian() const noexcept { return hermiticity_defect <= tolerance; }
  bool unit_trace() const noexcept { return trace_defect <= tolerance; }
  bool positive() const noexcept { return min_eigenvalue >= -tolerance; }
  bool passed() const noexcept { return hermitian() && unit_trace() && positive(); }
};

/// Throws DomainError for non-square input.
StateDiagnostics validate(const ComplexMatrix& m, double tolerance = kStateTolerance);

namespace detail {
struct TrustedTag {};
}  // namespace detail

/**
 * N x N Hermitian, positive-semidefinite, unit-trace matrix. Index
 * (i, j) of the underlying storage is entry rho_{y y'} with y = i+1,
 * y' = j+1.
 */
class DensityMatrix {
 public:
  /// Validates; throws InvalidStateError naming the first failing invariant.
  explicit DensityMatrix(ComplexMatrix m, double tolerance = kStateTolerance);

  /// Skips validation. For results of operations that preserve the
  /// invariants by construction; the matrix is re-symmetrized.
  DensityMatrix(detail::TrustedTag, ComplexMatrix m);

  static DensityMatrix maximally_mixed(std::size_t dim);
  static DensityMatrix diagonal(const ProbVector& p);
  /// |psi><psi| for a (not necessarily normalized) nonzero vector.
  static DensityMatrix pure(const Eigen::VectorXcd& psi);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  /// Diagonal as a classical distribution (clamps roundoff negatives).
  ProbVector diagonal_distribution() const;

 private:
  ComplexMatrix m_;
};

/// -Tr rho ln rho via the spectrum, nats. Eigenvalues in [-1e-9, 0) count as
/// zero; anything more negative throws InvalidStateError.
double von_neumann_entropy(const DensityMatrix& rho);

/// Partial trace over the axes not kept by `spec`.
DensityMatrix artificial_reduce(const DensityMatrix& rho, const MarginalSpec& spec);

/// rho_1 (x) ... (x) rho_n with axis 1 varying fastest in the linear index.
DensityMatrix tensor_product(std::span<const DensityMatrix> parts);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

/// S(rho_1) + S(rho_2) - S(rho) over a two-factor shape.
double mutual_quantum_information(const DensityMatrix& rho, const FactorShape& shape);

/// S(rho_12) + S(rho_23) - S(rho_2) - S(rho) over a three-factor shape.
double conditional_quantum_information(const DensityMatrix& rho,
                                       const FactorShape& shape);

/// rho - rho_1 (x) rho_2.
ComplexMatrix correlation_defect_matrix(const DensityMatrix& rho,
                                        const FactorShape& shape);

/// sum_k w_k rho_1^(k) (x) rho_2^(k).
DensityMatrix separable_mixture(
    const ProbVector& weights,
    std::span<const std::pair<DensityMatrix, DensityMatrix>> pairs);

/// Transposes the indices of one axis (1 or 2) of a two-factor shape. The
/// result is Hermitian with unit trace but need not be positive.
ComplexMatrix partial_transpose(const DensityMatrix& rho, const FactorShape& shape,
                                std::size_t axis);
ComplexMatrix partial_transpose(const ComplexMatrix& m, const FactorShape& shape,
                                std::size_t axis);

struct PptVerdict {
  double min_pt_eigenvalue = 0.0;
  bool ppt = true;
  /// True when the verdict decides separability: always for NPT, and for
  /// PPT only on shapes where PPT is equivalent to separability.
  bool conclusive = false;

  bool entangled() const noexcept { return !ppt; }
};

PptVerdict is_ppt(const DensityMatrix& rho, const FactorShape& shape,
                  double tolerance = kStateTolerance);

/// Appends k zero rows and columns.
DensityMatrix embed_pad(const DensityMatrix& rho, long long k);

}  // namespace hiddencorr
