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

#include <optional>
#include <utility>

#include "hiddencorr/quantum.hpp"

namespace hiddencorr {

/// Hermitian generator (Hamiltonian-like), dimensionless.
class HermitianObservable {
 public:
  /// Throws DomainError if not square or not Hermitian within `tolerance`.
  explicit HermitianObservable(ComplexMatrix m, double tolerance = kStateTolerance);

  static HermitianObservable zero(std::size_t dim);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return m_; }

 private:
  ComplexMatrix m_;
};

/// exp(-beta H) / Tr exp(-beta H). beta = 0 gives I/N.
DensityMatrix gibbs_state(const HermitianObservable& h, double beta);

/// ln Tr exp(-H / T). T may be negative; T = 0 is rejected.
double log_partition(const HermitianObservable& h, double temperature);

/// ln Tr exp(-beta H); finite for every finite beta including 0.
double log_partition_at_beta(const HermitianObservable& h, double beta);

struct ThermoReport {
  double beta = 0.0;
  double energy = 0.0;
  double entropy = 0.0;
  /// E - S / beta; absent at beta = 0 where it diverges.
  std::optional<double> free_energy;
  double log_partition = 0.0;
  /// Mutual information across a two-factor shape, when one was given.
  std::optional<double> mutual_information;
};

/// Shape, if given, must match H's dimension; a two-factor shape adds the
/// mutual information of the Gibbs state's two reductions.
ThermoReport thermo_report(const HermitianObservable& h, double beta,
                           const std::optional<FactorShape>& shape = std::nullopt);

/// ln Z(H, T=-1) - Tr(H rho) - S(rho). Nonnegative for every state; zero
/// exactly at rho = exp(H) / Tr exp(H).
double check_energy_entropy_inequality(const DensityMatrix& rho,
                                       const HermitianObservable& h);

/// Both single-axis reductions of a 4x4 state under shape (2,2): first is
/// the trace over axis 2, second the trace over axis 1.
std::pair<DensityMatrix, DensityMatrix> artificial_qubit_pair(const DensityMatrix& rho);

}  // namespace hiddencorr
