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

#include "hiddencorr/thermo.hpp"

#include <cmath>
#include <string>

#include "hiddencorr/errors.hpp"

namespace hiddencorr {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

// Shifted Boltzmann weights exp(-beta lambda - max) for the spectrum of H;
// the shift keeps the largest exponent at 0.
struct Boltzmann {
  Eigen::VectorXd weights;  // unnormalized, max entry 1
  double shift = 0.0;       // max_k(-beta lambda_k)
  double sum = 0.0;
};

Boltzmann boltzmann(const Eigen::VectorXd& spectrum, double beta) {
  Boltzmann b;
  Eigen::VectorXd exponent = -beta * spectrum;
  b.shift = exponent.maxCoeff();
  b.weights = (exponent.array() - b.shift).exp().matrix();
  b.sum = b.weights.sum();
  return b;
}

}  // namespace

HermitianObservable::HermitianObservable(ComplexMatrix m, double tolerance)
    : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw DomainError("hermitian observable: matrix is " + std::to_string(m_.rows()) +
                      "x" + std::to_string(m_.cols()) + ", expected nonempty square");
  }
  const double defect = hermiticity_defect(m_);
  if (defect > tolerance) {
    throw InvalidStateError("hermiticity", defect,
                            "hermitian observable: hermiticity defect " +
                                std::to_string(defect));
  }
}

HermitianObservable HermitianObservable::zero(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return HermitianObservable(ComplexMatrix::Zero(n, n));
}

DensityMatrix gibbs_state(const HermitianObservable& h, double beta) {
  require_finite(beta, "beta");
  const SpectralDecomposition eig = spectral_decomposition(h.matrix());
  const Boltzmann b = boltzmann(eig.eigenvalues, beta);
  const Eigen::VectorXd p = b.weights / b.sum;
  ComplexMatrix rho = eig.eigenvectors * p.asDiagonal() * eig.eigenvectors.adjoint();
  return DensityMatrix(detail::TrustedTag{}, std::move(rho));
}

double log_partition_at_beta(const HermitianObservable& h, double beta) {
  require_finite(beta, "beta");
  const Boltzmann b = boltzmann(hermitian_eigenvalues(h.matrix()), beta);
  return b.shift + std::log(b.sum);
}

double log_partition(const HermitianObservable& h, double temperature) {
  if (temperature == 0.0) throw DomainError("log_partition: temperature must be nonzero");
  require_finite(temperature, "temperature");
  return log_partition_at_beta(h, 1.0 / temperature);
}

ThermoReport thermo_report(const HermitianObservable& h, double beta,
                           const std::optional<FactorShape>& shape) {
  if (shape && shape->dimension() != h.dim()) {
    throw DomainError("thermo_report: shape " + shape->to_string() +
                      " does not match dimension " + std::to_string(h.dim()));
  }
  const DensityMatrix rho = gibbs_state(h, beta);
  ThermoReport r;
  r.beta = beta;
  r.energy = (h.matrix() * rho.matrix()).trace().real();
  r.entropy = von_neumann_entropy(rho);
  r.log_partition = log_partition_at_beta(h, beta);
  if (beta != 0.0) r.free_energy = r.energy - r.entropy / beta;
  if (shape && shape->rank() == 2) {
    r.mutual_information = mutual_quantum_information(rho, *shape);
  }
  return r;
}

double check_energy_entropy_inequality(const DensityMatrix& rho,
                                       const HermitianObservable& h) {
  if (rho.dim() != h.dim()) {
    throw DomainError("check_energy_entropy_inequality: state dimension " +
                      std::to_string(rho.dim()) + " vs observable dimension " +
                      std::to_string(h.dim()));
  }
  const double energy = (h.matrix() * rho.matrix()).trace().real();
  return log_partition(h, -1.0) - energy - von_neumann_entropy(rho);
}

std::pair<DensityMatrix, DensityMatrix> artificial_qubit_pair(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw DomainError("artificial_qubit_pair: expected a 4x4 state, got " +
                      std::to_string(rho.dim()) + "x" + std::to_string(rho.dim()));
  }
  const FactorShape qubits{2, 2};
  return {artificial_reduce(rho, MarginalSpec(qubits, {1})),
          artificial_reduce(rho, MarginalSpec(qubits, {2}))};
}

}  // namespace hiddencorr
