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

#include "hiddencorr/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

#include "hiddencorr/errors.hpp"

namespace hiddencorr {

namespace {

void require_square(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DomainError("matrix is " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + ", expected square");
  }
}

}  // namespace

SpectralDecomposition spectral_decomposition(const ComplexMatrix& hermitian) {
  require_square(hermitian);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("spectral_decomposition: eigensolver did not converge");
  }
  // Eigen returns ascending order
  SpectralDecomposition out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& hermitian) {
  require_square(hermitian);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
  }
  return solver.eigenvalues().reverse();
}

double hermiticity_defect(const ComplexMatrix& m) {
  require_square(m);
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace hiddencorr
