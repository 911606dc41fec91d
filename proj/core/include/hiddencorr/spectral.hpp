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
#include <complex>

namespace hiddencorr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Eigenpairs of a Hermitian matrix; eigenvalues sorted descending and
/// eigenvectors stored column-wise in the same order.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;

  /// V diag(f(lambda)) V^dagger.
  template <typename F>
  ComplexMatrix apply(F&& f) const {
    Eigen::VectorXd mapped(eigenvalues.size());
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) mapped[i] = f(eigenvalues[i]);
    return eigenvectors * mapped.asDiagonal() * eigenvectors.adjoint();
  }
};

/// Only the lower triangle of `hermitian` is read.
SpectralDecomposition spectral_decomposition(const ComplexMatrix& hermitian);

/// Eigenvalues only, descending.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& hermitian);

/// max |A(i,j) - conj(A(j,i))|.
double hermiticity_defect(const ComplexMatrix& m);

}  // namespace hiddencorr
