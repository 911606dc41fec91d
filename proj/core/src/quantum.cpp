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

#include "hiddencorr/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "hiddencorr/errors.hpp"
#include "radix.hpp"

namespace hiddencorr {

namespace {

void require_dimension(const DensityMatrix& rho, const FactorShape& shape,
                       const char* op) {
  if (rho.dim() != shape.dimension()) {
    throw DomainError(std::string(op) + ": matrix dimension " +
                      std::to_string(rho.dim()) + " does not match shape " +
                      shape.to_string() + " (dimension " +
                      std::to_string(shape.dimension()) + ")");
  }
}

void require_rank(const FactorShape& shape, std::size_t rank, const char* op) {
  if (shape.rank() != rank) {
    throw DomainError(std::string(op) + ": shape must have exactly " +
                      std::to_string(rank) + " factors, got " +
                      shape.to_string());
  }
}

std::string format_defect(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double reduced_entropy(const DensityMatrix& rho, const FactorShape& shape,
                       std::vector<std::size_t> keep) {
  return von_neumann_entropy(
      artificial_reduce(rho, MarginalSpec(shape, std::move(keep))));
}

}  // namespace

StateDiagnostics validate(const ComplexMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) {
    throw DomainError("validate: matrix is " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + ", expected square");
  }
  StateDiagnostics d;
  d.tolerance = tolerance;
  d.hermiticity_defect = hermiticity_defect(m);
  d.trace_defect = std::abs(m.trace() - Complex(1.0, 0.0));
  if (m.size() > 0) {
    const ComplexMatrix herm = 0.5 * (m + m.adjoint());
    d.min_eigenvalue = hermitian_eigenvalues(herm).minCoeff();
  }
  return d;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double tolerance) : m_(std::move(m)) {
  const StateDiagnostics d = validate(m_, tolerance);
  if (!d.hermitian()) {
    throw InvalidStateError("hermiticity", d.hermiticity_defect,
                            "density matrix: hermiticity defect " +
                                format_defect(d.hermiticity_defect));
  }
  if (!d.unit_trace()) {
    throw InvalidStateError("trace", d.trace_defect,
                            "density matrix: trace defect " +
                                format_defect(d.trace_defect));
  }
  if (!d.positive()) {
    throw InvalidStateError("positivity", -d.min_eigenvalue,
                            "density matrix: minimum eigenvalue " +
                                format_defect(d.min_eigenvalue));
  }
}

DensityMatrix::DensityMatrix(detail::TrustedTag, ComplexMatrix m)
    : m_(0.5 * (m + m.adjoint())) {}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw DomainError("maximally_mixed: dimension must be >= 1");
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityMatrix(detail::TrustedTag{},
                       ComplexMatrix::Identity(n, n) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::diagonal(const ProbVector& p) {
  const auto n = static_cast<Eigen::Index>(p.dimension());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = p[static_cast<std::size_t>(i)];
  return DensityMatrix(detail::TrustedTag{}, std::move(m));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  const double norm2 = psi.squaredNorm();
  if (!(norm2 > 0.0)) throw DomainError("pure: zero vector");
  return DensityMatrix(detail::TrustedTag{}, psi * psi.adjoint() / norm2);
}

ProbVector DensityMatrix::diagonal_distribution() const {
  std::vector<double> diag(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    diag[i] = std::max(0.0, m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real());
  }
  return ProbVector::normalize(std::move(diag));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const Eigen::VectorXd lambda = hermitian_eigenvalues(rho.matrix());
  double s = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const double v = lambda[i];
    if (v < -kStateTolerance) {
      throw InvalidStateError("positivity", -v,
                              "von_neumann_entropy: eigenvalue " +
                                  format_defect(v) + " below tolerance");
    }
    const double clamped = std::clamp(v, 0.0, 1.0);
    if (clamped > kZeroProbability) s -= clamped * std::log(clamped);
  }
  return s;
}

DensityMatrix artificial_reduce(const DensityMatrix& rho, const MarginalSpec& spec) {
  require_dimension(rho, spec.shape(), "artificial_reduce");
  const detail::SplitOffsets split = detail::split_offsets(spec);

  // group linear offsets by their traced-out coordinate; only pairs sharing
  // that coordinate contribute to the reduced matrix
  std::vector<std::vector<std::size_t>> by_traced(split.traced_dim);
  for (std::size_t y = 0; y < rho.dim(); ++y) by_traced[split.traced[y]].push_back(y);

  const auto kd = static_cast<Eigen::Index>(split.kept_dim);
  ComplexMatrix out = ComplexMatrix::Zero(kd, kd);
  const ComplexMatrix& m = rho.matrix();
  for (const auto& cells : by_traced) {
    for (std::size_t y : cells) {
      const auto r = static_cast<Eigen::Index>(split.kept[y]);
      for (std::size_t yp : cells) {
        out(r, static_cast<Eigen::Index>(split.kept[yp])) +=
            m(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(yp));
      }
    }
  }
  return DensityMatrix(detail::TrustedTag{}, std::move(out));
}

DensityMatrix tensor_product(std::span<const DensityMatrix> parts) {
  if (parts.empty()) throw DomainError("tensor_product: no parts");
  // each new part becomes the slowest axis, i.e. the left Kronecker factor
  ComplexMatrix acc = ComplexMatrix::Ones(1, 1);
  for (const DensityMatrix& part : parts) {
    const ComplexMatrix& b = part.matrix();
    const Eigen::Index n = acc.rows();
    ComplexMatrix next(n * b.rows(), n * b.cols());
    for (Eigen::Index i = 0; i < b.rows(); ++i) {
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        next.block(i * n, j * n, n, n) = b(i, j) * acc;
      }
    }
    acc = std::move(next);
  }
  return DensityMatrix(detail::TrustedTag{}, std::move(acc));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  const DensityMatrix parts[] = {a, b};
  return tensor_product(std::span<const DensityMatrix>(parts));
}

double mutual_quantum_information(const DensityMatrix& rho, const FactorShape& shape) {
  require_rank(shape, 2, "mutual_quantum_information");
  require_dimension(rho, shape, "mutual_quantum_information");
  return reduced_entropy(rho, shape, {1}) + reduced_entropy(rho, shape, {2}) -
         von_neumann_entropy(rho);
}

double conditional_quantum_information(const DensityMatrix& rho,
                                       const FactorShape& shape) {
  require_rank(shape, 3, "conditional_quantum_information");
  require_dimension(rho, shape, "conditional_quantum_information");
  return reduced_entropy(rho, shape, {1, 2}) + reduced_entropy(rho, shape, {2, 3}) -
         reduced_entropy(rho, shape, {2}) - von_neumann_entropy(rho);
}

ComplexMatrix correlation_defect_matrix(const DensityMatrix& rho,
                                        const FactorShape& shape) {
  require_rank(shape, 2, "correlation_defect_matrix");
  require_dimension(rho, shape, "correlation_defect_matrix");
  const DensityMatrix r1 = artificial_reduce(rho, MarginalSpec(shape, {1}));
  const DensityMatrix r2 = artificial_reduce(rho, MarginalSpec(shape, {2}));
  return rho.matrix() - tensor_product(r1, r2).matrix();
}

DensityMatrix separable_mixture(
    const ProbVector& weights,
    std::span<const std::pair<DensityMatrix, DensityMatrix>> pairs) {
  if (weights.dimension() != pairs.size()) {
    throw DomainError("separable_mixture: " + std::to_string(weights.dimension()) +
                      " weights for " + std::to_string(pairs.size()) + " pairs");
  }
  ComplexMatrix acc;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const ComplexMatrix term = tensor_product(pairs[k].first, pairs[k].second).matrix();
    if (k == 0) {
      acc = weights[k] * term;
    } else {
      if (term.rows() != acc.rows()) {
        throw DomainError("separable_mixture: pair " + std::to_string(k + 1) +
                          " has product dimension " + std::to_string(term.rows()) +
                          ", expected " + std::to_string(acc.rows()));
      }
      acc += weights[k] * term;
    }
  }
  return DensityMatrix(detail::TrustedTag{}, std::move(acc));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const FactorShape& shape,
                                std::size_t axis) {
  require_rank(shape, 2, "partial_transpose");
  if (axis != 1 && axis != 2) {
    throw DomainError("partial_transpose: axis must be 1 or 2, got " +
                      std::to_string(axis));
  }
  if (static_cast<std::size_t>(m.rows()) != shape.dimension() || m.rows() != m.cols()) {
    throw DomainError("partial_transpose: matrix does not match shape " +
                      shape.to_string());
  }
  const auto d1 = static_cast<Eigen::Index>(shape.factor(1));
  const auto d2 = static_cast<Eigen::Index>(shape.factor(2));
  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index b = 0; b < d2; ++b) {
    for (Eigen::Index a = 0; a < d1; ++a) {
      for (Eigen::Index bp = 0; bp < d2; ++bp) {
        for (Eigen::Index ap = 0; ap < d1; ++ap) {
          const Eigen::Index row = a + b * d1;
          const Eigen::Index col = ap + bp * d1;
          if (axis == 1) {
            out(row, col) = m(ap + b * d1, a + bp * d1);
          } else {
            out(row, col) = m(a + bp * d1, ap + b * d1);
          }
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, const FactorShape& shape,
                                std::size_t axis) {
  return partial_transpose(rho.matrix(), shape, axis);
}

PptVerdict is_ppt(const DensityMatrix& rho, const FactorShape& shape, double tolerance) {
  require_rank(shape, 2, "is_ppt");
  require_dimension(rho, shape, "is_ppt");
  PptVerdict v;
  v.min_pt_eigenvalue = hermitian_eigenvalues(partial_transpose(rho, shape, 2)).minCoeff();
  v.ppt = v.min_pt_eigenvalue >= -tolerance;
  const std::size_t d1 = shape.factor(1), d2 = shape.factor(2);
  const bool ppt_decides = std::min(d1, d2) == 1 || d1 * d2 <= 6;
  v.conclusive = !v.ppt || ppt_decides;
  return v;
}

DensityMatrix embed_pad(const DensityMatrix& rho, long long k) {
  if (k < 0) throw DomainError("embed_pad: k must be >= 0, got " + std::to_string(k));
  const auto n = static_cast<Eigen::Index>(rho.dim());
  const auto total = n + static_cast<Eigen::Index>(k);
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  out.topLeftCorner(n, n) = rho.matrix();
  return DensityMatrix(detail::TrustedTag{}, std::move(out));
}

}  // namespace hiddencorr
