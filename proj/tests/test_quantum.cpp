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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "hiddencorr/errors.hpp"
#include "support/oracles.hpp"
#include "support/random_states.hpp"

using namespace hiddencorr;

namespace {

const double kLn2 = std::log(2.0);

DensityMatrix bell_like() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return DensityMatrix(m);
}

DensityMatrix diag_state(std::vector<double> d) {
  return DensityMatrix::diagonal(ProbVector(std::move(d)));
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(DensityMatrix::maximally_mixed(5).matrix()).passed());

  const StateDiagnostics twice = validate(ComplexMatrix::Identity(2, 2));
  EXPECT_FALSE(twice.passed());
  EXPECT_FALSE(twice.unit_trace());
  EXPECT_NEAR(twice.trace_defect, 1.0, 1e-15);

  EXPECT_TRUE(validate(bell_like().matrix()).passed());
  EXPECT_THROW(validate(ComplexMatrix::Zero(2, 3)), DomainError);
}

TEST(Validate, ReportsHermiticityAndPositivity) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  m(0, 1) = 0.1;
  const StateDiagnostics d = validate(m);
  EXPECT_NEAR(d.hermiticity_defect, 0.1, 1e-15);
  EXPECT_FALSE(d.hermitian());

  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_NEAR(validate(neg).min_eigenvalue, -0.5, 1e-12);
  try {
    DensityMatrix rho(neg);
    FAIL();
  } catch (const InvalidStateError& e) {
    EXPECT_EQ(e.field(), "positivity");
    EXPECT_NEAR(e.defect(), 0.5, 1e-12);
  }
}

TEST(VonNeumannEntropy, Examples) {
  std::mt19937_64 rng(1);
  EXPECT_NEAR(von_neumann_entropy(sampling::random_pure(rng, 6)), 0.0, 1e-9);
  EXPECT_NEAR(von_neumann_entropy(bell_like()), 0.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(6)), std::log(6.0), 1e-12);
  EXPECT_NEAR(von_neumann_entropy(diag_state({0.5, 0.25, 0.25})), 1.5 * kLn2, 1e-12);
}

TEST(VonNeumannEntropy, MatchesJacobiOracle) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const DensityMatrix rho = sampling::random_density(rng, 5);
    EXPECT_NEAR(von_neumann_entropy(rho), oracle::von_neumann(oracle::from_eigen(rho.matrix())),
                1e-10);
  }
}

TEST(ArtificialReduce, BellLikeGivesHalfIdentity) {
  const FactorShape s{2, 2};
  for (std::size_t axis : {1u, 2u}) {
    const DensityMatrix r = artificial_reduce(bell_like(), MarginalSpec(s, {axis}));
    EXPECT_LE(max_abs(r.matrix() - ComplexMatrix::Identity(2, 2) / 2.0), 1e-12);
  }
}

TEST(ArtificialReduce, ProductStateRecoversFactors) {
  std::mt19937_64 rng(3);
  const DensityMatrix a = sampling::random_density(rng, 2);
  const DensityMatrix b = sampling::random_density(rng, 3);
  const DensityMatrix ab = tensor_product(a, b);
  const FactorShape s{2, 3};
  EXPECT_LE(max_abs(artificial_reduce(ab, MarginalSpec(s, {1})).matrix() - a.matrix()), 1e-12);
  EXPECT_LE(max_abs(artificial_reduce(ab, MarginalSpec(s, {2})).matrix() - b.matrix()), 1e-12);
  EXPECT_LE(max_abs(artificial_reduce(ab, MarginalSpec(s, {1, 2})).matrix() - ab.matrix()),
            1e-15);
}

TEST(ArtificialReduce, MatchesNestedLoopOracle) {
  std::mt19937_64 rng(4);
  const FactorShape s{2, 3, 2};
  const std::vector<std::vector<std::size_t>> keeps = {{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 3}};
  for (int t = 0; t < 10; ++t) {
    const DensityMatrix rho = sampling::random_density(rng, 12);
    const auto ref = oracle::from_eigen(rho.matrix());
    for (const auto& keep : keeps) {
      const bool k1 = keep.front() == 1;
      const bool k2 = std::find(keep.begin(), keep.end(), 2) != keep.end();
      const bool k3 = keep.back() == 3;
      const auto expected = oracle::partial_trace3(ref, 2, 3, 2, k1, k2, k3);
      const ComplexMatrix got = artificial_reduce(rho, MarginalSpec(s, keep)).matrix();
      ASSERT_EQ(static_cast<std::size_t>(got.rows()), expected.size());
      for (std::size_t i = 0; i < expected.size(); ++i)
        for (std::size_t j = 0; j < expected.size(); ++j)
          EXPECT_LE(std::abs(got(i, j) - expected[i][j]), 1e-14);
    }
  }
}

TEST(ArtificialReduce, PreservesStateInvariants) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const DensityMatrix rho = sampling::random_density(rng, 4);
    for (std::size_t axis : {1u, 2u}) {
      const DensityMatrix r = artificial_reduce(rho, MarginalSpec(FactorShape{2, 2}, {axis}));
      const StateDiagnostics d = validate(r.matrix());
      EXPECT_TRUE(d.passed());
      EXPECT_LE(d.trace_defect, 1e-12);
    }
  }
}

TEST(ArtificialReduce, ShapeMismatch) {
  EXPECT_THROW(artificial_reduce(bell_like(), MarginalSpec(FactorShape{2, 3}, {1})),
               DomainError);
}

TEST(TensorProduct, Examples) {
  std::mt19937_64 rng(6);
  const DensityMatrix scalar = DensityMatrix::maximally_mixed(1);
  const DensityMatrix rho = sampling::random_density(rng, 3);
  EXPECT_LE(max_abs(tensor_product(scalar, rho).matrix() - rho.matrix()), 0.0);

  const DensityMatrix half = DensityMatrix::maximally_mixed(2);
  EXPECT_LE(max_abs(tensor_product(half, half).matrix() - ComplexMatrix::Identity(4, 4) / 4.0),
            1e-15);

  const DensityMatrix q = tensor_product(diag_state({1.0 / 3, 2.0 / 3}), diag_state({0.5, 0.5}));
  const double expected[] = {1.0 / 6, 1.0 / 3, 1.0 / 6, 1.0 / 3};
  for (Eigen::Index i = 0; i < 4; ++i) EXPECT_NEAR(q(i, i).real(), expected[i], 1e-15);
  EXPECT_LE(max_abs(q.matrix() - ComplexMatrix(q.matrix().diagonal().asDiagonal())), 0.0);

  EXPECT_THROW(tensor_product(std::span<const DensityMatrix>{}), DomainError);
}

TEST(TensorProduct, OrderingMatchesCompose) {
  std::mt19937_64 rng(7);
  const DensityMatrix a = sampling::random_density(rng, 2);
  const DensityMatrix b = sampling::random_density(rng, 3);
  const DensityMatrix c = sampling::random_density(rng, 2);
  const DensityMatrix parts[] = {a, b, c};
  const DensityMatrix abc = tensor_product(parts);
  const FactorShape s{2, 3, 2};
  for (std::size_t y = 1; y <= 12; ++y) {
    for (std::size_t yp = 1; yp <= 12; ++yp) {
      const MultiIndex x = decompose(y, s), xp = decompose(yp, s);
      const Complex expected = a(x[0] - 1, xp[0] - 1) * b(x[1] - 1, xp[1] - 1) *
                               c(x[2] - 1, xp[2] - 1);
      EXPECT_LE(std::abs(abc(y - 1, yp - 1) - expected), 1e-15);
    }
  }
}

TEST(TensorProduct, EntropyAdditive) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const DensityMatrix a = sampling::random_density(rng, 3);
    const DensityMatrix b = sampling::random_density(rng, 2);
    EXPECT_NEAR(von_neumann_entropy(tensor_product(a, b)),
                von_neumann_entropy(a) + von_neumann_entropy(b), 1e-9);
  }
}

TEST(MutualQuantumInformation, Examples) {
  EXPECT_NEAR(mutual_quantum_information(DensityMatrix::maximally_mixed(4), FactorShape{2, 2}),
              0.0, 1e-12);
  EXPECT_NEAR(mutual_quantum_information(bell_like(), FactorShape{2, 2}), 2 * kLn2, 1e-9);
  EXPECT_NEAR(mutual_quantum_information(diag_state({0.5, 0, 0, 0.5}), FactorShape{2, 2}),
              kLn2, 1e-12);
  EXPECT_THROW(mutual_quantum_information(bell_like(), FactorShape{4}), DomainError);
  EXPECT_THROW(mutual_quantum_information(bell_like(), FactorShape{1, 2, 2}), DomainError);
}

TEST(MutualQuantumInformation, PureStatesHaveEqualReducedSpectra) {
  std::mt19937_64 rng(9);
  const FactorShape s{2, 3};
  for (int t = 0; t < 50; ++t) {
    const DensityMatrix psi = sampling::random_pure(rng, 6);
    const DensityMatrix r1 = artificial_reduce(psi, MarginalSpec(s, {1}));
    const DensityMatrix r2 = artificial_reduce(psi, MarginalSpec(s, {2}));
    EXPECT_NEAR(mutual_quantum_information(psi, s), 2 * von_neumann_entropy(r1), 1e-9);
    const Eigen::VectorXd e1 = hermitian_eigenvalues(r1.matrix());
    const Eigen::VectorXd e2 = hermitian_eigenvalues(r2.matrix());
    // r2 has one extra (zero) eigenvalue
    EXPECT_NEAR(e1[0], e2[0], 1e-9);
    EXPECT_NEAR(e1[1], e2[1], 1e-9);
    EXPECT_NEAR(e2[2], 0.0, 1e-9);
  }
}

TEST(ConditionalQuantumInformation, Examples) {
  std::mt19937_64 rng(10);
  const DensityMatrix parts[] = {sampling::random_density(rng, 2), sampling::random_density(rng, 2),
                                 sampling::random_density(rng, 2)};
  EXPECT_NEAR(conditional_quantum_information(tensor_product(parts), FactorShape{2, 2, 2}),
              0.0, 1e-9);

  const DensityMatrix three = diag_state({0, 1.0 / 3, 1.0 / 3, 0, 1.0 / 3, 0, 0, 0});
  EXPECT_NEAR(conditional_quantum_information(three, FactorShape{2, 2, 2}), 2.0 / 3 * kLn2,
              1e-9);

  Eigen::VectorXcd ghz = Eigen::VectorXcd::Zero(8);
  ghz[0] = ghz[7] = 1.0 / std::sqrt(2.0);
  const DensityMatrix g = DensityMatrix::pure(ghz);

  // brute-force oracle: S(12) = S(23) = S(2) = ln 2, S(123) = 0
  const auto ref = oracle::from_eigen(g.matrix());
  const double s12 = oracle::von_neumann(oracle::partial_trace3(ref, 2, 2, 2, true, true, false));
  const double s23 = oracle::von_neumann(oracle::partial_trace3(ref, 2, 2, 2, false, true, true));
  const double s2 = oracle::von_neumann(oracle::partial_trace3(ref, 2, 2, 2, false, true, false));
  const double s123 = oracle::von_neumann(ref);
  EXPECT_NEAR(s12, kLn2, 1e-12);
  EXPECT_NEAR(s23, kLn2, 1e-12);
  EXPECT_NEAR(s2, kLn2, 1e-12);
  EXPECT_NEAR(s123, 0.0, 1e-12);
  EXPECT_NEAR(conditional_quantum_information(g, FactorShape{2, 2, 2}), s12 + s23 - s2 - s123,
              1e-9);
  EXPECT_NEAR(conditional_quantum_information(g, FactorShape{2, 2, 2}), kLn2, 1e-9);

  EXPECT_THROW(conditional_quantum_information(g, FactorShape{2, 4}), DomainError);
}

TEST(QuantumProperties, Subadditivity) {
  std::mt19937_64 rng(11);
  for (const FactorShape& s : {FactorShape{2, 2}, FactorShape{2, 3}, FactorShape{3, 3}}) {
    for (int t = 0; t < 500; ++t) {
      ASSERT_GE(mutual_quantum_information(sampling::random_density(rng, s.dimension()), s), -1e-9);
    }
  }
}

TEST(QuantumProperties, StrongSubadditivity) {
  std::mt19937_64 rng(12);
  for (const FactorShape& s : {FactorShape{2, 2, 2}, FactorShape{2, 2, 3}}) {
    for (int t = 0; t < 500; ++t) {
      ASSERT_GE(conditional_quantum_information(sampling::random_density(rng, s.dimension()), s),
                -1e-9);
    }
  }
}

TEST(QuantumProperties, DiagonalMatchesClassical) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const ProbVector p4 = sampling::random_simplex(rng, 6);
    EXPECT_NEAR(mutual_quantum_information(DensityMatrix::diagonal(p4), FactorShape{2, 3}),
                mutual_information(p4, FactorShape{2, 3}), 1e-9);
    const ProbVector p8 = sampling::random_simplex(rng, 8);
    EXPECT_NEAR(conditional_quantum_information(DensityMatrix::diagonal(p8), FactorShape{2, 2, 2}),
                conditional_information(p8, FactorShape{2, 2, 2}), 1e-9);
  }
}

TEST(CorrelationDefectMatrix, Examples) {
  std::mt19937_64 rng(14);
  const DensityMatrix prod = tensor_product(sampling::random_density(rng, 2),
                                            sampling::random_density(rng, 2));
  EXPECT_LE(max_abs(correlation_defect_matrix(prod, FactorShape{2, 2})), 1e-12);

  const ComplexMatrix d = correlation_defect_matrix(bell_like(), FactorShape{2, 2});
  ComplexMatrix expected = bell_like().matrix() - ComplexMatrix::Identity(4, 4) / 4.0;
  EXPECT_LE(max_abs(d - expected), 1e-12);
  EXPECT_NEAR(d(0, 3).real(), 0.5, 1e-12);
  EXPECT_NEAR(d(3, 0).real(), 0.5, 1e-12);
  EXPECT_NEAR(d(0, 0).real(), 0.25, 1e-12);
  EXPECT_NEAR(d(1, 1).real(), -0.25, 1e-12);
  EXPECT_NEAR(d(2, 2).real(), -0.25, 1e-12);
  EXPECT_NEAR(d(3, 3).real(), 0.25, 1e-12);

  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix r = correlation_defect_matrix(sampling::random_density(rng, 6),
                                                      FactorShape{3, 2});
    EXPECT_LE(std::abs(r.trace()), 1e-12);
    EXPECT_LE(hermiticity_defect(r), 1e-12);
  }
}

TEST(SeparableMixture, Examples) {
  std::mt19937_64 rng(15);
  const DensityMatrix a = sampling::random_density(rng, 2);
  const DensityMatrix b = sampling::random_density(rng, 3);
  const std::pair<DensityMatrix, DensityMatrix> single[] = {{a, b}};
  EXPECT_LE(max_abs(separable_mixture(ProbVector({1.0}), single).matrix() -
                    tensor_product(a, b).matrix()),
            1e-15);

  const DensityMatrix zero = diag_state({1, 0});
  const DensityMatrix one = diag_state({0, 1});
  const std::pair<DensityMatrix, DensityMatrix> classical[] = {{zero, zero}, {one, one}};
  const DensityMatrix mix = separable_mixture(ProbVector({0.5, 0.5}), classical);
  EXPECT_LE(max_abs(mix.matrix() - diag_state({0.5, 0, 0, 0.5}).matrix()), 1e-15);

  EXPECT_THROW(separable_mixture(ProbVector({1.0}), classical), DomainError);
}

TEST(SeparableMixture, AlwaysPpt) {
  std::mt19937_64 rng(16);
  for (const FactorShape& s : {FactorShape{2, 2}, FactorShape{2, 3}, FactorShape{3, 3}}) {
    for (int t = 0; t < 50; ++t) {
      std::vector<std::pair<DensityMatrix, DensityMatrix>> pairs;
      for (int k = 0; k < 4; ++k) {
        pairs.emplace_back(sampling::random_density(rng, s.factor(1)),
                           sampling::random_density(rng, s.factor(2)));
      }
      const DensityMatrix rho = separable_mixture(sampling::random_simplex(rng, 4), pairs);
      EXPECT_TRUE(validate(rho.matrix()).passed());
      EXPECT_TRUE(is_ppt(rho, s).ppt);
    }
  }
}

TEST(PartialTranspose, BellLikeSpectrum) {
  for (std::size_t axis : {1u, 2u}) {
    const ComplexMatrix pt = partial_transpose(bell_like(), FactorShape{2, 2}, axis);
    const std::vector<double> ev = oracle::hermitian_eigenvalues(oracle::from_eigen(pt));
    ASSERT_EQ(ev.size(), 4u);
    EXPECT_NEAR(ev[0], -0.5, 1e-12);
    EXPECT_NEAR(ev[1], 0.5, 1e-12);
    EXPECT_NEAR(ev[2], 0.5, 1e-12);
    EXPECT_NEAR(ev[3], 0.5, 1e-12);
  }
}

TEST(PartialTranspose, EntryMapping) {
  std::mt19937_64 rng(17);
  const DensityMatrix rho = sampling::random_density(rng, 6);
  const FactorShape s{2, 3};
  const ComplexMatrix pt1 = partial_transpose(rho, s, 1);
  const ComplexMatrix pt2 = partial_transpose(rho, s, 2);
  for (const auto& [y, x] : enumerate_cells(s)) {
    for (const auto& [yp, xp] : enumerate_cells(s)) {
      EXPECT_EQ(pt1(y - 1, yp - 1), rho(compose({xp[0], x[1]}, s) - 1, compose({x[0], xp[1]}, s) - 1));
      EXPECT_EQ(pt2(y - 1, yp - 1), rho(compose({x[0], xp[1]}, s) - 1, compose({xp[0], x[1]}, s) - 1));
    }
  }
}

TEST(PartialTranspose, InvolutionAndInvariants) {
  std::mt19937_64 rng(18);
  const FactorShape s{3, 2};
  for (int t = 0; t < 50; ++t) {
    const DensityMatrix rho = sampling::random_density(rng, 6);
    for (std::size_t axis : {1u, 2u}) {
      const ComplexMatrix pt = partial_transpose(rho, s, axis);
      EXPECT_LE(hermiticity_defect(pt), 1e-15);
      EXPECT_NEAR(pt.trace().real(), 1.0, 1e-12);
      EXPECT_EQ(partial_transpose(pt, s, axis), rho.matrix());
    }
  }
  const DensityMatrix prod = tensor_product(sampling::random_density(rng, 3),
                                            sampling::random_density(rng, 2));
  EXPECT_NO_THROW(DensityMatrix(partial_transpose(prod, s, 1)));
  EXPECT_THROW(partial_transpose(prod, s, 3), DomainError);
  EXPECT_THROW(partial_transpose(prod, s, 0), DomainError);
}

TEST(IsPpt, Examples) {
  const PptVerdict bell = is_ppt(bell_like(), FactorShape{2, 2});
  EXPECT_FALSE(bell.ppt);
  EXPECT_TRUE(bell.entangled());
  EXPECT_TRUE(bell.conclusive);
  EXPECT_NEAR(bell.min_pt_eigenvalue, -0.5, 1e-9);

  const PptVerdict mixed = is_ppt(DensityMatrix::maximally_mixed(4), FactorShape{2, 2});
  EXPECT_TRUE(mixed.ppt);
  EXPECT_TRUE(mixed.conclusive);
  EXPECT_NEAR(mixed.min_pt_eigenvalue, 0.25, 1e-12);
}

TEST(IsPpt, ConclusiveOnlyWherePptDecidesSeparability) {
  EXPECT_TRUE(is_ppt(DensityMatrix::maximally_mixed(6), FactorShape{2, 3}).conclusive);
  EXPECT_TRUE(is_ppt(DensityMatrix::maximally_mixed(6), FactorShape{3, 2}).conclusive);
  EXPECT_FALSE(is_ppt(DensityMatrix::maximally_mixed(9), FactorShape{3, 3}).conclusive);
  EXPECT_FALSE(is_ppt(DensityMatrix::maximally_mixed(8), FactorShape{2, 4}).conclusive);

  // maximally entangled 3x3 state is NPT, which certifies entanglement anywhere
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(9);
  for (std::size_t k = 1; k <= 3; ++k) psi[compose({k, k}, FactorShape{3, 3}) - 1] = 1.0;
  const PptVerdict v = is_ppt(DensityMatrix::pure(psi), FactorShape{3, 3});
  EXPECT_FALSE(v.ppt);
  EXPECT_TRUE(v.conclusive);
  EXPECT_NEAR(v.min_pt_eigenvalue, -1.0 / 3, 1e-12);
}

TEST(EmbedPad, Examples) {
  std::mt19937_64 rng(19);
  const DensityMatrix rho = sampling::random_density(rng, 5);
  EXPECT_EQ(embed_pad(rho, 0).matrix(), rho.matrix());

  const DensityMatrix padded = embed_pad(rho, 1);
  ASSERT_EQ(padded.dim(), 6u);
  EXPECT_EQ(padded.matrix().topLeftCorner(5, 5), rho.matrix());
  EXPECT_EQ(padded.matrix().row(5).cwiseAbs().sum(), 0.0);
  EXPECT_EQ(padded.matrix().col(5).cwiseAbs().sum(), 0.0);
  EXPECT_TRUE(validate(padded.matrix()).passed());
  EXPECT_NEAR(von_neumann_entropy(padded), von_neumann_entropy(rho), 1e-12);
  EXPECT_GE(mutual_quantum_information(padded, FactorShape{2, 3}), -1e-9);

  const Eigen::VectorXd before = hermitian_eigenvalues(rho.matrix());
  const Eigen::VectorXd after = hermitian_eigenvalues(padded.matrix());
  for (Eigen::Index i = 0; i < 5; ++i) EXPECT_NEAR(before[i], after[i], 1e-12);
  EXPECT_NEAR(after[5], 0.0, 1e-12);

  EXPECT_THROW(embed_pad(rho, -1), DomainError);
}
