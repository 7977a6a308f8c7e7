// Copyright 2026 The Pairshrink Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "oracles.h"
#include "pairshrink/pairshrink.h"

namespace pairshrink {
namespace {

Eigen::MatrixXd TangentBasis(int n) {
  // Columns e_i - e_{n-1}: a basis of {v : sum(v) = 0}.
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(n, n - 1);
  for (int i = 0; i < n - 1; ++i) {
    basis(i, i) = 1;
    basis(n - 1, i) = -1;
  }
  return basis;
}

TEST(ObservedInformation, SingleRecordHandValues) {
  const Dataset data(MakeNumberedUniverse(2), {{0, 1}});
  const InformationMatrix info = ObservedInformation(QualityVector::Uniform(2), data);
  // -H with 1/g^2 = 4 and 1/s^2 = 1.
  EXPECT_TRUE(info.matrix.isApprox((Eigen::Matrix2d() << 3, -1, -1, -1).finished()));
  EXPECT_EQ(info.num_comparisons, 1);
}

TEST(ObservedInformation, EmptyDataThrows) {
  EXPECT_THROW(ObservedInformation(QualityVector::Uniform(2), Dataset(MakeNumberedUniverse(2), {})),
               DataError);
  EXPECT_THROW(ExpectedInformation(QualityVector::Uniform(2), Dataset(MakeNumberedUniverse(2), {})),
               DataError);
  EXPECT_THROW(ObservedInformation(QualityVector::Uniform(3),
                                   Dataset(MakeNumberedUniverse(2), {{0, 1}})),
               DataError);
}

TEST(ObservedInformation, MatchesFiniteDifferenceHessian) {
  Rng rng = MakeRng(30, 0);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(UniformIndex(rng, 4));
    const Dataset data = testing::RandomDataset(n, 2 + static_cast<int>(UniformIndex(rng, 10)), rng);
    const QualityVector model = testing::RandomModel(n, rng);
    const InformationMatrix info = ObservedInformation(model, data);
    const Eigen::MatrixXd oracle = -testing::NumericalHessian(model, data) / data.size();
    const double scale = oracle.cwiseAbs().maxCoeff();
    EXPECT_LT((info.matrix - oracle).cwiseAbs().maxCoeff() / scale, 1e-6) << "trial " << t;
  }
}

TEST(ExpectedInformation, MatchesMonteCarloAverageOfObserved) {
  Rng rng = MakeRng(31, 0);
  const QualityVector model(Eigen::Vector3d(0.5, 0.3, 0.2));
  const Dataset schedule(MakeNumberedUniverse(3), {{0, 1}, {1, 2}, {0, 2}, {0, 1}});
  const InformationMatrix expected = ExpectedInformation(model, schedule);
  const int reps = 10000;
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(3, 3), sq = Eigen::MatrixXd::Zero(3, 3);
  for (int r = 0; r < reps; ++r) {
    std::vector<Comparison> drawn;
    for (const Comparison& c : schedule.records()) {
      drawn.push_back(Bernoulli(rng, ChoiceProb(model, c.winner, c.loser))
                          ? c
                          : Comparison{c.loser, c.winner});
    }
    const Eigen::MatrixXd m =
        ObservedInformation(model, Dataset(schedule.shared_universe(), drawn)).matrix;
    sum += m;
    sq += m.cwiseProduct(m);
  }
  const Eigen::MatrixXd mean = sum / reps;
  const Eigen::MatrixXd se =
      ((sq / reps - mean.cwiseProduct(mean)) / reps).cwiseMax(0.0).cwiseSqrt();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_LE(std::abs(mean(i, j) - expected.matrix(i, j)), 3 * se(i, j) + 1e-12)
          << i << "," << j;
    }
  }
}

TEST(ExpectedInformation, EqualsObservedForEvenMatchup) {
  const Dataset data(MakeNumberedUniverse(2), {{0, 1}, {1, 0}});
  const QualityVector model = QualityVector::Uniform(2);
  EXPECT_TRUE(ExpectedInformation(model, data).matrix.isApprox(
      ObservedInformation(model, data).matrix));
}

TEST(Information, NullDirectionSparsityAndPsd) {
  Rng rng = MakeRng(32, 0);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(UniformIndex(rng, 5));
    const Dataset data = testing::RandomDataset(n, 1 + static_cast<int>(UniformIndex(rng, 15)), rng);
    const QualityVector model = testing::RandomModel(n, rng);
    const ComparisonGraph graph = BuildGraph(data);
    const InformationMatrix expected = ExpectedInformation(model, data);
    const InformationMatrix observed = ObservedInformation(model, data);
    EXPECT_LT((expected.matrix * model.values()).cwiseAbs().maxCoeff(), 1e-10);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        EXPECT_EQ(expected.matrix(i, j) != 0.0, graph.matchups(i, j) > 0);
        EXPECT_EQ(observed.matrix(i, j) != 0.0, graph.matchups(i, j) > 0);
      }
    }
    EXPECT_TRUE(IsSymmetric(expected.matrix, 1e-10));
    const Eigen::MatrixXd basis = TangentBasis(n);
    const Eigen::MatrixXd projected = basis.transpose() * expected.matrix * basis;
    EXPECT_GE(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(projected).eigenvalues().minCoeff(),
              -1e-8);
  }
}

TEST(ObservedInformation, PsdAtMleOfRichData) {
  Rng rng = MakeRng(33, 0);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(UniformIndex(rng, 5));
    const Dataset data = testing::RichDataset(n, 30, rng);
    FitConfig config;
    config.epsilon = 0;
    config.tol = 1e-12;
    const QualityVector mle = FitMle(data, config);
    const Eigen::MatrixXd m = ObservedInformation(mle, data).matrix;
    EXPECT_GE(MinEigenvalueOrthogonalTo(m, mle.values()), -1e-8);
  }
}

// Holds whenever info * g = 0: always for the expected information, and
// for the observed one at an exact MLE.
TEST(CovarianceFromInformation, InvertsOnTheTangentSpace) {
  Rng rng = MakeRng(34, 0);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(UniformIndex(rng, 5));
    const Dataset data = testing::RichDataset(n, 10, rng);
    FitConfig config;
    config.epsilon = 0;
    config.tol = 1e-13;
    config.max_iter = 100000;
    const QualityVector mle = FitMle(data, config);
    const QualityVector model = testing::RandomModel(n, rng);
    for (const InformationMatrix& info :
         {ObservedInformation(mle, data), ExpectedInformation(model, data)}) {
      const CovarianceEstimate cov = CovarianceFromInformation(info);
      EXPECT_FALSE(cov.is_inverse);
      EXPECT_TRUE(IsSymmetric(cov.matrix, 1e-12));
      // Rows sum to zero like any covariance of simplex vectors.
      EXPECT_LT(cov.matrix.rowwise().sum().cwiseAbs().maxCoeff(), 1e-12);
      const Eigen::MatrixXd basis = TangentBasis(n);
      const Eigen::MatrixXd product = cov.matrix * info.Total() * basis;
      EXPECT_LT((product - basis).cwiseAbs().maxCoeff(), 1e-8) << "trial " << t;
    }
  }
}

TEST(CovarianceFromInformation, DoublingRecordsHalvesCovariance) {
  Rng rng = MakeRng(35, 0);
  const Dataset data = testing::RichDataset(4, 6, rng);
  std::vector<Comparison> twice(data.records().begin(), data.records().end());
  twice.insert(twice.end(), data.records().begin(), data.records().end());
  const QualityVector model = testing::RandomModel(4, rng);
  const Eigen::MatrixXd once = CovarianceFromInformation(ExpectedInformation(model, data)).matrix;
  const Eigen::MatrixXd doubled =
      CovarianceFromInformation(ExpectedInformation(model, Dataset(data.shared_universe(), twice)))
          .matrix;
  EXPECT_TRUE(doubled.isApprox(once / 2, 1e-10));
}

TEST(CovarianceFromInformation, TwoItemsVaryAlongTheDifference) {
  const Dataset data(MakeNumberedUniverse(2), {{0, 1}, {1, 0}});
  const CovarianceEstimate cov =
      CovarianceFromInformation(ExpectedInformation(QualityVector::Uniform(2), data));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov.matrix);
  EXPECT_NEAR(eig.eigenvalues()[0], 0.0, 1e-14);
  EXPECT_GT(eig.eigenvalues()[1], 0.0);
  const Eigen::Vector2d v = eig.eigenvectors().col(1);
  EXPECT_NEAR(std::abs(v[0] + v[1]), 0.0, 1e-12);
}

TEST(CovarianceFromInformation, ZeroCurvatureThrows) {
  InformationMatrix info{Eigen::MatrixXd::Zero(3, 3), InformationKind::kObserved, 4, {}};
  EXPECT_THROW(CovarianceFromInformation(info), NumericalError);
}

TEST(CovarianceFromInformation, RidgeStaysClose) {
  Rng rng = MakeRng(36, 0);
  const Dataset data = testing::RichDataset(5, 20, rng);
  const InformationMatrix info = ExpectedInformation(testing::RandomModel(5, rng), data);
  const Eigen::MatrixXd a = CovarianceFromInformation(info).matrix;
  const Eigen::MatrixXd b = CovarianceFromInformation(info, InverseMethod::kRidge).matrix;
  EXPECT_LT((a - b).norm() / a.norm(), 1e-4);
}

TEST(CovarianceFromInformation, PermutationEquivariant) {
  Rng rng = MakeRng(37, 0);
  const int n = 5;
  const Dataset data = testing::RichDataset(n, 12, rng);
  const QualityVector model = testing::RandomModel(n, rng);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Shuffle(perm, rng);
  std::vector<Comparison> moved;
  for (const Comparison& c : data.records()) moved.push_back({perm[c.winner], perm[c.loser]});
  Eigen::VectorXd g(n);
  for (int i = 0; i < n; ++i) g[perm[i]] = model[i];
  const Eigen::MatrixXd a = CovarianceFromInformation(ExpectedInformation(model, data)).matrix;
  const Eigen::MatrixXd b = CovarianceFromInformation(
      ExpectedInformation(QualityVector(g), Dataset(data.shared_universe(), moved))).matrix;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) EXPECT_NEAR(a(i, j), b(perm[i], perm[j]), 1e-12);
  }
}

Eigen::MatrixXd RandomSpd(int n, Rng& rng) {
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Uniform01(rng) - 0.5;
  }
  return m * m.transpose() + 0.1 * Eigen::MatrixXd::Identity(n, n);
}

TEST(ImplicitShrinkMatrix, Identities) {
  Rng rng = MakeRng(38, 0);
  const Eigen::MatrixXd a = RandomSpd(4, rng);
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(4, 4);
  EXPECT_TRUE(ImplicitShrinkMatrix(Eigen::MatrixXd::Zero(4, 4), a).isApprox(eye));
  EXPECT_TRUE(ImplicitShrinkMatrix(a, Eigen::MatrixXd::Zero(4, 4)).isApprox(eye));
  for (int t = 0; t < 50; ++t) {
    const Eigen::MatrixXd sigma = RandomSpd(4, rng);
    const Eigen::MatrixXd prior = RandomSpd(4, rng);
    const Eigen::MatrixXd s = sigma.inverse();
    const Eigen::MatrixXd expected = sigma * (sigma + prior).inverse();
    EXPECT_LT((ImplicitShrinkMatrix(s, prior) - expected).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(ImplicitShrinkMatrix, DimensionMismatchThrows) {
  EXPECT_THROW(ImplicitShrinkMatrix(Eigen::MatrixXd::Identity(3, 3), Eigen::MatrixXd::Identity(2, 2)),
               DataError);
}

}  // namespace
}  // namespace pairshrink
