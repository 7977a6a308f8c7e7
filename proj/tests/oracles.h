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


// Reference implementations used as test oracles. They share no code with
// the library beyond the data types and favour clarity over speed.

#ifndef PAIRSHRINK_TESTS_ORACLES_H_
#define PAIRSHRINK_TESTS_ORACLES_H_

#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pairshrink/pairshrink.h"

namespace pairshrink::testing {

using LongVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

// Records drawn uniformly over ordered pairs; no structure guaranteed.
inline Dataset RandomDataset(int n, int records, Rng& rng) {
  std::vector<Comparison> out;
  for (int k = 0; k < records; ++k) {
    const int w = static_cast<int>(UniformIndex(rng, n));
    int l = static_cast<int>(UniformIndex(rng, n - 1));
    if (l >= w) ++l;
    out.push_back({w, l});
  }
  return Dataset(MakeNumberedUniverse(n), std::move(out));
}

// Every ordered pair once, plus `extra` random records: strongly connected.
inline Dataset RichDataset(int n, int extra, Rng& rng) {
  std::vector<Comparison> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) out.push_back({i, j});
    }
  }
  const Dataset more = RandomDataset(n, extra, rng);
  out.insert(out.end(), more.records().begin(), more.records().end());
  return Dataset(MakeNumberedUniverse(n), std::move(out));
}

inline QualityVector RandomModel(int n, Rng& rng) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = 0.2 + Uniform01(rng);
  return QualityVector::Normalized(v);
}

// Log-likelihood in long double, directly from the definition.
inline long double LogLikLong(const LongVector& g, const Dataset& data) {
  long double total = 0;
  for (const Comparison& c : data.records()) {
    total += std::log(g[c.winner]) - std::log(g[c.winner] + g[c.loser]);
  }
  return total;
}

// Central-difference Hessian of the raw log-likelihood, step h * g_i.
inline Eigen::MatrixXd NumericalHessian(const QualityVector& model, const Dataset& data,
                                        long double h = 1e-5L) {
  const int n = model.size();
  LongVector g(n);
  for (int i = 0; i < n; ++i) g[i] = model[i];
  Eigen::MatrixXd hess(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const long double hi = h * g[i], hj = h * g[j];
      auto at = [&](long double di, long double dj) {
        LongVector x = g;
        x[i] += di;
        x[j] += dj;
        return LogLikLong(x, data);
      };
      hess(i, j) = static_cast<double>(
          (at(hi, hj) - at(hi, -hj) - at(-hi, hj) + at(-hi, -hj)) / (4 * hi * hj));
    }
  }
  return hess;
}

// Maximizes the eps-penalized log-likelihood by damped Newton in log
// coordinates with theta_0 pinned to 0. Independent of I-LSR.
inline Eigen::VectorXd NewtonPenalizedMle(const Dataset& data, double epsilon) {
  const int n = data.num_items();
  const int m = n - 1;
  LongVector theta = LongVector::Zero(n);
  const long double eps = epsilon;
  auto objective = [&](const LongVector& t) {
    long double f = 0;
    for (const Comparison& c : data.records()) {
      const long double a = t[c.winner], b = t[c.loser];
      const long double top = std::max(a, b);
      f += a - (top + std::log(std::exp(a - top) + std::exp(b - top)));
    }
    const long double top = t.maxCoeff();
    long double z = 0;
    for (int i = 0; i < n; ++i) z += std::exp(t[i] - top);
    f += eps * (t.sum() - n * (top + std::log(z)));
    return f;
  };
  for (int iter = 0; iter < 500; ++iter) {
    LongVector grad = LongVector::Zero(n);
    LongMatrix hess = LongMatrix::Zero(n, n);
    for (const Comparison& c : data.records()) {
      const long double p = 1 / (1 + std::exp(theta[c.loser] - theta[c.winner]));
      grad[c.winner] += 1 - p;
      grad[c.loser] -= 1 - p;
      const long double w = p * (1 - p);
      hess(c.winner, c.winner) -= w;
      hess(c.loser, c.loser) -= w;
      hess(c.winner, c.loser) += w;
      hess(c.loser, c.winner) += w;
    }
    const long double top = theta.maxCoeff();
    LongVector s(n);
    for (int i = 0; i < n; ++i) s[i] = std::exp(theta[i] - top);
    s /= s.sum();
    for (int i = 0; i < n; ++i) grad[i] += eps * (1 - n * s[i]);
    hess -= eps * n * (LongMatrix(s.asDiagonal()) - s * s.transpose());

    const LongVector g = grad.tail(m);
    if (g.cwiseAbs().maxCoeff() < 1e-15L) break;
    const LongMatrix h = hess.bottomRightCorner(m, m);
    const LongVector step = h.ldlt().solve(-g);
    const long double f0 = objective(theta);
    long double t = 1;
    LongVector next = theta;
    for (int back = 0; back < 60; ++back) {
      next.tail(m) = theta.tail(m) + t * step;
      if (objective(next) >= f0 - 1e-18L) break;
      t /= 2;
    }
    theta = next;
  }
  Eigen::VectorXd gamma(n);
  const long double top = theta.maxCoeff();
  for (int i = 0; i < n; ++i) gamma[i] = static_cast<double>(std::exp(theta[i] - top));
  return gamma / gamma.sum();
}

// reach(i, j): a chain of "beaten by" edges leads from i to j.
inline std::vector<std::vector<bool>> TransitiveClosure(const ComparisonGraph& graph) {
  const int n = graph.num_items();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    reach[i][i] = true;
    for (int j = 0; j < n; ++j) {
      if (graph.wins(j, i) > 0) reach[i][j] = true;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
      }
    }
  }
  return reach;
}

// Stationary distribution of the dense penalized chain by a full
// eigen-decomposition of Q^T.
inline Eigen::VectorXd DenseStationary(const Eigen::MatrixXd& q) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(q.transpose());
  int best = 0;
  for (int i = 1; i < q.rows(); ++i) {
    if (std::abs(solver.eigenvalues()[i]) < std::abs(solver.eigenvalues()[best])) best = i;
  }
  Eigen::VectorXd v = solver.eigenvectors().col(best).real();
  return v / v.sum();
}

}  // namespace pairshrink::testing

#endif  // PAIRSHRINK_TESTS_ORACLES_H_
