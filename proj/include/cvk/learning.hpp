// Copyright 2026 The cvkernels Authors
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

// Kernel ridge regression under square loss: c = (K + lambda M I)^{-1} Y,
// h(x) = sum_k c_k K(x, x_k), and the norm B = c^T K c entering the
// 2B / sqrt(M) generalization bound.

#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "cvk/kernels.hpp"
#include "cvk/types.hpp"

namespace cvk {

struct LabeledDataset {
  std::vector<DataPoint> points;
  std::vector<double> labels;

  void validate() const {
    if (points.empty()) throw DataError("dataset is empty");
    if (points.size() != labels.size()) throw DataError("dataset has mismatched point and label counts");
    for (const DataPoint& p : points) points.front().require_same_modes(p);
    for (double y : labels) {
      if (!std::isfinite(y)) throw DataError("dataset has a non-finite label");
    }
  }

  [[nodiscard]] std::size_t size() const { return points.size(); }
};

/// Raised when K + lambda M I cannot be factorized.
class SingularSystemError : public DataError {
 public:
  using DataError::DataError;
};

inline constexpr double max_condition_at_zero_lambda = 1e12;
inline constexpr double fit_residual_limit = 1e-10;

struct KrrModel {
  KernelSpec spec;
  std::vector<DataPoint> points;
  Eigen::VectorXd coefficients;
  double lambda = 0.0;
  double bound = 0.0;     // B = c^T K c
  double residual = 0.0;  // ||(K + lambda M I) c - Y||_inf at fit time

  [[nodiscard]] std::size_t size() const { return points.size(); }
};

inline Eigen::VectorXd to_vector(std::span<const double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

/// Y^T (K + M lambda I)^{-1} K (K + M lambda I)^{-1} Y through the eigenbasis of K.
inline double norm_bound_from_labels(const Eigen::MatrixXd& k, std::span<const double> labels, double lambda) {
  const Eigen::VectorXd y = to_vector(labels);
  const double shift = lambda * static_cast<double>(k.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (k + k.transpose()));
  const Eigen::VectorXd proj = es.eigenvectors().transpose() * y;
  double b = 0.0;
  for (Eigen::Index i = 0; i < proj.size(); ++i) {
    const double ev = es.eigenvalues()(i);
    b += proj(i) * proj(i) * ev / ((ev + shift) * (ev + shift));
  }
  return b;
}

inline double norm_bound(const Eigen::MatrixXd& k, const Eigen::VectorXd& c) { return c.dot(k * c); }

inline double norm_bound(const KrrModel& model, const GramMatrix& g) { return norm_bound(g.entries(), model.coefficients); }

inline KrrModel fit_krr(const GramMatrix& g, std::span<const double> labels, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw UsageError("regularization must be finite and >= 0");
  if (labels.size() != g.size()) throw DataError("label count does not match the gram matrix");
  for (double y : labels) {
    if (!std::isfinite(y)) throw DataError("non-finite label");
  }
  const Eigen::Index m = static_cast<Eigen::Index>(g.size());
  const double shift = lambda * static_cast<double>(m);
  if (lambda == 0.0) {
    const double cond = g.min_eigenvalue() > 0.0 ? g.max_eigenvalue() / g.min_eigenvalue()
                                                 : std::numeric_limits<double>::infinity();
    if (!(cond < max_condition_at_zero_lambda)) {
      throw SingularSystemError("kernel matrix is numerically singular (condition estimate " + show(cond) +
                                "); use a regularization lambda > 0");
    }
  }
  const Eigen::MatrixXd a = g.entries() + shift * Eigen::MatrixXd::Identity(m, m);
  const Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) {
    throw SingularSystemError("K + lambda M I is not positive definite; use a larger lambda");
  }
  const Eigen::VectorXd y = to_vector(labels);
  Eigen::VectorXd c = llt.solve(y);
  c += llt.solve(y - a * c);  // one refinement step

  KrrModel model;
  model.spec = g.spec();
  model.points = g.points();
  model.coefficients = c;
  model.lambda = lambda;
  model.residual = (a * c - y).cwiseAbs().maxCoeff();
  if (!(model.residual < fit_residual_limit)) {
    throw SingularSystemError("linear solve residual " + std::to_string(model.residual) +
                              " exceeds 1e-10; the system is too ill-conditioned, increase lambda");
  }
  model.bound = norm_bound(g.entries(), c);
  return model;
}

inline double predict(const KrrModel& model, const DataPoint& x) {
  double h = 0.0;
  for (std::size_t k = 0; k < model.size(); ++k) {
    h += model.coefficients(static_cast<Eigen::Index>(k)) * kernel(model.spec, x, model.points[k]);
  }
  return h;
}

inline std::vector<double> predict(const KrrModel& model, std::span<const DataPoint> xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (const DataPoint& x : xs) out.push_back(predict(model, x));
  return out;
}

struct GeneralizationReport {
  double empirical_error = 0.0;  // mean |h(x) - y| over the test set
  double bound_rhs = 0.0;        // 2B / sqrt(M), M = training size
};

inline double bound_rhs(const KrrModel& model) {
  return 2.0 * model.bound / std::sqrt(static_cast<double>(model.size()));
}

inline GeneralizationReport generalization_report(const KrrModel& model, const LabeledDataset& test) {
  if (test.points.empty()) throw DataError("test set is empty");
  test.validate();
  double err = 0.0;
  for (std::size_t i = 0; i < test.size(); ++i) err += std::abs(predict(model, test.points[i]) - test.labels[i]);
  return {err / static_cast<double>(test.size()), bound_rhs(model)};
}

}  // namespace cvk
