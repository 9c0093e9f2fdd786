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

// Geometry of the normalized feature vectors phi_i with <phi_i, phi_j> = K_ij.

#pragma once

#include <span>
#include <vector>

#include "cvk/kernels.hpp"

namespace cvk {

/// d^2(x, x') = 2 (1 - K(x, x')).
inline double feature_distance(const KernelSpec& spec, const DataPoint& x, const DataPoint& xp) {
  return 2.0 * (1.0 - kernel(spec, x, xp));
}

/// ||mean_i phi_i||^2 = (1/M^2) sum_ij K_ij.
inline double com_norm(const GramMatrix& g) {
  const double m = static_cast<double>(g.size());
  return g.entries().sum() / (m * m);
}

/// (1/M) sum_i ||phi_i - mean||^2, which equals 1 - com_norm for a unit diagonal.
inline double mean_sq_dist_to_com(const GramMatrix& g) {
  const double m = static_cast<double>(g.size());
  return g.entries().trace() / m - com_norm(g);
}

struct GeometryReport {
  Eigen::MatrixXd sq_distances;
  double com_norm = 0.0;
  double mean_sq_dist_to_com = 0.0;
  StateSpec spec;
};

inline GeometryReport geometry_report(const GramMatrix& g) {
  GeometryReport rep;
  const auto m = static_cast<Eigen::Index>(g.size());
  rep.sq_distances = 2.0 * (Eigen::MatrixXd::Ones(m, m) - g.entries());
  rep.sq_distances.diagonal().setZero();
  rep.com_norm = com_norm(g);
  rep.mean_sq_dist_to_com = mean_sq_dist_to_com(g);
  rep.spec = g.spec().state;
  return rep;
}

struct SeparationComparison {
  GeometryReport a;
  GeometryReport b;
  std::size_t pairs = 0;
  std::size_t a_larger = 0;  // pairs with d^2_A > d^2_B
  std::size_t b_larger = 0;
  std::size_t ties = 0;
  /// true when some pairs favour A and others favour B
  [[nodiscard]] bool mixed() const { return a_larger > 0 && b_larger > 0; }
  [[nodiscard]] bool a_disperses_more() const { return a.mean_sq_dist_to_com > b.mean_sq_dist_to_com; }
};

inline SeparationComparison separation_comparison(const KernelSpec& spec_a, const KernelSpec& spec_b,
                                                  std::span<const DataPoint> points) {
  if (points.size() < 2) throw UsageError("separation comparison needs at least two points");
  SeparationComparison out;
  const GramMatrix ga = gram(spec_a, points);
  const GramMatrix gb = gram(spec_b, points);
  out.a = geometry_report(ga);
  out.b = geometry_report(gb);
  const auto m = static_cast<Eigen::Index>(points.size());
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      // 2(1 - K) rounds to 2 once K is tiny, so order by the kernels themselves
      const double ka = ga.entries()(i, j);
      const double kb = gb.entries()(i, j);
      ++out.pairs;
      if (ka < kb) {
        ++out.a_larger;
      } else if (kb < ka) {
        ++out.b_larger;
      } else {
        ++out.ties;
      }
    }
  }
  return out;
}

}  // namespace cvk
