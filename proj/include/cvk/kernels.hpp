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

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cvk/oracle.hpp"
#include "cvk/states.hpp"
#include "cvk/types.hpp"

namespace cvk {

enum class EvaluationMode { analytic, numeric_fock, numeric_wigner };

inline std::string_view to_string(EvaluationMode m) {
  switch (m) {
    case EvaluationMode::analytic: return "analytic";
    case EvaluationMode::numeric_fock: return "numeric-fock";
    case EvaluationMode::numeric_wigner: return "numeric-wigner";
  }
  return "unknown";
}

inline EvaluationMode parse_mode(std::string_view name) {
  if (name == "analytic") return EvaluationMode::analytic;
  if (name == "numeric-fock" || name == "fock") return EvaluationMode::numeric_fock;
  if (name == "numeric-wigner" || name == "wigner") return EvaluationMode::numeric_wigner;
  throw UsageError("unknown evaluation mode '" + std::string(name) + "'");
}

struct KernelSpec {
  StateSpec state;
  EvaluationMode mode = EvaluationMode::analytic;
  oracle::NumericOptions numeric{};
};

// Closed forms. Multi-mode points multiply the per-mode factors.

inline double kernel_coherent(const DataPoint& x, const DataPoint& xp) { return std::exp(-distance_sq(x, xp)); }

inline double classical_bound(const DataPoint& x, const DataPoint& xp) { return std::exp(-distance_sq(x, xp)); }

inline double kernel_squeezed(const DataPoint& x, const DataPoint& xp, double r, double eta) {
  require_transmissivity(eta);
  x.require_same_modes(xp);
  const double width_q = 1.0 - eta * (1.0 - std::exp(-2.0 * r));
  const double width_p = 1.0 - eta * (1.0 - std::exp(2.0 * r));
  double exponent = 0.0;
  for (std::size_t j = 0; j < x.modes(); ++j) {
    const double d1 = x[2 * j] - xp[2 * j];
    const double d2 = x[2 * j + 1] - xp[2 * j + 1];
    exponent += d1 * d1 / width_q + d2 * d2 / width_p;
  }
  return std::exp(-exponent);
}

inline double kernel_single_photon(const DataPoint& x, const DataPoint& xp, double eta) {
  require_transmissivity(eta);
  x.require_same_modes(xp);
  const double norm = 1.0 - 2.0 * eta + 2.0 * eta * eta;
  double value = 1.0;
  for (std::size_t j = 0; j < x.modes(); ++j) {
    const double b = std::norm(x.alpha(j) - xp.alpha(j));
    value *= std::exp(-b) / norm * (1.0 - 2.0 * eta * (1.0 - eta) + eta * b * (2.0 - eta * (4.0 - b)));
  }
  return value;
}

/// Thermal reference family: exp(-|x - x'|^2 / (2 nbar + 1)).
inline double kernel_thermal(const DataPoint& x, const DataPoint& xp, double nbar) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) throw UsageError("thermal occupation must be finite and >= 0");
  return std::exp(-distance_sq(x, xp) / (2.0 * nbar + 1.0));
}

inline double kernel_analytic(const StateSpec& s, const DataPoint& x, const DataPoint& xp) {
  s.validate();
  switch (s.family) {
    case Family::coherent: x.require_same_modes(xp); return kernel_coherent(x, xp);
    case Family::squeezed: return kernel_squeezed(x, xp, s.r, s.eta);
    case Family::single_photon: return kernel_single_photon(x, xp, s.eta);
    // loss maps a thermal state with nbar to one with eta * nbar
    case Family::thermal: return kernel_thermal(x, xp, s.eta * s.nbar);
  }
  throw UsageError("unsupported state family");
}

inline double kernel(const KernelSpec& spec, const DataPoint& x, const DataPoint& xp) {
  if (x.modes() != spec.state.modes || xp.modes() != spec.state.modes) {
    throw UsageError("data point has " + std::to_string(x.modes()) + " modes, kernel expects " +
                     std::to_string(spec.state.modes));
  }
  switch (spec.mode) {
    case EvaluationMode::analytic: return kernel_analytic(spec.state, x, xp);
    case EvaluationMode::numeric_fock: return oracle::kernel_numeric(spec.state, x, xp, spec.numeric);
    case EvaluationMode::numeric_wigner: return oracle::kernel_via_overlap(spec.state, x, xp).value;
  }
  throw UsageError("unsupported evaluation mode");
}

/// K(x, x') - e^{-|x - x'|^2}. Never negative for classical kernels.
inline double witness(const KernelSpec& spec, const DataPoint& x, const DataPoint& xp) {
  return kernel(spec, x, xp) - classical_bound(x, xp);
}

/// Offsets t * e_axis for t evenly spaced in [start, stop].
inline std::vector<DataPoint> axis_offsets(std::size_t modes, std::size_t axis, double start, double stop,
                                           std::size_t steps) {
  if (axis >= 2 * modes) throw UsageError("scan axis out of range");
  if (steps == 0) throw UsageError("scan needs at least one step");
  std::vector<DataPoint> out;
  out.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = steps == 1 ? start : start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
    std::vector<double> c(2 * modes, 0.0);
    c[axis] = t;
    out.emplace_back(std::move(c));
  }
  return out;
}

/// Offsets along an axis whose squared lengths are evenly spaced in [sq_start, sq_stop].
inline std::vector<DataPoint> squared_offsets(std::size_t modes, std::size_t axis, double sq_start, double sq_stop,
                                              std::size_t steps) {
  if (sq_start < 0.0 || sq_stop < 0.0) throw UsageError("squared distances must be non-negative");
  std::vector<DataPoint> out = axis_offsets(modes, axis, sq_start, sq_stop, steps);
  for (DataPoint& p : out) {
    std::vector<double> c(p.coords().begin(), p.coords().end());
    c[axis] = std::sqrt(c[axis]);
    p = DataPoint(std::move(c));
  }
  return out;
}

struct WitnessReport {
  std::vector<DataPoint> offsets;
  std::vector<double> kernel;
  std::vector<double> bound;
  std::vector<double> witness;
  double min_witness = 0.0;
  std::size_t argmin = 0;

  [[nodiscard]] const DataPoint& argmin_offset() const { return offsets.at(argmin); }
};

/// Evaluates K(x0, x0 + d), the bound and the witness for every offset d.
/// Ties for the minimum go to the smaller |d|.
inline WitnessReport witness_scan(const KernelSpec& spec, std::span<const DataPoint> offsets,
                                  const DataPoint& origin) {
  if (offsets.empty()) throw UsageError("witness scan needs at least one offset");
  WitnessReport rep;
  rep.offsets.assign(offsets.begin(), offsets.end());
  rep.kernel.reserve(offsets.size());
  rep.bound.reserve(offsets.size());
  rep.witness.reserve(offsets.size());
  rep.min_witness = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const DataPoint xp = origin + offsets[i];
    const double k = kernel(spec, origin, xp);
    const double b = classical_bound(origin, xp);
    rep.kernel.push_back(k);
    rep.bound.push_back(b);
    rep.witness.push_back(k - b);
    const double w = rep.witness.back();
    if (w < rep.min_witness || (w == rep.min_witness && offsets[i].norm_sq() < offsets[rep.argmin].norm_sq())) {
      rep.min_witness = w;
      rep.argmin = i;
    }
  }
  return rep;
}

inline WitnessReport witness_scan(const KernelSpec& spec, std::span<const DataPoint> offsets) {
  if (offsets.empty()) throw UsageError("witness scan needs at least one offset");
  return witness_scan(spec, offsets, DataPoint::zeros(offsets.front().modes()));
}

inline constexpr double psd_tolerance = 1e-9;

/// Symmetric unit-diagonal kernel matrix over a point set.
class GramMatrix {
 public:
  GramMatrix(Eigen::MatrixXd entries, std::vector<DataPoint> points, KernelSpec spec)
      : entries_(std::move(entries)), points_(std::move(points)), spec_(std::move(spec)) {
    const Eigen::Index m = entries_.rows();
    if (m == 0 || entries_.cols() != m || static_cast<std::size_t>(m) != points_.size()) {
      throw DataError("gram matrix shape does not match its point set");
    }
    if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw DataError("gram matrix is not symmetric");
    if ((entries_.diagonal().array() - 1.0).abs().maxCoeff() > 1e-12) {
      throw DataError("gram matrix diagonal is not one");
    }
    const Eigen::MatrixXd sym = 0.5 * (entries_ + entries_.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
    min_eigenvalue_ = es.eigenvalues().minCoeff();
    max_eigenvalue_ = es.eigenvalues().maxCoeff();
    if (min_eigenvalue_ < -psd_tolerance) {
      throw DataError("gram matrix is not positive semidefinite (minimum eigenvalue " + show(min_eigenvalue_) +
                      ")");
    }
  }

  [[nodiscard]] const Eigen::MatrixXd& entries() const { return entries_; }
  [[nodiscard]] const std::vector<DataPoint>& points() const { return points_; }
  [[nodiscard]] const KernelSpec& spec() const { return spec_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  [[nodiscard]] double min_eigenvalue() const { return min_eigenvalue_; }
  [[nodiscard]] double max_eigenvalue() const { return max_eigenvalue_; }

 private:
  Eigen::MatrixXd entries_;
  std::vector<DataPoint> points_;
  KernelSpec spec_;
  double min_eigenvalue_ = 0.0;
  double max_eigenvalue_ = 0.0;
};

/// Row-major upper-triangle evaluation mirrored to the lower triangle; the
/// diagonal is pinned to one.
inline GramMatrix gram(const KernelSpec& spec, std::span<const DataPoint> points) {
  if (points.empty()) throw UsageError("gram matrix needs at least one point");
  for (const DataPoint& p : points) {
    if (p.modes() != spec.state.modes) throw UsageError("data point modes do not match the kernel spec");
  }
  const auto m = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd k = Eigen::MatrixXd::Identity(m, m);

  if (spec.mode == EvaluationMode::numeric_fock) {
    // one cutoff and one displaced state per point
    double reach = 0.0;
    for (const DataPoint& p : points) reach = std::max(reach, oracle::max_amplitude(p));
    const std::size_t cutoff = oracle::choose_cutoff(spec.state, reach, spec.numeric.tol, spec.numeric.cutoff_limit);
    const FockState base = make_fock_state(spec.state, cutoff, 10.0 * spec.numeric.tol);
    std::vector<FockState> shifted;
    shifted.reserve(points.size());
    for (const DataPoint& p : points) shifted.push_back(displace(base, p));
    std::vector<double> norms;
    for (const FockState& s : shifted) norms.push_back(purity(s));
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = i + 1; j < m; ++j) {
        const auto& a = shifted[static_cast<std::size_t>(i)];
        const auto& b = shifted[static_cast<std::size_t>(j)];
        double v = 1.0;
        for (std::size_t mode = 0; mode < a.modes(); ++mode) v *= fock::overlap(a.matrix(mode), b.matrix(mode));
        k(i, j) = k(j, i) = v / std::sqrt(norms[static_cast<std::size_t>(i)] * norms[static_cast<std::size_t>(j)]);
      }
    }
  } else {
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = i + 1; j < m; ++j) {
        k(i, j) = k(j, i) = kernel(spec, points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
      }
    }
  }
  return {std::move(k), std::vector<DataPoint>(points.begin(), points.end()), spec};
}

}  // namespace cvk
