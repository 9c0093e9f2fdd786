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

// First-principles kernel evaluation. Nothing here uses the closed-form
// kernels; these routines are the reference those formulas are checked against.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "cvk/fock.hpp"
#include "cvk/states.hpp"
#include "cvk/types.hpp"

namespace cvk::oracle {

using fock::displacement_matrix;

inline constexpr std::size_t default_cutoff_limit = 256;

/// Uniform n x n grid on [-L, L]^2 in the single-mode alpha plane.
struct PhaseGrid {
  double half_width = 6.0;
  std::size_t resolution = 257;

  void validate() const {
    if (!(half_width > 0.0) || !std::isfinite(half_width)) throw UsageError("grid half-width must be positive");
    if (resolution < 16) throw UsageError("grid resolution must be at least 16 nodes per axis");
  }

  [[nodiscard]] double step() const { return 2.0 * half_width / static_cast<double>(resolution - 1); }
  [[nodiscard]] double node(std::size_t i) const { return -half_width + step() * static_cast<double>(i); }
};

struct NumericOptions {
  double tol = 1e-12;
  std::size_t cutoff_limit = default_cutoff_limit;
};

/// Smallest cutoff at which trace and purity of the lossy state displaced by
/// max_displacement along either quadrature stop moving (by less than tol) when the cutoff is doubled.
inline std::size_t choose_cutoff(const StateSpec& spec, double max_displacement, double tol,
                                 std::size_t limit = default_cutoff_limit) {
  spec.validate();
  if (!(tol > 0.0)) throw UsageError("cutoff tolerance must be positive");
  if (!(max_displacement >= 0.0) || !std::isfinite(max_displacement)) {
    throw UsageError("maximum displacement must be finite and >= 0");
  }
  StateSpec single = spec;
  single.modes = 1;
  const DataPoint shifts[] = {{max_displacement, 0.0}, {0.0, max_displacement}};

  using Probe = std::array<double, 4>;
  auto measure = [&](std::size_t d) -> Probe {
    Probe out{};
    try {
      const FockState base = make_fock_state(single, d, 1.0);
      for (std::size_t i = 0; i < 2; ++i) {
        const FockState s = displace(base, shifts[i]);
        out[2 * i] = s.trace();
        out[2 * i + 1] = purity(s);
      }
    } catch (const CutoffError&) {
      out.fill(std::numeric_limits<double>::quiet_NaN());
    }
    return out;
  };
  // the trace itself must also be whole
  auto close = [tol](const Probe& a, const Probe& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(std::abs(a[i] - b[i]) < tol)) return false;
    }
    return 1.0 - a[0] < tol && 1.0 - a[2] < tol;
  };

  // candidate cutoffs stay within limit; the doubled reference may exceed it
  std::size_t lo = 0;  // fails (or zero)
  std::size_t d = 1;
  Probe reference;
  while (true) {
    reference = measure(2 * d);
    if (close(measure(d), reference)) break;
    if (d >= limit) {
      throw CutoffError("no cutoff up to " + std::to_string(limit) + " converges to " + show(tol) + " for the " +
                        std::string(to_string(spec.family)) + " state displaced by " + show(max_displacement));
    }
    lo = d;
    d = std::min(2 * d, limit);
  }
  std::size_t hi = d;  // passes
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (close(measure(mid), reference)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

inline double max_amplitude(const DataPoint& x) {
  double m = 0.0;
  for (std::size_t j = 0; j < x.modes(); ++j) m = std::max(m, std::abs(x.alpha(j)));
  return m;
}

/// Normalized overlap tr(rho(x) rho(x')) / sqrt(tr rho(x)^2 tr rho(x')^2) for
/// an undisplaced number-basis state.
inline double kernel_numeric(const FockState& base, const DataPoint& x, const DataPoint& xp) {
  x.require_same_modes(xp);
  if (x.modes() != base.modes()) throw UsageError("data point modes do not match the state");
  const FockState a = displace(base, x);
  const FockState b = displace(base, xp);
  double value = 1.0;
  for (std::size_t j = 0; j < base.modes(); ++j) {
    const double cross = fock::overlap(a.matrix(j), b.matrix(j));
    value *= cross / std::sqrt(fock::purity(a.matrix(j)) * fock::purity(b.matrix(j)));
  }
  return value;
}

inline double kernel_numeric(const StateSpec& spec, const DataPoint& x, const DataPoint& xp, std::size_t cutoff,
                             double tol = 1e-10) {
  if (x.modes() != spec.modes) throw UsageError("data point modes do not match the state spec");
  return kernel_numeric(make_fock_state(spec, cutoff, tol), x, xp);
}

inline double kernel_numeric(const StateSpec& spec, const DataPoint& x, const DataPoint& xp,
                             const NumericOptions& opts = {}) {
  const double reach = std::max(max_amplitude(x), max_amplitude(xp));
  const std::size_t cutoff = choose_cutoff(spec, reach, opts.tol, opts.cutoff_limit);
  return kernel_numeric(spec, x, xp, cutoff, 10.0 * opts.tol);
}

/// tr(rho_a rho_b) for Gaussian states: exp(-d^T (S_a + S_b)^{-1} d / 2) / sqrt(det(S_a + S_b)).
inline double gaussian_overlap(const GaussianState& a, const GaussianState& b) {
  if (a.modes() != b.modes()) throw UsageError("gaussian states have different mode counts");
  const Eigen::MatrixXd sum = a.covariance() + b.covariance();
  const Eigen::VectorXd delta = a.mean() - b.mean();
  Eigen::LLT<Eigen::MatrixXd> llt(sum);
  const double sqrt_det = llt.matrixL().toDenseMatrix().diagonal().prod();
  return std::exp(-0.5 * delta.dot(llt.solve(delta))) / sqrt_det;
}

/// Moment-formula route for the Gaussian families.
inline double kernel_gaussian(const StateSpec& spec, const DataPoint& x, const DataPoint& xp) {
  x.require_same_modes(xp);
  if (x.modes() != spec.modes) throw UsageError("data point modes do not match the state spec");
  const GaussianState base = make_gaussian_state(spec);
  const GaussianState a = displace(base, x);
  const GaussianState b = displace(base, xp);
  return gaussian_overlap(a, b) / std::sqrt(gaussian_overlap(a, a) * gaussian_overlap(b, b));
}

struct OverlapResult {
  double value = 0.0;
  /// |full grid - every-other-node grid|; NaN when the resolution is even.
  double quadrature_error = 0.0;
  double boundary_max = 0.0;
};

inline PhaseGrid default_grid(const StateSpec& spec, const DataPoint& x, const DataPoint& xp) {
  const State s = make_state(spec);
  const double reach = std::max(max_amplitude(x), max_amplitude(xp));
  return {4.0 + reach + 4.0 * max_std(s), 257};
}

/// Kernel from tr(AB) = pi * integral W_A W_B d^2 alpha, trapezoidal rule on a
/// single-mode grid. Gaussian families use moment-formula Wigner values, the
/// single photon the number-basis series.
inline OverlapResult kernel_via_overlap(const StateSpec& spec, const DataPoint& x, const DataPoint& xp,
                                        const PhaseGrid& grid, double boundary_limit = 1e-12) {
  grid.validate();
  x.require_same_modes(xp);
  if (spec.modes != 1 || x.modes() != 1) throw UsageError("the quadrature route handles single-mode states only");

  State base = make_state(spec);
  if (std::holds_alternative<FockState>(base)) {
    const double reach = std::max(max_amplitude(x), max_amplitude(xp));
    const std::size_t cutoff = choose_cutoff(spec, reach, 1e-13);
    base = make_fock_state(spec, cutoff, 1e-12);
  }
  const State a = displace(base, x);
  const State b = displace(base, xp);

  const std::size_t n = grid.resolution;
  // trapezoid sums: full grid and every other node
  double ab = 0.0, aa = 0.0, bb = 0.0;
  double ab2 = 0.0, aa2 = 0.0, bb2 = 0.0;
  double boundary = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double wi = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double wj = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
      const DataPoint p{grid.node(i), grid.node(j)};
      const double wa = wigner(a, p);
      const double wb = wigner(b, p);
      const double w = wi * wj;
      ab += w * wa * wb;
      aa += w * wa * wa;
      bb += w * wb * wb;
      if (i % 2 == 0 && j % 2 == 0) {
        ab2 += w * wa * wb;
        aa2 += w * wa * wa;
        bb2 += w * wb * wb;
      }
      if (i == 0 || j == 0 || i + 1 == n || j + 1 == n) {
        boundary = std::max({boundary, std::abs(wa), std::abs(wb)});
      }
    }
  }
  if (boundary >= boundary_limit) {
    throw GridError("Wigner magnitude " + std::to_string(boundary) + " on the grid boundary exceeds " +
                    std::to_string(boundary_limit) + "; enlarge the half-width");
  }
  OverlapResult out;
  out.value = ab / std::sqrt(aa * bb);
  out.boundary_max = boundary;
  if (n % 2 == 1) {
    out.quadrature_error = std::abs(out.value - ab2 / std::sqrt(aa2 * bb2));
  } else {
    out.quadrature_error = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

inline OverlapResult kernel_via_overlap(const StateSpec& spec, const DataPoint& x, const DataPoint& xp) {
  return kernel_via_overlap(spec, x, xp, default_grid(spec, x, xp));
}

/// Unnormalized tr(rho^2) by quadrature, pi * integral W^2 d^2 alpha.
inline double purity_via_overlap(const State& s, const PhaseGrid& grid) {
  grid.validate();
  if (modes(s) != 1) throw UsageError("the quadrature route handles single-mode states only");
  const std::size_t n = grid.resolution;
  const double h = grid.step();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double wi = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double wj = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
      const double w = wigner(s, DataPoint{grid.node(i), grid.node(j)});
      acc += wi * wj * w * w;
    }
  }
  return pi * acc * h * h;
}

/// Integral of W over the grid (the trace).
inline double wigner_integral(const State& s, const PhaseGrid& grid) {
  grid.validate();
  if (modes(s) != 1) throw UsageError("the quadrature route handles single-mode states only");
  const std::size_t n = grid.resolution;
  const double h = grid.step();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double wi = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double wj = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
      acc += wi * wj * wigner(s, DataPoint{grid.node(i), grid.node(j)});
    }
  }
  return acc * h * h;
}

struct InequalityMargin {
  DataPoint alpha;
  DataPoint alpha_prime;
  double left = 0.0;
  double right = 0.0;
  double margin = 0.0;
};

/// W(a) W(a') - e^{-|a - a'|^2} W((a + a')/2)^2; negative values certify a
/// nonclassical state.
inline InequalityMargin check_phase_space_inequality(const State& s, const DataPoint& alpha,
                                                     const DataPoint& alpha_prime) {
  alpha.require_same_modes(alpha_prime);
  const DataPoint mid = 0.5 * (alpha + alpha_prime);
  const double w_mid = wigner(s, mid);
  InequalityMargin out{alpha, alpha_prime, 0.0, 0.0, 0.0};
  out.left = wigner(s, alpha) * wigner(s, alpha_prime);
  out.right = std::exp(-distance_sq(alpha, alpha_prime)) * w_mid * w_mid;
  out.margin = out.left - out.right;
  return out;
}

inline InequalityMargin check_phase_space_inequality(const StateSpec& spec, const DataPoint& alpha,
                                                     const DataPoint& alpha_prime) {
  return check_phase_space_inequality(make_state(spec), alpha, alpha_prime);
}

}  // namespace cvk::oracle
